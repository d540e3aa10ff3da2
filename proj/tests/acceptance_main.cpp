// Acceptance gate: one pass/fail line per criterion, with the measured
// numbers behind each verdict printed as indented detail lines. Exits
// with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "hsholevo/checks.hpp"
#include "hsholevo/suite.hpp"
#include "hsholevo/sweep.hpp"

using namespace hsholevo;

namespace {

constexpr std::uint64_t acceptance_seed = 42;
constexpr std::uint64_t trials_per_mode = 3500;
const EnsembleMode all_modes[] = {EnsembleMode::Pure, EnsembleMode::Mixed,
                                  EnsembleMode::MixedRanks};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

RunConfig mode_config(EnsembleMode mode, std::uint64_t trials) {
    RunConfig cfg;
    cfg.seed = acceptance_seed;
    cfg.trials = trials;
    cfg.mode = mode;
    cfg.threads = 0;
    return cfg;
}

bool criterion_example(std::ostringstream& info) {
    const auto start = std::chrono::steady_clock::now();
    const auto sweep = run_sweep(181);
    const double elapsed = seconds_since(start);

    const auto& quarter = sweep.rows[45];  // theta = pi/4
    const auto& half = sweep.rows[90];     // theta = pi/2

    const double tol = 1e-12;
    bool ok = true;
    ok &= sweep.max_eigenvalue_dev <= tol;
    ok &= sweep.max_entropy_dev <= tol;
    ok &= sweep.bound_violations == 0;
    ok &= std::abs(quarter.d_classical - 1.0 / 32) <= tol;
    ok &= std::abs(quarter.d_quantum - 1.0 / 16) <= tol;
    ok &= std::abs(half.d_classical - 1.0 / 8) <= tol;
    ok &= std::abs(half.d_quantum - 1.0 / 8) <= tol;
    ok &= elapsed < 1.0;

    info << "  - eigenvalue closed-form deviation: " << sweep.max_eigenvalue_dev
         << ", purity-deficit deviation: " << sweep.max_entropy_dev << "\n";
    info << "  - quarter-sine-squared bound violations on [0, pi/2]: "
         << sweep.bound_violations << "\n";
    info << "  - half-overlap point (theta = pi/4): classical "
         << quarter.d_classical << " (expect 1/32), quantum "
         << quarter.d_quantum << " (expect 1/16)\n";
    info << "  - orthogonal point (theta = pi/2): classical "
         << half.d_classical << ", quantum " << half.d_quantum
         << " (both expect 1/8)\n";
    info << "  - note: 1/32 is the classical value of the half-overlap "
            "instance; at theta = pi/2 the classical and quantum values "
            "coincide at 1/8 (confirmed by the independent recomputation "
            "both ways)\n";
    info << "  - runtime: " << elapsed << " s (budget 1 s)\n";
    return ok;
}

struct MarginTally {
    std::uint64_t count = 0;
    std::uint64_t violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
};

bool criterion_theorem_suites(std::ostringstream& info) {
    const char* theorem_margins[] = {
        "projective-contraction",
        "mixture-convexity",
        "reduced-state-monotonicity",
        "scaled-classical-vs-quantum",
    };

    const auto start = std::chrono::steady_clock::now();
    std::vector<MarginTally> tallies(4);
    for (const auto mode : all_modes) {
        const auto report = run_suite(mode_config(mode, trials_per_mode));
        for (std::size_t i = 0; i < 4; ++i) {
            for (const auto& check : report.checks) {
                const auto* summary = check.find_margin(theorem_margins[i]);
                if (summary == nullptr) {
                    continue;
                }
                tallies[i].count += summary->count;
                tallies[i].violations += summary->violations;
                tallies[i].min_margin =
                    std::min(tallies[i].min_margin, summary->min_margin);
            }
        }
    }
    const double elapsed = seconds_since(start);

    bool ok = elapsed < 120.0;
    for (std::size_t i = 0; i < 4; ++i) {
        ok &= tallies[i].count >= 10000;
        ok &= tallies[i].violations == 0;
        info << "  - " << theorem_margins[i] << ": " << tallies[i].count
             << " trials, " << tallies[i].violations
             << " violations, min margin " << tallies[i].min_margin << "\n";
    }
    info << "  - dims 2..5 x 2..6, block counts 1..q, all three state "
            "modes; runtime "
         << elapsed << " s (budget 120 s)\n";
    return ok;
}

bool criterion_exact_identities(std::ostringstream& info) {
    bool ok = true;

    // (a) The padded-reduction route agrees with the scaled route on
    // every monotonicity trial (same streams the randomized suite runs).
    double worst_route = 0.0;
    for (const auto mode : all_modes) {
        const auto cfg = mode_config(mode, trials_per_mode);
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            const auto record = check_partial_trace_monotonicity(cfg, t);
            for (const auto& named : record.margins) {
                if (std::strcmp(named.name, "scaled-route-agreement") == 0) {
                    worst_route = std::max(worst_route, named.margin.lhs);
                }
            }
        }
    }
    ok &= worst_route <= 1e-12;
    info << "  - padded vs scaled reduction routes: max deviation "
         << worst_route << " over " << 3 * trials_per_mode
         << " trials (bound 1e-12)\n";

    // (b) Purity-deficit product rule on tensor products.
    TrialRng product_rng(acceptance_seed,
                         salt_from_name("acceptance-product-rule"), 0);
    double worst_product = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t da = 2 + product_rng.uniform_index(4);
        const std::size_t db = 2 + product_rng.uniform_index(4);
        const auto a = sample_density(da, EnsembleMode::MixedRanks,
                                      product_rng);
        const auto b = sample_density(db, EnsembleMode::MixedRanks,
                                      product_rng);
        const auto prod =
            DensityMatrix::trusted(kron(a.matrix(), b.matrix()));
        const double la = logical_entropy(a);
        const double lb = logical_entropy(b);
        worst_product = std::max(
            worst_product,
            std::abs(logical_entropy(prod) - (la + lb - la * lb)));
    }
    ok &= worst_product <= 1e-12;
    info << "  - product rule L(a x b) = L(a) + L(b) - L(a)L(b): max "
            "deviation "
         << worst_product << " over 1000 pairs (bound 1e-12)\n";

    // (c) The diagonal embedding preserves the classical divergence.
    TrialRng embed_rng(acceptance_seed,
                       salt_from_name("acceptance-embedding"), 0);
    double worst_embed = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t rows = 2 + embed_rng.uniform_index(3);
        const std::size_t cols = 2 + embed_rng.uniform_index(3);
        const auto p = sample_simplex(rows * cols, embed_rng);
        const auto q = sample_simplex(rows * cols, embed_rng);
        const auto jp = JointDistribution::validated(rows, cols, p);
        const auto jq = JointDistribution::validated(rows, cols, q);
        const double direct = classical_hs_divergence(p, q);
        const double embedded = hs_divergence(classical_diag_embedding(jp),
                                              classical_diag_embedding(jq));
        worst_embed = std::max(worst_embed, std::abs(direct - embedded));
    }
    ok &= worst_embed <= 1e-14;
    info << "  - diagonal embedding equality: max deviation " << worst_embed
         << " over 1000 distribution pairs (bound 1e-14)\n";
    return ok;
}

bool criterion_identity_audit(std::ostringstream& info) {
    const auto report =
        run_suite(mode_config(EnsembleMode::MixedRanks, 2000));

    // (a) As stated: the residual must vanish on every orthogonal-support
    // trial. The measured residuals and their closed form are printed so
    // the verdict is self-explanatory.
    const auto* orthogonal = report.find_check("cross-entropy-orthogonal");
    if (orthogonal == nullptr) {
        info << "  - orthogonal-support check missing\n";
        return false;
    }
    double min_res = std::numeric_limits<double>::infinity();
    double max_res = 0.0;
    double worst_agreement = 0.0;
    for (const auto& record : orthogonal->trials) {
        for (const auto& named : record.margins) {
            if (std::strcmp(named.name, "cross-entropy-identity") == 0) {
                min_res = std::min(min_res, named.margin.lhs);
                max_res = std::max(max_res, named.margin.lhs);
            }
            if (std::strcmp(named.name, "residual-closed-form-agreement") ==
                0) {
                worst_agreement =
                    std::max(worst_agreement, named.margin.lhs);
            }
        }
    }
    const bool part_a = max_res < 1e-12;
    info << "  - (a) orthogonal-support residual over "
         << orthogonal->trials.size() << " trials: min " << min_res
         << ", max " << max_res << " (required < 1e-12; "
         << (part_a ? "satisfied" : "NOT satisfied") << ")\n";
    info << "  - (a) measured residual matches the closed form sum_x "
            "p(x)^2 (1 - p(x)) tr(state_x^2) within "
         << worst_agreement
         << "; the residual is strictly positive whenever signals are "
            "orthogonal and non-degenerate, so the required vanishing is "
            "unattainable on this family (the identity holds on the "
            "identical-signal family instead)\n";

    const auto* identical = report.find_check("cross-entropy-identical");
    double max_same = 0.0;
    if (identical != nullptr) {
        for (const auto& record : identical->trials) {
            for (const auto& named : record.margins) {
                if (std::strcmp(named.name, "cross-entropy-identity") == 0) {
                    max_same = std::max(max_same, named.margin.lhs);
                }
            }
        }
    }
    info << "  - (a) identical-signal residual stays at " << max_same
         << " over 2000 trials (the exact-zero family)\n";

    // (b) A recorded overlapping counterexample with residual > 0.1 and a
    // full payload.
    const auto* overlapping = report.find_check("cross-entropy-overlapping");
    bool part_b = false;
    double witness_residual = 0.0;
    if (overlapping != nullptr) {
        for (const auto idx : overlapping->counterexamples) {
            const auto& record = overlapping->trials[idx];
            if (!record.counterexample.has_value()) {
                continue;
            }
            for (const auto& named : record.margins) {
                if (std::strcmp(named.name, "cross-entropy-identity") == 0 &&
                    named.margin.lhs > 0.1) {
                    part_b = true;
                    witness_residual = named.margin.lhs;
                }
            }
            if (part_b) {
                break;
            }
        }
    }
    info << "  - (b) overlapping pure-signal counterexample with residual "
         << witness_residual << " > 0.1 recorded with full payload: "
         << (part_b ? "yes" : "no")
         << " (orthogonal-support payloads recorded: "
         << (orthogonal->counterexamples.empty() ? "no" : "yes") << ")\n";

    // Final-bound violation counts are data, not a verdict.
    std::uint64_t scaled_violations = 0;
    std::uint64_t quantum_violations = 0;
    std::uint64_t scaled_count = 0;
    for (const auto& check : report.checks) {
        if (const auto* s =
                check.find_margin("scaled-classical-vs-entropy-product")) {
            scaled_violations += s->violations;
            scaled_count += s->count;
        }
        if (const auto* s = check.find_margin("quantum-vs-entropy-product")) {
            quantum_violations += s->violations;
        }
    }
    info << "  - final-bound violation counts (reported as data, no "
            "verdict): scaled classical "
         << scaled_violations << ", quantum side " << quantum_violations
         << " over " << scaled_count << " trials\n";

    return part_a && part_b;
}

bool criterion_entropy_sanity(std::ostringstream& info) {
    std::uint64_t violations = 0;
    std::uint64_t count = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (const auto mode : all_modes) {
        const auto cfg = mode_config(mode, trials_per_mode);
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            const auto record = check_mutual_info_bound(cfg, t);
            for (const auto& named : record.margins) {
                if (std::strcmp(named.name, "shannon-vs-holevo") == 0) {
                    ++count;
                    violations += named.margin.satisfied ? 0 : 1;
                    min_margin = std::min(min_margin, named.margin.margin);
                }
            }
        }
    }
    info << "  - measured mutual information vs ensemble bound: " << count
         << " trials, " << violations << " violations, min margin "
         << min_margin << " (tolerance 1e-9)\n";
    return violations == 0 && count >= 10000;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(HSH_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) {
        return -1;
    }
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool criterion_determinism(std::ostringstream& info) {
    const std::string base = "--seed 7 --trials 400 --format csv";
    bool ok = true;
    ok &= run_cli("verify " + base + " --threads 1 --out acc_det_a.csv") == 0;
    ok &= run_cli("verify " + base + " --threads 1 --out acc_det_b.csv") == 0;
    ok &= run_cli("verify " + base + " --threads 4 --out acc_det_c.csv") == 0;

    const auto a = slurp("acc_det_a.csv");
    const bool rerun_same = !a.empty() && a == slurp("acc_det_b.csv");
    const bool threads_same = !a.empty() && a == slurp("acc_det_c.csv");
    ok &= rerun_same;
    ok &= threads_same;
    info << "  - identical config and seed, two runs: "
         << (rerun_same ? "byte-identical" : "DIFFER") << " ("
         << a.size() << " bytes)\n";
    info << "  - one worker thread vs four: "
         << (threads_same ? "byte-identical" : "DIFFER") << "\n";

    ok &= run_cli("compare --seed 7 --trials 200 --out acc_det_d.csv") == 0;
    ok &= run_cli("compare --seed 7 --trials 200 --threads 4 "
                  "--out acc_det_e.csv") == 0;
    const auto d = slurp("acc_det_d.csv");
    const bool compare_same = !d.empty() && d == slurp("acc_det_e.csv");
    ok &= compare_same;
    info << "  - comparison rows, serial vs threaded: "
         << (compare_same ? "byte-identical" : "DIFFER") << "\n";
    return ok;
}

struct Criterion {
    int id;
    const char* label;
    bool (*run)(std::ostringstream&);
};

const Criterion criteria[] = {
    {1, "worked-example reproduction on a 181-point grid", criterion_example},
    {2, "randomized inequality margins across 10500 trials per theorem",
     criterion_theorem_suites},
    {3, "exact identities (reduction route, product rule, embedding)",
     criterion_exact_identities},
    {4, "identity-residual audit with recorded counterexamples",
     criterion_identity_audit},
    {5, "measured mutual information never beats the ensemble bound",
     criterion_entropy_sanity},
    {6, "byte-deterministic reports across reruns and thread counts",
     criterion_determinism},
};

} // namespace

int main(int argc, char** argv) {
    int selected = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected = std::atoi(argv[i + 1]);
            ++i;
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }

    int failures = 0;
    for (const auto& criterion : criteria) {
        if (selected != 0 && criterion.id != selected) {
            continue;
        }
        std::ostringstream info;
        bool ok = false;
        try {
            ok = criterion.run(info);
        } catch (const std::exception& e) {
            info << "  - unexpected error: " << e.what() << "\n";
            ok = false;
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion "
                  << criterion.id << ": " << criterion.label << "\n"
                  << info.str();
        std::cout.flush();
        if (!ok) {
            ++failures;
        }
    }
    return failures;
}
