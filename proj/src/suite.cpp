#include "hsholevo/suite.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <limits>
#include <thread>

#include "hsholevo/info_measures.hpp"
#include "hsholevo/quantum_objects.hpp"
#include "hsholevo/rng.hpp"
#include "hsholevo/sampling.hpp"
#include "hsholevo/version.hpp"

namespace hsholevo {

namespace {

constexpr std::size_t max_counterexamples = 16;

std::size_t resolve_threads(std::size_t requested, std::uint64_t trials) {
    std::size_t threads = requested;
    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0) {
            threads = 1;
        }
    }
    if (trials < threads) {
        threads = static_cast<std::size_t>(trials);
    }
    return std::max<std::size_t>(threads, 1);
}

// Runs fn(trial) for trial in [0, trials) with a strided partition. Each
// trial derives its own rng stream, so the result set is independent of the
// thread count.
template <typename Fn>
void run_strided(std::size_t threads, std::uint64_t trials, Fn fn) {
    if (threads <= 1) {
        for (std::uint64_t t = 0; t < trials; ++t) {
            fn(t);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::uint64_t t = w; t < trials; t += threads) {
                    fn(t);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (const auto& err : errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }
}

void aggregate(CheckReport& report) {
    for (std::size_t idx = 0; idx < report.trials.size(); ++idx) {
        auto& record = report.trials[idx];
        for (const auto& named : record.margins) {
            auto it = std::find_if(
                report.margins.begin(), report.margins.end(),
                [&](const MarginSummary& s) { return s.name == named.name; });
            if (it == report.margins.end()) {
                MarginSummary fresh;
                fresh.name = named.name;
                fresh.klass = named.klass;
                fresh.min_margin = std::numeric_limits<double>::infinity();
                report.margins.push_back(std::move(fresh));
                it = std::prev(report.margins.end());
            }
            ++it->count;
            if (!named.margin.satisfied) {
                ++it->violations;
            }
            it->min_margin = std::min(it->min_margin, named.margin.margin);
            it->mean_margin += named.margin.margin;
        }
        if (record.counterexample.has_value()) {
            if (report.counterexamples.size() < max_counterexamples) {
                report.counterexamples.push_back(idx);
            } else {
                record.counterexample.reset();
            }
        }
    }
    for (auto& summary : report.margins) {
        if (summary.count > 0) {
            summary.mean_margin /= static_cast<double>(summary.count);
        } else {
            summary.min_margin = 0.0;
        }
    }
}

} // namespace

std::uint64_t CheckReport::violation_count(MarginClass klass) const {
    std::uint64_t total = 0;
    for (const auto& summary : margins) {
        if (summary.klass == klass) {
            total += summary.violations;
        }
    }
    return total;
}

const MarginSummary*
CheckReport::find_margin(const std::string& margin_name) const {
    for (const auto& summary : margins) {
        if (summary.name == margin_name) {
            return &summary;
        }
    }
    return nullptr;
}

std::uint64_t VerificationReport::violation_count(MarginClass klass) const {
    std::uint64_t total = 0;
    for (const auto& check : checks) {
        total += check.violation_count(klass);
    }
    return total;
}

const CheckReport*
VerificationReport::find_check(const std::string& check_name) const {
    for (const auto& check : checks) {
        if (check.name == check_name) {
            return &check;
        }
    }
    return nullptr;
}

int VerificationReport::exit_code() const {
    return violation_count(MarginClass::Proven) > 0 ? 1 : 0;
}

VerificationReport run_suite(const RunConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    VerificationReport report;
    report.config = config;
    report.version = kVersion;

    const auto defs = suite_checks(config.inject_violation);
    const std::size_t threads = resolve_threads(config.threads, config.trials);

    for (const auto& def : defs) {
        CheckReport check;
        check.name = def.name;
        check.trials.resize(config.trials);
        run_strided(threads, config.trials, [&](std::uint64_t t) {
            check.trials[t] = def.run(config, t);
        });
        aggregate(check);
        report.checks.push_back(std::move(check));
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

int CompareReport::exit_code() const {
    return (hs_violations > 0 || shannon_violations > 0) ? 1 : 0;
}

CompareReport run_compare(const RunConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    CompareReport report;
    report.config = config;
    report.version = kVersion;
    report.rows.resize(config.trials);

    const std::uint64_t salt = salt_from_name("compare-bounds");
    const std::size_t threads = resolve_threads(config.threads, config.trials);
    run_strided(threads, config.trials, [&](std::uint64_t t) {
        TrialRng rng(config.seed, salt, t);
        CompareRow row;
        row.trial = t;
        row.n = config.dims_p[rng.uniform_index(config.dims_p.size())];
        row.q = config.dims_q[rng.uniform_index(config.dims_q.size())];
        row.blocks = 1 + rng.uniform_index(row.q);

        const auto ensemble = sample_ensemble(row.n, row.q, config.mode, rng);
        const auto measurement =
            sample_projective_measurement(row.q, row.blocks, rng);
        const auto joint = induced_joint(ensemble, measurement);

        row.hs_scaled_classical =
            hs_mutual_classical(joint) / static_cast<double>(row.q);
        row.hs_quantum = hs_mutual_quantum(ensemble);
        row.shannon_bits = shannon_mutual(joint);
        row.holevo_bits = holevo_chi(ensemble);
        row.hs_satisfied = make_margin(row.hs_scaled_classical, row.hs_quantum,
                                       config.tol_ineq)
                               .satisfied;
        row.shannon_satisfied =
            make_margin(row.shannon_bits, row.holevo_bits, config.tol_ineq)
                .satisfied;
        report.rows[t] = std::move(row);
    });

    for (const auto& row : report.rows) {
        if (!row.hs_satisfied) {
            ++report.hs_violations;
        }
        if (!row.shannon_satisfied) {
            ++report.shannon_violations;
        }
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

} // namespace hsholevo
