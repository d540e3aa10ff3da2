#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "hsholevo/checks.hpp"
#include "hsholevo/suite.hpp"

using namespace hsholevo;

namespace {

RunConfig small_config() {
    RunConfig cfg;
    cfg.seed = 42;
    cfg.trials = 200;
    cfg.dims_p = {2, 3};
    cfg.dims_q = {2, 3, 4};
    cfg.mode = EnsembleMode::MixedRanks;
    cfg.threads = 1;
    return cfg;
}

const NamedMargin& margin_named(const TrialRecord& record,
                                const std::string& name) {
    for (const auto& m : record.margins) {
        if (m.name == name) {
            return m;
        }
    }
    REQUIRE_MESSAGE(false, "missing margin: " << name);
    return record.margins.front();
}

bool payload_has(const Payload& payload, const std::string& key) {
    for (const auto& [k, v] : payload) {
        if (k == key) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("suite registry") {
    const auto base = suite_checks(false);
    REQUIRE(base.size() == 10);
    CHECK(std::string(base.front().name) == "contractivity");
    CHECK(std::string(base.back().name) == "correlation-lower-bound");

    const auto with_hook = suite_checks(true);
    REQUIRE(with_hook.size() == 11);
    CHECK(std::string(with_hook.back().name) ==
          "injected-negated-contractivity");
}

TEST_CASE("checks are deterministic in the trial index") {
    const auto cfg = small_config();
    for (const auto& def : suite_checks(true)) {
        const auto a = def.run(cfg, 3);
        const auto b = def.run(cfg, 3);
        REQUIRE(a.margins.size() == b.margins.size());
        for (std::size_t i = 0; i < a.margins.size(); ++i) {
            CHECK(a.margins[i].margin.lhs == b.margins[i].margin.lhs);
            CHECK(a.margins[i].margin.rhs == b.margins[i].margin.rhs);
        }
        CHECK(a.n == b.n);
        CHECK(a.q == b.q);
        CHECK(a.blocks == b.blocks);
    }
}

TEST_CASE("proven margins hold across a short randomized run") {
    const auto cfg = small_config();
    for (const auto& def : suite_checks(false)) {
        for (std::uint64_t t = 0; t < 60; ++t) {
            const auto record = def.run(cfg, t);
            for (const auto& named : record.margins) {
                if (named.klass == MarginClass::Proven) {
                    CAPTURE(def.name);
                    CAPTURE(named.name);
                    CAPTURE(t);
                    CHECK(named.margin.satisfied);
                }
            }
        }
    }
}

TEST_CASE("contractivity trials") {
    const auto cfg = small_config();
    const auto record = check_contractivity(cfg, 0);
    REQUIRE(record.margins.size() == 1);
    const auto& m = record.margins[0];
    CHECK(std::string(m.name) == "projective-contraction");
    CHECK(m.klass == MarginClass::Proven);
    CHECK(m.margin.lhs <= m.margin.rhs + cfg.tol_ineq);
    CHECK(record.blocks >= 1);
    CHECK(record.blocks <= record.q);
    CHECK_FALSE(record.counterexample.has_value());
}

TEST_CASE("partial trace check carries the exact-route margin") {
    const auto cfg = small_config();
    for (std::uint64_t t = 0; t < 40; ++t) {
        const auto record = check_partial_trace_monotonicity(cfg, t);
        const auto& route = margin_named(record, "scaled-route-agreement");
        CHECK(route.margin.lhs < 1e-12);
        CHECK(route.margin.satisfied);
        const auto& mono = margin_named(record, "reduced-state-monotonicity");
        CHECK(mono.margin.satisfied);
    }
}

TEST_CASE("main bound check margins") {
    const auto cfg = small_config();
    const auto record = check_mutual_info_bound(cfg, 1);
    CHECK(margin_named(record, "scaled-classical-vs-quantum").klass ==
          MarginClass::Proven);
    CHECK(margin_named(record, "shannon-vs-holevo").klass ==
          MarginClass::Proven);
    CHECK(margin_named(record, "expansion-agreement").margin.lhs < 1e-12);
}

TEST_CASE("entropy product margins are reported as data") {
    const auto cfg = small_config();
    const auto record = check_entropy_product_bounds(cfg, 2);
    CHECK(margin_named(record, "scaled-classical-vs-entropy-product").klass ==
          MarginClass::Empirical);
    CHECK(margin_named(record, "quantum-vs-entropy-product").klass ==
          MarginClass::Empirical);
    CHECK(margin_named(record, "cross-entropy-identity").klass ==
          MarginClass::Identity);

    const auto binary = check_binary_balanced_bounds(cfg, 2);
    CHECK(binary.n == 2);
    CHECK(margin_named(binary, "binary-classical-vs-half-entropy").klass ==
          MarginClass::Empirical);
}

TEST_CASE("identity residual families") {
    const auto cfg = small_config();

    SUBCASE("orthogonal supports leave a strictly positive residual") {
        for (std::uint64_t t = 0; t < 30; ++t) {
            const auto record = check_cross_entropy_orthogonal(cfg, t);
            CHECK(record.q >= record.n);
            const auto& identity = margin_named(record,
                                                "cross-entropy-identity");
            CHECK(identity.margin.lhs > 0.0);
            const auto& agree =
                margin_named(record, "residual-closed-form-agreement");
            CHECK(agree.margin.satisfied);
        }
    }

    SUBCASE("identical signals satisfy the identity") {
        for (std::uint64_t t = 0; t < 30; ++t) {
            const auto record = check_cross_entropy_identical(cfg, t);
            const auto& identity = margin_named(record,
                                                "cross-entropy-identity");
            CHECK(identity.margin.lhs < 1e-12);
            CHECK(identity.margin.satisfied);
        }
    }

    SUBCASE("the fixed overlapping instance has residual 1/8") {
        const auto record = check_cross_entropy_overlapping(cfg, 0);
        CHECK(record.n == 2);
        CHECK(record.q == 2);
        const auto& identity = margin_named(record, "cross-entropy-identity");
        CHECK(identity.margin.lhs == doctest::Approx(0.125).epsilon(1e-12));
        CHECK_FALSE(identity.margin.satisfied);
        REQUIRE(record.counterexample.has_value());
        CHECK(payload_has(*record.counterexample, "probabilities"));
        CHECK(payload_has(*record.counterexample, "states"));
    }
}

TEST_CASE("residual closed form tracks the direct evaluation") {
    TrialRng rng(55, salt_from_name("residual-agreement"), 0);
    for (int rep = 0; rep < 40; ++rep) {
        const auto ens = sample_ensemble(3, 4, EnsembleMode::MixedRanks, rng);
        const auto res = cross_entropy_residual(ens);
        CHECK(std::abs(res.direct - res.closed_form) < 1e-12);
    }
    // Identical signals are the exact-zero family.
    const auto same =
        sample_identical_signal_ensemble(3, 3, EnsembleMode::Mixed, rng);
    CHECK(std::abs(cross_entropy_residual(same).direct) < 1e-12);
}

TEST_CASE("correlation exhibit is recorded in both orientations") {
    const auto cfg = small_config();
    const auto record = check_correlation_lower_bound(cfg, 0);
    const auto& printed = margin_named(record, "correlation-bound-printed");
    CHECK(printed.klass == MarginClass::Empirical);
    CHECK(printed.margin.lhs == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(printed.margin.rhs == doctest::Approx(0.375).epsilon(1e-12));
    CHECK_FALSE(printed.margin.satisfied);

    const auto& reversed = margin_named(record, "correlation-bound-reversed");
    CHECK(reversed.margin.satisfied);

    REQUIRE(record.counterexample.has_value());
    CHECK(payload_has(*record.counterexample, "rho_ab"));
    CHECK(payload_has(*record.counterexample, "obs_a"));
    CHECK(payload_has(*record.counterexample, "obs_b"));
}

TEST_CASE("injected hook violates on generic instances") {
    const auto cfg = small_config();
    std::size_t violations = 0;
    for (std::uint64_t t = 0; t < 20; ++t) {
        const auto record = check_injected_negated(cfg, t);
        if (record.any_violation()) {
            ++violations;
            REQUIRE(record.counterexample.has_value());
        }
    }
    CHECK(violations > 0);
}

TEST_CASE("suite aggregation") {
    auto cfg = small_config();
    cfg.trials = 120;
    const auto report = run_suite(cfg);

    CHECK(report.exit_code() == 0);
    CHECK(report.violation_count(MarginClass::Proven) == 0);
    REQUIRE(report.checks.size() == 10);
    for (const auto& check : report.checks) {
        CHECK(check.trials.size() == cfg.trials);
        CHECK(check.counterexamples.size() <= 16);
        for (const auto& summary : check.margins) {
            CHECK(summary.count == cfg.trials);
        }
    }

    const auto* overlapping = report.find_check("cross-entropy-overlapping");
    REQUIRE(overlapping != nullptr);
    REQUIRE_FALSE(overlapping->counterexamples.empty());
    const auto& fixed =
        overlapping->trials[overlapping->counterexamples.front()];
    CHECK(fixed.counterexample.has_value());

    const auto* orthogonal = report.find_check("cross-entropy-orthogonal");
    REQUIRE(orthogonal != nullptr);
    const auto* identity = orthogonal->find_margin("cross-entropy-identity");
    REQUIRE(identity != nullptr);
    CHECK(identity->violations > 0);
    CHECK(report.violation_count(MarginClass::Identity) > 0);
}

TEST_CASE("suite thread count does not change the numbers") {
    auto cfg = small_config();
    cfg.trials = 64;
    const auto serial = run_suite(cfg);
    cfg.threads = 4;
    const auto parallel = run_suite(cfg);

    REQUIRE(serial.checks.size() == parallel.checks.size());
    for (std::size_t c = 0; c < serial.checks.size(); ++c) {
        const auto& a = serial.checks[c];
        const auto& b = parallel.checks[c];
        REQUIRE(a.trials.size() == b.trials.size());
        for (std::size_t t = 0; t < a.trials.size(); ++t) {
            REQUIRE(a.trials[t].margins.size() == b.trials[t].margins.size());
            for (std::size_t m = 0; m < a.trials[t].margins.size(); ++m) {
                CHECK(a.trials[t].margins[m].margin.lhs ==
                      b.trials[t].margins[m].margin.lhs);
                CHECK(a.trials[t].margins[m].margin.rhs ==
                      b.trials[t].margins[m].margin.rhs);
            }
        }
    }
}

TEST_CASE("injected hook drives the failure exit code") {
    auto cfg = small_config();
    cfg.trials = 30;
    cfg.inject_violation = true;
    const auto report = run_suite(cfg);
    CHECK(report.exit_code() == 1);
    CHECK(report.violation_count(MarginClass::Proven) > 0);
    const auto* injected =
        report.find_check("injected-negated-contractivity");
    REQUIRE(injected != nullptr);
    REQUIRE_FALSE(injected->counterexamples.empty());
}

TEST_CASE("compare rows carry both bound families") {
    auto cfg = small_config();
    cfg.trials = 50;
    const auto report = run_compare(cfg);
    CHECK(report.exit_code() == 0);
    REQUIRE(report.rows.size() == 50);
    for (const auto& row : report.rows) {
        CHECK(row.hs_satisfied);
        CHECK(row.shannon_satisfied);
        CHECK(row.hs_scaled_classical <= row.hs_quantum + cfg.tol_ineq);
        CHECK(row.shannon_bits <= row.holevo_bits + cfg.tol_ineq);
    }
    CHECK(report.hs_violations == 0);
    CHECK(report.shannon_violations == 0);
}
