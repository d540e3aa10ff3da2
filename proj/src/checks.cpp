#include "hsholevo/checks.hpp"

#include <cmath>

namespace hsholevo {

const char* to_string(MarginClass klass) {
    switch (klass) {
        case MarginClass::Proven:
            return "proven";
        case MarginClass::Empirical:
            return "empirical";
        case MarginClass::Identity:
            return "identity";
    }
    return "unknown";
}

namespace {

constexpr char kContractivity[] = "contractivity";
constexpr char kJointConvexity[] = "joint-convexity";
constexpr char kPartialTrace[] = "partial-trace-monotonicity";
constexpr char kMutualBound[] = "mutual-info-bound";
constexpr char kEntropyProduct[] = "entropy-product-bounds";
constexpr char kBinaryBalanced[] = "binary-balanced-bounds";
constexpr char kOrthogonal[] = "cross-entropy-orthogonal";
constexpr char kOverlapping[] = "cross-entropy-overlapping";
constexpr char kIdentical[] = "cross-entropy-identical";
constexpr char kCorrelation[] = "correlation-lower-bound";
constexpr char kInjected[] = "injected-negated-contractivity";

std::size_t pick(const std::vector<std::size_t>& values, TrialRng& rng) {
    return values[rng.uniform_index(values.size())];
}

void add_value(Payload& payload, std::string key, PayloadValue value) {
    payload.emplace_back(std::move(key), std::move(value));
}

std::vector<ComplexMatrix> state_matrices(const CQEnsemble& ensemble) {
    std::vector<ComplexMatrix> out;
    out.reserve(ensemble.n());
    for (const auto& s : ensemble.states()) {
        out.push_back(s.matrix());
    }
    return out;
}

Payload ensemble_payload(const CQEnsemble& ensemble) {
    Payload payload;
    add_value(payload, "probabilities", ensemble.probs().probs());
    add_value(payload, "states", state_matrices(ensemble));
    return payload;
}

ComplexMatrix sample_hermitian(std::size_t dim, TrialRng& rng) {
    ComplexMatrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            g(i, j) = {rng.normal(), rng.normal()};
        }
    }
    ComplexMatrix h(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        h(i, i) = g(i, i).real();
        for (std::size_t j = i + 1; j < dim; ++j) {
            const auto avg = 0.5 * (g(i, j) + std::conj(g(j, i)));
            h(i, j) = avg;
            h(j, i) = std::conj(avg);
        }
    }
    return h;
}

void finalize(TrialRecord& record, Payload payload) {
    if (record.any_violation()) {
        record.counterexample = std::move(payload);
    }
}

} // namespace

CrossEntropyResidual cross_entropy_residual(const CQEnsemble& ensemble) {
    const auto joint = cq_state(ensemble).matrix();
    const auto product =
        kron(marginal_p(ensemble).matrix(), marginal_q(ensemble).matrix());
    const auto complement = ComplexMatrix::identity(joint.rows()) - product;
    const auto cross = trace_product(joint, complement);
    if (std::abs(cross.imag()) > tol::imaginary) {
        throw NumericalError("cross_entropy_residual: trace has imaginary "
                             "part");
    }
    const double quadratic_entropy = 1.0 - joint.sum_abs_squared();

    CrossEntropyResidual out;
    out.direct = cross.real() - quadratic_entropy;

    const auto avg = marginal_q(ensemble).matrix();
    double closed = 0.0;
    for (std::size_t x = 0; x < ensemble.n(); ++x) {
        const double px = ensemble.probs()[x];
        const auto& state = ensemble.states()[x].matrix();
        closed += px * px *
                  (trace_product(state, state).real() -
                   trace_product(state, avg).real());
    }
    out.closed_form = closed;
    return out;
}

TrialRecord check_contractivity(const RunConfig& cfg, std::uint64_t trial) {
    TrialRng rng(cfg.seed, salt_from_name(kContractivity), trial);
    TrialRecord record;
    record.trial_index = trial;
    record.mode = cfg.mode;
    record.q = pick(cfg.dims_q, rng);
    record.blocks = 1 + rng.uniform_index(record.q);

    const auto rho = sample_density(record.q, cfg.mode, rng);
    const auto sigma = sample_density(record.q, cfg.mode, rng);
    const auto measurement =
        sample_projective_measurement(record.q, record.blocks, rng);

    const double before = hs_divergence(rho, sigma);
    const double after = hs_divergence(apply_projective(rho, measurement),
                                       apply_projective(sigma, measurement));
    record.margins.push_back({"projective-contraction", MarginClass::Proven,
                              make_margin(after, before, cfg.tol_ineq)});

    Payload payload;
    add_value(payload, "rho", rho.matrix());
    add_value(payload, "sigma", sigma.matrix());
    add_value(payload, "projectors", measurement.projectors());
    finalize(record, std::move(payload));
    return record;
}

TrialRecord check_joint_convexity(const RunConfig& cfg, std::uint64_t trial) {
    TrialRng rng(cfg.seed, salt_from_name(kJointConvexity), trial);
    TrialRecord record;
    record.trial_index = trial;
    record.mode = cfg.mode;
    record.q = pick(cfg.dims_q, rng);

    const double lambda = rng.uniform01();
    const auto rho1 = sample_density(record.q, cfg.mode, rng);
    const auto rho2 = sample_density(record.q, cfg.mode, rng);
    const auto sigma1 = sample_density(record.q, cfg.mode, rng);
    const auto sigma2 = sample_density(record.q, cfg.mode, rng);

    const ComplexMatrix mixed_rho =
        lambda * rho1.matrix() + (1.0 - lambda) * rho2.matrix();
    const ComplexMatrix mixed_sigma =
        lambda * sigma1.matrix() + (1.0 - lambda) * sigma2.matrix();

    const double lhs = hs_divergence(mixed_rho, mixed_sigma);
    const double rhs = lambda * hs_divergence(rho1, sigma1) +
                       (1.0 - lambda) * hs_divergence(rho2, sigma2);
    record.margins.push_back({"mixture-convexity", MarginClass::Proven,
                              make_margin(lhs, rhs, cfg.tol_ineq)});

    Payload payload;
    add_value(payload, "lambda", lambda);
    add_value(payload, "rho1", rho1.matrix());
    add_value(payload, "rho2", rho2.matrix());
    add_value(payload, "sigma1", sigma1.matrix());
    add_value(payload, "sigma2", sigma2.matrix());
    finalize(record, std::move(payload));
    return record;
}

TrialRecord check_partial_trace_monotonicity(const RunConfig& cfg,
                                             std::uint64_t trial) {
    TrialRng rng(cfg.seed, salt_from_name(kPartialTrace), trial);
    TrialRecord record;
    record.trial_index = trial;
    record.mode = cfg.mode;
    record.n = pick(cfg.dims_p, rng);
    record.q = pick(cfg.dims_q, rng);

    const std::size_t dim = record.n * record.q;
    const auto rho_ab = sample_density(dim, cfg.mode, rng);
    const auto sigma_ab = sample_density(dim, cfg.mode, rng);

    const auto rho_a =
        partial_trace(rho_ab.matrix(), record.n, record.q, Subsystem::A);
    const auto sigma_a =
        partial_trace(sigma_ab.matrix(), record.n, record.q, Subsystem::A);

    const ComplexMatrix padding =
        (1.0 / static_cast<double>(record.q)) *
        ComplexMatrix::identity(record.q);
    const double padded = hs_divergence(kron(rho_a, padding),
                                        kron(sigma_a, padding));
    const double scaled = hs_divergence(rho_a, sigma_a) /
                          static_cast<double>(record.q);
    const double joint = hs_divergence(rho_ab, sigma_ab);

    record.margins.push_back({"reduced-state-monotonicity",
                              MarginClass::Proven,
                              make_margin(padded, joint, cfg.tol_ineq)});
    record.margins.push_back({"scaled-route-agreement", MarginClass::Proven,
                              make_margin(std::abs(padded - scaled), 0.0,
                                          tol::exact)});

    Payload payload;
    add_value(payload, "rho_ab", rho_ab.matrix());
    add_value(payload, "sigma_ab", sigma_ab.matrix());
    finalize(record, std::move(payload));
    return record;
}

namespace {

// Shared sampling for the bound checks: ensemble plus measurement.
struct BoundInstance {
    CQEnsemble ensemble;
    ProjectiveMeasurement measurement;
    JointDistribution joint;
};

BoundInstance sample_bound_instance(const RunConfig& cfg, TrialRng& rng,
                                    TrialRecord& record) {
    record.n = pick(cfg.dims_p, rng);
    record.q = pick(cfg.dims_q, rng);
    record.blocks = 1 + rng.uniform_index(record.q);
    auto ensemble = sample_ensemble(record.n, record.q, cfg.mode, rng);
    auto measurement =
        sample_projective_measurement(record.q, record.blocks, rng);
    auto joint = induced_joint(ensemble, measurement);
    return {std::move(ensemble), std::move(measurement), std::move(joint)};
}

Payload bound_payload(const BoundInstance& instance) {
    Payload payload = ensemble_payload(instance.ensemble);
    add_value(payload, "projectors", instance.measurement.projectors());
    return payload;
}

} // namespace

TrialRecord check_mutual_info_bound(const RunConfig& cfg,
                                    std::uint64_t trial) {
    TrialRng rng(cfg.seed, salt_from_name(kMutualBound), trial);
    TrialRecord record;
    record.trial_index = trial;
    record.mode = cfg.mode;
    const auto instance = sample_bound_instance(cfg, rng, record);

    const double classical = hs_mutual_classical(instance.joint);
    const double quantum = hs_mutual_quantum(instance.ensemble);
    const double expanded = hs_mutual_quantum_expanded(instance.ensemble);

    record.margins.push_back(
        {"scaled-classical-vs-quantum", MarginClass::Proven,
         make_margin(classical / static_cast<double>(record.q), quantum,
                     cfg.tol_ineq)});
    record.margins.push_back(
        {"shannon-vs-holevo", MarginClass::Proven,
         make_margin(shannon_mutual(instance.joint),
                     holevo_chi(instance.ensemble), cfg.tol_ineq)});
    record.margins.push_back(
        {"expansion-agreement", MarginClass::Proven,
         make_margin(std::abs(quantum - expanded), 0.0, tol::exact)});

    finalize(record, bound_payload(instance));
    return record;
}

namespace {

void push_entropy_product_margins(TrialRecord& record,
                                  const BoundInstance& instance,
                                  const RunConfig& cfg,
                                  bool include_binary_form) {
    const double classical = hs_mutual_classical(instance.joint);
    const double quantum = hs_mutual_quantum(instance.ensemble);
    const double product_bound =
        0.5 *
        classical_logical_entropy(instance.ensemble.probs().probs()) *
        logical_entropy(marginal_q(instance.ensemble));

    record.margins.push_back(
        {"scaled-classical-vs-entropy-product", MarginClass::Empirical,
         make_margin(classical / static_cast<double>(record.q), product_bound,
                     cfg.tol_ineq)});

    const auto residual = cross_entropy_residual(instance.ensemble);
    record.margins.push_back(
        {"cross-entropy-identity", MarginClass::Identity,
         make_margin(std::abs(residual.direct), 0.0, cfg.tol_ineq)});

    record.margins.push_back(
        {"quantum-vs-entropy-product", MarginClass::Empirical,
         make_margin(quantum, product_bound, cfg.tol_ineq)});

    if (include_binary_form) {
        record.margins.push_back(
            {"binary-classical-vs-half-entropy", MarginClass::Empirical,
             make_margin(classical,
                         0.5 * logical_entropy(marginal_q(instance.ensemble)),
                         cfg.tol_ineq)});
    }
}

} // namespace

TrialRecord check_entropy_product_bounds(const RunConfig& cfg,
                                         std::uint64_t trial) {
    TrialRng rng(cfg.seed, salt_from_name(kEntropyProduct), trial);
    TrialRecord record;
    record.trial_index = trial;
    record.mode = cfg.mode;
    const auto instance = sample_bound_instance(cfg, rng, record);
    push_entropy_product_margins(record, instance, cfg, false);
    finalize(record, bound_payload(instance));
    return record;
}

TrialRecord check_binary_balanced_bounds(const RunConfig& cfg,
                                         std::uint64_t trial) {
    TrialRng rng(cfg.seed, salt_from_name(kBinaryBalanced), trial);
    TrialRecord record;
    record.trial_index = trial;
    record.mode = cfg.mode;
    record.n = 2;
    record.q = pick(cfg.dims_q, rng);
    record.blocks = 1 + rng.uniform_index(record.q);

    auto probs = ClassicalDistribution::validated({0.5, 0.5});
    std::vector<DensityMatrix> states;
    states.push_back(sample_density(record.q, cfg.mode, rng));
    states.push_back(sample_density(record.q, cfg.mode, rng));
    auto ensemble = CQEnsemble::make(std::move(probs), std::move(states));
    auto measurement =
        sample_projective_measurement(record.q, record.blocks, rng);
    auto joint = induced_joint(ensemble, measurement);
    const BoundInstance instance{std::move(ensemble), std::move(measurement),
                                 std::move(joint)};
    push_entropy_product_margins(record, instance, cfg, true);
    finalize(record, bound_payload(instance));
    return record;
}

namespace {

void push_residual_margins(TrialRecord& record, const CQEnsemble& ensemble,
                           const RunConfig& cfg) {
    const auto residual = cross_entropy_residual(ensemble);
    record.margins.push_back(
        {"cross-entropy-identity", MarginClass::Identity,
         make_margin(std::abs(residual.direct), 0.0, cfg.tol_ineq)});
    record.margins.push_back(
        {"residual-closed-form-agreement", MarginClass::Proven,
         make_margin(std::abs(residual.direct - residual.closed_form), 0.0,
                     tol::exact)});
}

} // namespace

TrialRecord check_cross_entropy_orthogonal(const RunConfig& cfg,
                                           std::uint64_t trial) {
    TrialRng rng(cfg.seed, salt_from_name(kOrthogonal), trial);
    TrialRecord record;
    record.trial_index = trial;
    record.mode = cfg.mode;
    record.n = pick(cfg.dims_p, rng);

    std::vector<std::size_t> wide_enough;
    for (std::size_t q : cfg.dims_q) {
        if (q >= record.n) {
            wide_enough.push_back(q);
        }
    }
    record.q = wide_enough.empty() ? record.n : pick(wide_enough, rng);

    const auto ensemble =
        sample_orthogonal_support_ensemble(record.n, record.q, cfg.mode, rng);
    push_residual_margins(record, ensemble, cfg);
    finalize(record, ensemble_payload(ensemble));
    return record;
}

TrialRecord check_cross_entropy_overlapping(const RunConfig& cfg,
                                            std::uint64_t trial) {
    TrialRng rng(cfg.seed, salt_from_name(kOverlapping), trial);
    TrialRecord record;
    record.trial_index = trial;
    record.mode = EnsembleMode::Pure;

    if (trial == 0) {
        // Fixed worked-example instance: overlap 1/2, residual exactly 1/8.
        record.n = 2;
        record.q = 2;
        const auto ensemble = binary_pure_family(std::acos(-1.0) / 4.0);
        push_residual_margins(record, ensemble, cfg);
        finalize(record, ensemble_payload(ensemble));
        return record;
    }

    record.n = pick(cfg.dims_p, rng);
    record.q = pick(cfg.dims_q, rng);
    const auto ensemble =
        sample_ensemble(record.n, record.q, EnsembleMode::Pure, rng);
    push_residual_margins(record, ensemble, cfg);
    finalize(record, ensemble_payload(ensemble));
    return record;
}

TrialRecord check_cross_entropy_identical(const RunConfig& cfg,
                                          std::uint64_t trial) {
    TrialRng rng(cfg.seed, salt_from_name(kIdentical), trial);
    TrialRecord record;
    record.trial_index = trial;
    record.mode = cfg.mode;
    record.n = pick(cfg.dims_p, rng);
    record.q = pick(cfg.dims_q, rng);
    const auto ensemble =
        sample_identical_signal_ensemble(record.n, record.q, cfg.mode, rng);
    push_residual_margins(record, ensemble, cfg);
    finalize(record, ensemble_payload(ensemble));
    return record;
}

TrialRecord check_correlation_lower_bound(const RunConfig& cfg,
                                          std::uint64_t trial) {
    TrialRng rng(cfg.seed, salt_from_name(kCorrelation), trial);
    TrialRecord record;
    record.trial_index = trial;
    record.mode = cfg.mode;

    DensityMatrix rho_ab = [&]() {
        if (trial == 0) {
            const double r = 1.0 / std::sqrt(2.0);
            return pure_state_density({{r, 0.0}, {0.0, 0.0}, {0.0, 0.0},
                                       {r, 0.0}});
        }
        record.n = pick(cfg.dims_p, rng);
        record.q = pick(cfg.dims_q, rng);
        return sample_density(record.n * record.q, cfg.mode, rng);
    }();
    if (trial == 0) {
        record.n = 2;
        record.q = 2;
    }

    ComplexMatrix obs_a = trial == 0
        ? ComplexMatrix::from_data(2, 2, {1.0, 0.0, 0.0, -1.0})
        : sample_hermitian(record.n, rng);
    ComplexMatrix obs_b = trial == 0
        ? ComplexMatrix::from_data(2, 2, {1.0, 0.0, 0.0, -1.0})
        : sample_hermitian(record.q, rng);

    const Margin printed = correlation_bound_margin(rho_ab, record.n,
                                                    record.q, obs_a, obs_b,
                                                    cfg.tol_ineq);
    record.margins.push_back(
        {"correlation-bound-printed", MarginClass::Empirical, printed});
    record.margins.push_back(
        {"correlation-bound-reversed", MarginClass::Empirical,
         make_margin(printed.rhs, printed.lhs, cfg.tol_ineq)});

    Payload payload;
    add_value(payload, "rho_ab", rho_ab.matrix());
    add_value(payload, "obs_a", obs_a);
    add_value(payload, "obs_b", obs_b);
    finalize(record, std::move(payload));
    return record;
}

TrialRecord check_injected_negated(const RunConfig& cfg, std::uint64_t trial) {
    TrialRng rng(cfg.seed, salt_from_name(kInjected), trial);
    TrialRecord record;
    record.trial_index = trial;
    record.mode = cfg.mode;
    record.q = pick(cfg.dims_q, rng);
    record.blocks = 1 + rng.uniform_index(record.q);

    const auto rho = sample_density(record.q, cfg.mode, rng);
    const auto sigma = sample_density(record.q, cfg.mode, rng);
    const auto measurement =
        sample_projective_measurement(record.q, record.blocks, rng);

    const double before = hs_divergence(rho, sigma);
    const double after = hs_divergence(apply_projective(rho, measurement),
                                       apply_projective(sigma, measurement));
    // Orientation flipped on purpose; generic instances violate this.
    record.margins.push_back({"negated-projective-contraction",
                              MarginClass::Proven,
                              make_margin(before, after, cfg.tol_ineq)});

    Payload payload;
    add_value(payload, "rho", rho.matrix());
    add_value(payload, "sigma", sigma.matrix());
    add_value(payload, "projectors", measurement.projectors());
    finalize(record, std::move(payload));
    return record;
}

std::vector<CheckDef> suite_checks(bool include_injected) {
    std::vector<CheckDef> checks = {
        {kContractivity, &check_contractivity},
        {kJointConvexity, &check_joint_convexity},
        {kPartialTrace, &check_partial_trace_monotonicity},
        {kMutualBound, &check_mutual_info_bound},
        {kEntropyProduct, &check_entropy_product_bounds},
        {kBinaryBalanced, &check_binary_balanced_bounds},
        {kOrthogonal, &check_cross_entropy_orthogonal},
        {kOverlapping, &check_cross_entropy_overlapping},
        {kIdentical, &check_cross_entropy_identical},
        {kCorrelation, &check_correlation_lower_bound},
    };
    if (include_injected) {
        checks.push_back({kInjected, &check_injected_negated});
    }
    return checks;
}

} // namespace hsholevo
