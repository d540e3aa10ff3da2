#include "hsholevo/info_measures.hpp"

#include <cmath>
#include <string>

namespace hsholevo {

Margin make_margin(double lhs, double rhs, double tolerance) {
    Margin m;
    m.lhs = lhs;
    m.rhs = rhs;
    m.margin = rhs - lhs;
    m.satisfied = m.margin >= -tolerance;
    return m;
}

double hs_divergence(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("hs_divergence: shape mismatch");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        sum += std::norm(a.data()[k] - b.data()[k]);
    }
    return 0.5 * sum;
}

double hs_divergence(const DensityMatrix& a, const DensityMatrix& b) {
    return hs_divergence(a.matrix(), b.matrix());
}

namespace {

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b,
                          const char* where) {
    const auto value = trace_product(a, b);
    if (std::abs(value.imag()) > tol::imaginary) {
        throw NumericalError(std::string(where) +
                             ": trace has imaginary part " +
                             std::to_string(value.imag()));
    }
    return value.real();
}

} // namespace

double hs_divergence_expanded(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("hs_divergence_expanded: shape mismatch");
    }
    const double taa = real_trace_product(a, a, "hs_divergence_expanded");
    const double tab = real_trace_product(a, b, "hs_divergence_expanded");
    const double tbb = real_trace_product(b, b, "hs_divergence_expanded");
    return 0.5 * taa - tab + 0.5 * tbb;
}

double classical_hs_divergence(const std::vector<double>& p,
                               const std::vector<double>& q) {
    if (p.size() != q.size()) {
        throw DimensionError("classical_hs_divergence: length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = p[i] - q[i];
        sum += d * d;
    }
    return 0.5 * sum;
}

double hs_mutual_classical(const JointDistribution& joint) {
    const auto px = joint.row_marginal();
    const auto py = joint.col_marginal();
    double sum = 0.0;
    for (std::size_t x = 0; x < joint.rows(); ++x) {
        for (std::size_t y = 0; y < joint.cols(); ++y) {
            const double d = joint.at(x, y) - px[x] * py[y];
            sum += d * d;
        }
    }
    return 0.5 * sum;
}

double hs_mutual_quantum(const CQEnsemble& ensemble) {
    const auto joint = cq_state(ensemble);
    const auto product =
        kron(marginal_p(ensemble).matrix(), marginal_q(ensemble).matrix());
    return hs_divergence(joint.matrix(), product);
}

double hs_mutual_quantum_expanded(const CQEnsemble& ensemble) {
    // tr(rho_pq^2)/2 - tr(rho_pq (rho_p (x) rho_q)) + tr(rho_p^2) tr(rho_q^2)/2,
    // with the middle term reduced blockwise: sum_x p(x)^2 tr(rho_x rho_q).
    const auto& probs = ensemble.probs();
    const auto avg = marginal_q(ensemble);
    double purity_joint = 0.0;
    double cross = 0.0;
    double purity_p = 0.0;
    for (std::size_t x = 0; x < ensemble.n(); ++x) {
        const double px = probs[x];
        const auto& state = ensemble.states()[x].matrix();
        purity_joint +=
            px * px *
            real_trace_product(state, state, "hs_mutual_quantum_expanded");
        cross += px * px *
                 real_trace_product(state, avg.matrix(),
                                    "hs_mutual_quantum_expanded");
        purity_p += px * px;
    }
    const double purity_q = real_trace_product(
        avg.matrix(), avg.matrix(), "hs_mutual_quantum_expanded");
    return 0.5 * purity_joint - cross + 0.5 * purity_p * purity_q;
}

double logical_entropy(const DensityMatrix& rho) {
    // tr(rho^2) equals the squared Frobenius norm for Hermitian rho.
    return 1.0 - rho.matrix().sum_abs_squared();
}

double classical_logical_entropy(const std::vector<double>& probs) {
    double sum = 0.0;
    for (double p : probs) {
        sum += p * p;
    }
    return 1.0 - sum;
}

namespace {

double clamp_eigenvalue(double v) {
    if (v < 0.0) {
        if (v < -tol::psd) {
            throw ValidationError(ValidationError::Kind::NotPositive,
                                  "entropy: eigenvalue " + std::to_string(v) +
                                      " below tolerance");
        }
        return 0.0;
    }
    return std::min(v, 1.0);
}

} // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
    const auto eigenvalues = hermitian_eigenvalues(rho.matrix());
    double entropy = 0.0;
    for (double raw : eigenvalues) {
        const double v = clamp_eigenvalue(raw);
        if (v > 0.0) {
            entropy -= v * std::log2(v);
        }
    }
    return entropy;
}

double holevo_chi(const CQEnsemble& ensemble) {
    double chi = von_neumann_entropy(marginal_q(ensemble));
    for (std::size_t x = 0; x < ensemble.n(); ++x) {
        chi -= ensemble.probs()[x] * von_neumann_entropy(ensemble.states()[x]);
    }
    return chi;
}

double shannon_mutual(const JointDistribution& joint) {
    const auto px = joint.row_marginal();
    const auto py = joint.col_marginal();
    double mi = 0.0;
    for (std::size_t x = 0; x < joint.rows(); ++x) {
        for (std::size_t y = 0; y < joint.cols(); ++y) {
            const double pxy = joint.at(x, y);
            if (pxy > 0.0) {
                mi += pxy * std::log2(pxy / (px[x] * py[y]));
            }
        }
    }
    return mi;
}

Margin correlation_bound_margin(const DensityMatrix& rho_ab,
                                std::size_t dim_a, std::size_t dim_b,
                                const ComplexMatrix& obs_a,
                                const ComplexMatrix& obs_b,
                                double tolerance) {
    if (rho_ab.dim() != dim_a * dim_b) {
        throw DimensionError("correlation_bound_margin: state dimension is "
                             "not dim_a * dim_b");
    }
    if (obs_a.rows() != dim_a || !obs_a.is_square() ||
        obs_b.rows() != dim_b || !obs_b.is_square()) {
        throw DimensionError("correlation_bound_margin: observable shape "
                             "mismatch");
    }
    if (!is_hermitian(obs_a) || !is_hermitian(obs_b)) {
        throw ValidationError(ValidationError::Kind::NotHermitian,
                              "correlation_bound_margin: observables must be "
                              "Hermitian");
    }

    const auto reduced_a =
        partial_trace(rho_ab.matrix(), dim_a, dim_b, Subsystem::A);
    const auto reduced_b =
        partial_trace(rho_ab.matrix(), dim_a, dim_b, Subsystem::B);

    const double mean_a =
        real_trace_product(reduced_a, obs_a, "correlation_bound_margin");
    const double mean_b =
        real_trace_product(reduced_b, obs_b, "correlation_bound_margin");
    const double mean_ab = real_trace_product(
        rho_ab.matrix(), kron(obs_a, obs_b), "correlation_bound_margin");
    const double covariance = mean_ab - mean_a * mean_b;

    const double norm_a = spectral_norm(obs_a);
    const double norm_b = spectral_norm(obs_b);
    double bound = 0.0;
    if (norm_a > 0.0 && norm_b > 0.0) {
        bound = covariance * covariance /
                (2.0 * norm_a * norm_a * norm_b * norm_b);
    }

    const double divergence =
        hs_divergence(rho_ab.matrix(), kron(reduced_a, reduced_b));
    return make_margin(bound, divergence, tolerance);
}

} // namespace hsholevo
