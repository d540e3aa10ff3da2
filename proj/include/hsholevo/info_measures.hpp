#pragma once

#include <vector>

#include "hsholevo/quantum_objects.hpp"

namespace hsholevo {

/// One evaluated inequality lhs <= rhs. margin = rhs - lhs; the check is
/// satisfied when the margin is no worse than -tolerance.
struct Margin {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool satisfied = true;
};

Margin make_margin(double lhs, double rhs, double tolerance = tol::inequality);

/// Squared-distance divergence between states: half the squared
/// Frobenius norm of the difference. Symmetric, non-negative, zero only
/// at equal arguments.
double hs_divergence(const ComplexMatrix& a, const ComplexMatrix& b);
double hs_divergence(const DensityMatrix& a, const DensityMatrix& b);

/// Same quantity through the algebraic expansion
/// tr(a^2)/2 - tr(ab) + tr(b^2)/2, used as an independent cross-check.
/// Throws NumericalError when a trace picks up an imaginary component.
double hs_divergence_expanded(const ComplexMatrix& a, const ComplexMatrix& b);

/// Classical counterpart: half the squared Euclidean distance between
/// probability vectors of equal length.
double classical_hs_divergence(const std::vector<double>& p,
                               const std::vector<double>& q);

/// Divergence of a joint table from the product of its marginals.
double hs_mutual_classical(const JointDistribution& joint);

/// Divergence of the ensemble's block-diagonal joint state from the
/// product of its marginals.
double hs_mutual_quantum(const CQEnsemble& ensemble);

/// Cross-check route for hs_mutual_quantum via trace products only.
double hs_mutual_quantum_expanded(const CQEnsemble& ensemble);

/// Quadratic entropy 1 - tr(rho^2); zero exactly on pure states.
double logical_entropy(const DensityMatrix& rho);

/// Quadratic entropy 1 - sum p^2 of a probability vector.
double classical_logical_entropy(const std::vector<double>& probs);

/// Spectral entropy in bits. Eigenvalues are clamped: values in
/// [-psd tolerance, 0) go to 0 and values above 1 are clipped, so valid
/// densities at the tolerance edge never produce NaN.
double von_neumann_entropy(const DensityMatrix& rho);

/// Ensemble Holevo quantity: S(avg state) - sum p(x) S(state_x), bits.
double holevo_chi(const CQEnsemble& ensemble);

/// Shannon mutual information of a joint table, bits. Zero-probability
/// cells contribute zero.
double shannon_mutual(const JointDistribution& joint);

/// Margin of the printed correlation lower bound
///   d(rho_ab || rho_a (x) rho_b) >= C^2 / (2 |obs_a|^2 |obs_b|^2)
/// where C is the covariance of the two observables in rho_ab and |.|
/// the spectral norm. Returned with lhs = bound, rhs = divergence, so
/// margin > 0 means the bound held. Reported as data only; this bound is
/// not treated as an invariant. Zero-norm observables yield a zero bound.
Margin correlation_bound_margin(const DensityMatrix& rho_ab,
                                std::size_t dim_a, std::size_t dim_b,
                                const ComplexMatrix& obs_a,
                                const ComplexMatrix& obs_b,
                                double tolerance = tol::inequality);

} // namespace hsholevo
