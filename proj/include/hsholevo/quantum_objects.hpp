#pragma once

#include <cstddef>
#include <vector>

#include "hsholevo/complex_matrix.hpp"
#include "hsholevo/errors.hpp"
#include "hsholevo/tolerances.hpp"

namespace hsholevo {

/// Validated density matrix: Hermitian, positive semidefinite and unit
/// trace within the pinned tolerances. Instances are immutable.
class DensityMatrix {
public:
    /// Full validation gateway. Throws ValidationError with a distinct
    /// kind for each failure mode (finiteness, hermiticity, positivity,
    /// trace).
    static DensityMatrix validated(ComplexMatrix m,
                                   double tolerance = tol::hermitian);

    /// Wraps the output of an operation that preserves validity by
    /// construction (block assembly, pinching, tensor products of valid
    /// densities). Performs only cheap structural checks; property tests
    /// cover the full invariant for every such operation.
    static DensityMatrix trusted(ComplexMatrix m);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    std::size_t dim() const noexcept { return matrix_.rows(); }

private:
    explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
    ComplexMatrix matrix_;
};

/// density_from_matrix is the documented name of the validation gateway.
DensityMatrix density_from_matrix(ComplexMatrix m,
                                  double tolerance = tol::hermitian);

/// Rank-one density |psi><psi| from amplitudes with norm 1 within
/// tolerance (renormalized exactly before the outer product).
DensityMatrix pure_state_density(
    const std::vector<std::complex<double>>& amplitudes,
    double tolerance = tol::trace);

/// Probability vector: entries >= 0 summing to 1 within tolerance.
class ClassicalDistribution {
public:
    static ClassicalDistribution validated(std::vector<double> probs,
                                           double tolerance = tol::trace);

    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const noexcept { return probs_; }

private:
    explicit ClassicalDistribution(std::vector<double> p)
        : probs_(std::move(p)) {}
    std::vector<double> probs_;
};

/// Classical-quantum ensemble: a label distribution together with one
/// signal state per label, all of the same dimension.
class CQEnsemble {
public:
    static CQEnsemble make(ClassicalDistribution probs,
                           std::vector<DensityMatrix> states);

    std::size_t n() const noexcept { return probs_.size(); }
    std::size_t q() const noexcept { return states_.front().dim(); }
    const ClassicalDistribution& probs() const noexcept { return probs_; }
    const std::vector<DensityMatrix>& states() const noexcept {
        return states_;
    }

private:
    CQEnsemble(ClassicalDistribution p, std::vector<DensityMatrix> s)
        : probs_(std::move(p)), states_(std::move(s)) {}
    ClassicalDistribution probs_;
    std::vector<DensityMatrix> states_;
};

/// Block-diagonal joint state of the ensemble: block x carries
/// p(x) * state_x. Dimension n*q.
DensityMatrix cq_state(const CQEnsemble& ensemble);

/// Label marginal as a diagonal density.
DensityMatrix marginal_p(const CQEnsemble& ensemble);

/// Signal marginal: the probability-weighted average state.
DensityMatrix marginal_q(const CQEnsemble& ensemble);

/// Complete set of orthogonal projectors. Validation checks hermiticity,
/// idempotence, pairwise orthogonality and completeness, in that order.
class ProjectiveMeasurement {
public:
    static ProjectiveMeasurement validated(std::vector<ComplexMatrix> projectors,
                                           double tolerance = tol::hermitian);

    std::size_t dim() const noexcept { return projectors_.front().rows(); }
    std::size_t outcomes() const noexcept { return projectors_.size(); }
    const std::vector<ComplexMatrix>& projectors() const noexcept {
        return projectors_;
    }

private:
    explicit ProjectiveMeasurement(std::vector<ComplexMatrix> p)
        : projectors_(std::move(p)) {}
    std::vector<ComplexMatrix> projectors_;
};

ProjectiveMeasurement measurement_from_projectors(
    std::vector<ComplexMatrix> projectors, double tolerance = tol::hermitian);

/// Rank-one basis projectors |y><y| for y = 0..dim-1.
ProjectiveMeasurement computational_measurement(std::size_t dim);

/// Measurement channel: rho -> sum_y P_y rho P_y.
DensityMatrix apply_projective(const DensityMatrix& rho,
                               const ProjectiveMeasurement& measurement);

/// Measurement with an outcome register appended as a second factor:
/// rho -> sum_y (P_y rho P_y) (x) |y><y| on dimension dim * outcomes.
/// Built block by block; no pre-measurement register state is formed.
DensityMatrix measure_with_register(const DensityMatrix& rho,
                                    const ProjectiveMeasurement& measurement);

/// Joint probability table over label x outcome.
class JointDistribution {
public:
    static JointDistribution validated(std::size_t rows, std::size_t cols,
                                       std::vector<double> table,
                                       double tolerance = tol::trace);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double at(std::size_t x, std::size_t y) const {
        return table_[x * cols_ + y];
    }
    const std::vector<double>& table() const noexcept { return table_; }

    std::vector<double> row_marginal() const;
    std::vector<double> col_marginal() const;

private:
    JointDistribution(std::size_t r, std::size_t c, std::vector<double> t)
        : rows_(r), cols_(c), table_(std::move(t)) {}
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> table_;
};

/// Measured joint p(x, y) = p(x) tr(P_y rho_x), computed directly from
/// trace products.
JointDistribution induced_joint(const CQEnsemble& ensemble,
                                const ProjectiveMeasurement& measurement);

/// Diagonal density diag(p(x, y)) on dimension rows * cols.
DensityMatrix classical_diag_embedding(const JointDistribution& joint);

} // namespace hsholevo
