#include "hsholevo/quantum_objects.hpp"

#include <cmath>
#include <string>

namespace hsholevo {

DensityMatrix DensityMatrix::validated(ComplexMatrix m, double tolerance) {
    if (!m.is_square() || m.empty()) {
        throw DimensionError("density: matrix must be square and non-empty");
    }
    if (!m.all_finite()) {
        throw ValidationError(ValidationError::Kind::NotFinite,
                              "density: non-finite entry");
    }
    if (hermitian_deviation(m) > tolerance) {
        throw ValidationError(ValidationError::Kind::NotHermitian,
                              "density: not Hermitian within tolerance");
    }
    const auto tr = m.trace();
    if (std::abs(tr - std::complex<double>(1.0, 0.0)) > tol::trace) {
        throw ValidationError(ValidationError::Kind::TraceNotOne,
                              "density: trace deviates from 1 by more than " +
                                  std::to_string(tol::trace));
    }
    const auto eigenvalues = hermitian_eigenvalues(m, tolerance);
    if (eigenvalues.back() < -tol::psd) {
        throw ValidationError(ValidationError::Kind::NotPositive,
                              "density: eigenvalue " +
                                  std::to_string(eigenvalues.back()) +
                                  " below -" + std::to_string(tol::psd));
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m) {
    if (!m.is_square() || m.empty()) {
        throw DimensionError("density: matrix must be square and non-empty");
    }
    if (!m.all_finite()) {
        throw ValidationError(ValidationError::Kind::NotFinite,
                              "density: non-finite entry");
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix density_from_matrix(ComplexMatrix m, double tolerance) {
    return DensityMatrix::validated(std::move(m), tolerance);
}

DensityMatrix pure_state_density(
    const std::vector<std::complex<double>>& amplitudes, double tolerance) {
    if (amplitudes.empty() || amplitudes.size() > ComplexMatrix::max_dimension) {
        throw DimensionError("pure_state_density: bad amplitude count");
    }
    double norm_sq = 0.0;
    for (const auto& a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValidationError(ValidationError::Kind::NotFinite,
                                  "pure_state_density: non-finite amplitude");
        }
        norm_sq += std::norm(a);
    }
    const double norm = std::sqrt(norm_sq);
    if (std::abs(norm - 1.0) > tolerance) {
        throw ValidationError(ValidationError::Kind::BadProbability,
                              "pure_state_density: amplitudes have norm " +
                                  std::to_string(norm));
    }
    const std::size_t d = amplitudes.size();
    ComplexMatrix out(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            out(i, j) = (amplitudes[i] / norm) * std::conj(amplitudes[j] / norm);
        }
    }
    return DensityMatrix::trusted(std::move(out));
}

ClassicalDistribution ClassicalDistribution::validated(
    std::vector<double> probs, double tolerance) {
    if (probs.empty() || probs.size() > ComplexMatrix::max_dimension) {
        throw DimensionError("distribution: bad entry count");
    }
    double sum = 0.0;
    for (double p : probs) {
        if (!std::isfinite(p)) {
            throw ValidationError(ValidationError::Kind::NotFinite,
                                  "distribution: non-finite entry");
        }
        if (p < 0.0) {
            throw ValidationError(ValidationError::Kind::BadProbability,
                                  "distribution: negative entry " +
                                      std::to_string(p));
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > tolerance) {
        throw ValidationError(ValidationError::Kind::BadProbability,
                              "distribution: entries sum to " +
                                  std::to_string(sum));
    }
    return ClassicalDistribution(std::move(probs));
}

CQEnsemble CQEnsemble::make(ClassicalDistribution probs,
                            std::vector<DensityMatrix> states) {
    if (states.size() != probs.size()) {
        throw DimensionError("ensemble: " + std::to_string(probs.size()) +
                             " probabilities vs " +
                             std::to_string(states.size()) + " states");
    }
    const std::size_t q = states.front().dim();
    for (const auto& s : states) {
        if (s.dim() != q) {
            throw DimensionError("ensemble: signal states differ in dimension");
        }
    }
    if (probs.size() * q > ComplexMatrix::max_dimension) {
        throw DimensionError("instance too large: ensemble joint dimension " +
                             std::to_string(probs.size() * q));
    }
    return CQEnsemble(std::move(probs), std::move(states));
}

DensityMatrix cq_state(const CQEnsemble& ensemble) {
    const std::size_t n = ensemble.n();
    const std::size_t q = ensemble.q();
    ComplexMatrix out(n * q, n * q);
    for (std::size_t x = 0; x < n; ++x) {
        const double px = ensemble.probs()[x];
        const auto& state = ensemble.states()[x].matrix();
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = 0; j < q; ++j) {
                out(x * q + i, x * q + j) = px * state(i, j);
            }
        }
    }
    return DensityMatrix::trusted(std::move(out));
}

DensityMatrix marginal_p(const CQEnsemble& ensemble) {
    const std::size_t n = ensemble.n();
    ComplexMatrix out(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        out(x, x) = ensemble.probs()[x];
    }
    return DensityMatrix::trusted(std::move(out));
}

DensityMatrix marginal_q(const CQEnsemble& ensemble) {
    const std::size_t q = ensemble.q();
    ComplexMatrix out(q, q);
    for (std::size_t x = 0; x < ensemble.n(); ++x) {
        const double px = ensemble.probs()[x];
        const auto& state = ensemble.states()[x].matrix();
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = 0; j < q; ++j) {
                out(i, j) += px * state(i, j);
            }
        }
    }
    return DensityMatrix::trusted(std::move(out));
}

ProjectiveMeasurement ProjectiveMeasurement::validated(
    std::vector<ComplexMatrix> projectors, double tolerance) {
    if (projectors.empty()) {
        throw DimensionError("measurement: no projectors");
    }
    const std::size_t d = projectors.front().rows();
    for (const auto& p : projectors) {
        if (!p.is_square() || p.rows() != d) {
            throw DimensionError("measurement: projectors must be square and "
                                 "of equal dimension");
        }
        if (!p.all_finite()) {
            throw ValidationError(ValidationError::Kind::NotFinite,
                                  "measurement: non-finite projector entry");
        }
        if (hermitian_deviation(p) > tolerance) {
            throw ValidationError(ValidationError::Kind::NotHermitian,
                                  "measurement: projector not Hermitian");
        }
    }
    for (const auto& p : projectors) {
        if ((p * p - p).max_abs() > tolerance) {
            throw ValidationError(ValidationError::Kind::NotIdempotent,
                                  "measurement: projector not idempotent");
        }
    }
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        for (std::size_t j = i + 1; j < projectors.size(); ++j) {
            if ((projectors[i] * projectors[j]).max_abs() > tolerance) {
                throw ValidationError(ValidationError::Kind::NotOrthogonal,
                                      "measurement: projectors " +
                                          std::to_string(i) + " and " +
                                          std::to_string(j) +
                                          " are not orthogonal");
            }
        }
    }
    ComplexMatrix sum(d, d);
    for (const auto& p : projectors) {
        sum += p;
    }
    if ((sum - ComplexMatrix::identity(d)).max_abs() > tolerance) {
        throw ValidationError(ValidationError::Kind::NotComplete,
                              "measurement: projectors do not sum to the "
                              "identity");
    }
    return ProjectiveMeasurement(std::move(projectors));
}

ProjectiveMeasurement measurement_from_projectors(
    std::vector<ComplexMatrix> projectors, double tolerance) {
    return ProjectiveMeasurement::validated(std::move(projectors), tolerance);
}

ProjectiveMeasurement computational_measurement(std::size_t dim) {
    std::vector<ComplexMatrix> projectors;
    projectors.reserve(dim);
    for (std::size_t y = 0; y < dim; ++y) {
        ComplexMatrix p(dim, dim);
        p(y, y) = 1.0;
        projectors.push_back(std::move(p));
    }
    return ProjectiveMeasurement::validated(std::move(projectors));
}

namespace {

void require_same_dim(const DensityMatrix& rho,
                      const ProjectiveMeasurement& measurement) {
    if (rho.dim() != measurement.dim()) {
        throw DimensionError("measurement dimension " +
                             std::to_string(measurement.dim()) +
                             " does not match state dimension " +
                             std::to_string(rho.dim()));
    }
}

} // namespace

DensityMatrix apply_projective(const DensityMatrix& rho,
                               const ProjectiveMeasurement& measurement) {
    require_same_dim(rho, measurement);
    const std::size_t d = rho.dim();
    ComplexMatrix out(d, d);
    for (const auto& p : measurement.projectors()) {
        out += p * rho.matrix() * p;
    }
    return DensityMatrix::trusted(std::move(out));
}

DensityMatrix measure_with_register(const DensityMatrix& rho,
                                    const ProjectiveMeasurement& measurement) {
    require_same_dim(rho, measurement);
    const std::size_t d = rho.dim();
    const std::size_t m = measurement.outcomes();
    if (d * m > ComplexMatrix::max_dimension) {
        throw DimensionError("instance too large: register state dimension " +
                             std::to_string(d * m));
    }
    ComplexMatrix out(d * m, d * m);
    for (std::size_t y = 0; y < m; ++y) {
        const auto& p = measurement.projectors()[y];
        const ComplexMatrix block = p * rho.matrix() * p;
        // Basis order |i> (x) |y>: row index i * m + y.
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                out(i * m + y, j * m + y) = block(i, j);
            }
        }
    }
    return DensityMatrix::trusted(std::move(out));
}

JointDistribution JointDistribution::validated(std::size_t rows,
                                               std::size_t cols,
                                               std::vector<double> table,
                                               double tolerance) {
    if (rows == 0 || cols == 0 ||
        rows * cols > ComplexMatrix::max_dimension) {
        throw DimensionError("joint: bad table shape " + std::to_string(rows) +
                             "x" + std::to_string(cols));
    }
    if (table.size() != rows * cols) {
        throw DimensionError("joint: table size does not match shape");
    }
    double sum = 0.0;
    for (double v : table) {
        if (!std::isfinite(v)) {
            throw ValidationError(ValidationError::Kind::NotFinite,
                                  "joint: non-finite entry");
        }
        if (v < 0.0) {
            throw ValidationError(ValidationError::Kind::BadProbability,
                                  "joint: negative entry " +
                                      std::to_string(v));
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > tolerance) {
        throw ValidationError(ValidationError::Kind::BadProbability,
                              "joint: entries sum to " + std::to_string(sum));
    }
    return JointDistribution(rows, cols, std::move(table));
}

std::vector<double> JointDistribution::row_marginal() const {
    std::vector<double> out(rows_, 0.0);
    for (std::size_t x = 0; x < rows_; ++x) {
        for (std::size_t y = 0; y < cols_; ++y) {
            out[x] += at(x, y);
        }
    }
    return out;
}

std::vector<double> JointDistribution::col_marginal() const {
    std::vector<double> out(cols_, 0.0);
    for (std::size_t x = 0; x < rows_; ++x) {
        for (std::size_t y = 0; y < cols_; ++y) {
            out[y] += at(x, y);
        }
    }
    return out;
}

JointDistribution induced_joint(const CQEnsemble& ensemble,
                                const ProjectiveMeasurement& measurement) {
    if (ensemble.q() != measurement.dim()) {
        throw DimensionError("induced_joint: measurement dimension does not "
                             "match signal dimension");
    }
    const std::size_t n = ensemble.n();
    const std::size_t m = measurement.outcomes();
    std::vector<double> table(n * m, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        const double px = ensemble.probs()[x];
        for (std::size_t y = 0; y < m; ++y) {
            const auto value = trace_product(measurement.projectors()[y],
                                             ensemble.states()[x].matrix());
            if (std::abs(value.imag()) > tol::imaginary) {
                throw NumericalError("induced_joint: outcome probability has "
                                     "imaginary part");
            }
            // Round-off can leave outcome probabilities a hair below zero.
            table[x * m + y] = px * std::max(0.0, value.real());
        }
    }
    return JointDistribution::validated(n, m, std::move(table));
}

DensityMatrix classical_diag_embedding(const JointDistribution& joint) {
    const std::size_t d = joint.rows() * joint.cols();
    ComplexMatrix out(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        out(k, k) = joint.table()[k];
    }
    return DensityMatrix::trusted(std::move(out));
}

} // namespace hsholevo
