#include "hsholevo/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hsholevo {

namespace {

void require_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
    if (rows > ComplexMatrix::max_dimension ||
        cols > ComplexMatrix::max_dimension) {
        throw DimensionError(
            "instance too large: " + std::to_string(rows) + "x" +
            std::to_string(cols) + " exceeds the cap of " +
            std::to_string(ComplexMatrix::max_dimension));
    }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " +
                             std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " +
                             std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
    require_dims(rows, cols);
    entries_.assign(rows * cols, value_type(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_data(std::size_t rows, std::size_t cols,
                                       std::vector<value_type> entries) {
    require_dims(rows, cols);
    if (entries.size() != rows * cols) {
        throw DimensionError("from_data: expected " +
                             std::to_string(rows * cols) + " entries, got " +
                             std::to_string(entries.size()));
    }
    ComplexMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.entries_ = std::move(entries);
    if (!m.all_finite()) {
        throw ValidationError(ValidationError::Kind::NotFinite,
                              "from_data: non-finite entry");
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix::value_type ComplexMatrix::trace() const {
    if (!is_square()) {
        throw DimensionError("trace: matrix is not square");
    }
    value_type sum(0.0, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

double ComplexMatrix::sum_abs_squared() const noexcept {
    double sum = 0.0;
    for (const auto& z : entries_) {
        sum += std::norm(z);
    }
    return sum;
}

double ComplexMatrix::max_abs() const noexcept {
    double best = 0.0;
    for (const auto& z : entries_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

bool ComplexMatrix::all_finite() const noexcept {
    for (const auto& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(value_type scalar) {
    for (auto& z : entries_) {
        z *= scalar;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(ComplexMatrix::value_type s, ComplexMatrix m) {
    m *= s;
    return m;
}

ComplexMatrix operator*(double s, ComplexMatrix m) {
    m *= ComplexMatrix::value_type(s, 0.0);
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("operator*: inner dimensions disagree");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto aik = a(i, k);
            if (aik == ComplexMatrix::value_type(0.0, 0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > ComplexMatrix::max_dimension ||
        cols > ComplexMatrix::max_dimension) {
        throw DimensionError("instance too large: kron would produce " +
                             std::to_string(rows) + "x" +
                             std::to_string(cols));
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Subsystem keep) {
    if (dim_a == 0 || dim_b == 0) {
        throw DimensionError("partial_trace: factor dimensions must be positive");
    }
    if (!m.is_square() || m.rows() != dim_a * dim_b) {
        throw DimensionError("partial_trace: matrix is not " +
                             std::to_string(dim_a * dim_b) + "x" +
                             std::to_string(dim_a * dim_b));
    }
    if (keep == Subsystem::A) {
        ComplexMatrix out(dim_a, dim_a);
        for (std::size_t i = 0; i < dim_a; ++i) {
            for (std::size_t j = 0; j < dim_a; ++j) {
                ComplexMatrix::value_type sum(0.0, 0.0);
                for (std::size_t k = 0; k < dim_b; ++k) {
                    sum += m(i * dim_b + k, j * dim_b + k);
                }
                out(i, j) = sum;
            }
        }
        return out;
    }
    ComplexMatrix out(dim_b, dim_b);
    for (std::size_t k = 0; k < dim_b; ++k) {
        for (std::size_t l = 0; l < dim_b; ++l) {
            ComplexMatrix::value_type sum(0.0, 0.0);
            for (std::size_t i = 0; i < dim_a; ++i) {
                sum += m(i * dim_b + k, i * dim_b + l);
            }
            out(k, l) = sum;
        }
    }
    return out;
}

std::complex<double> trace_product(const ComplexMatrix& a,
                                   const ComplexMatrix& b) {
    if (a.cols() != b.rows() || b.cols() != a.rows()) {
        throw DimensionError("trace_product: shapes are not composable to a square product");
    }
    std::complex<double> sum(0.0, 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            sum += a(i, j) * b(j, i);
        }
    }
    return sum;
}

double hermitian_deviation(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("hermitian_deviation: matrix is not square");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
    return m.is_square() && m.all_finite() &&
           hermitian_deviation(m) <= tolerance;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& w) {
    double sum = 0.0;
    for (std::size_t i = 0; i < w.rows(); ++i) {
        for (std::size_t j = i + 1; j < w.cols(); ++j) {
            sum += 2.0 * std::norm(w(i, j));
        }
    }
    return std::sqrt(sum);
}

// One cyclic sweep of two-sided Jacobi rotations over all (p, q) pairs in
// a fixed order, preserving hermiticity by mirroring.
void jacobi_sweep(ComplexMatrix& w) {
    const std::size_t n = w.rows();
    std::vector<ComplexMatrix::value_type> col_p(n), col_q(n);
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const auto b = w(p, q);
            const double mag = std::abs(b);
            if (mag == 0.0) {
                continue;
            }
            const auto phase = b / mag;
            const double app = w(p, p).real();
            const double aqq = w(q, q).real();
            const double tau = (aqq - app) / (2.0 * mag);
            double t;
            if (tau >= 0.0) {
                t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
            } else {
                t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
            }
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;

            for (std::size_t k = 0; k < n; ++k) {
                col_p[k] = w(k, p);
                col_q[k] = w(k, q);
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (k == p || k == q) {
                    continue;
                }
                const auto nkp = c * col_p[k] - s * std::conj(phase) * col_q[k];
                const auto nkq = s * phase * col_p[k] + c * col_q[k];
                w(k, p) = nkp;
                w(p, k) = std::conj(nkp);
                w(k, q) = nkq;
                w(q, k) = std::conj(nkq);
            }
            w(p, p) = app - t * mag;
            w(q, q) = aqq + t * mag;
            w(p, q) = 0.0;
            w(q, p) = 0.0;
        }
    }
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double tolerance) {
    if (!m.is_square()) {
        throw DimensionError("hermitian_eigenvalues: matrix is not square");
    }
    if (!m.all_finite()) {
        throw ValidationError(ValidationError::Kind::NotFinite,
                              "hermitian_eigenvalues: non-finite entry");
    }
    if (hermitian_deviation(m) > tolerance) {
        throw ValidationError(ValidationError::Kind::NotHermitian,
                              "hermitian_eigenvalues: matrix is not Hermitian "
                              "within tolerance");
    }

    const std::size_t n = m.rows();
    // Work on the exactly Hermitian average of m and its adjoint so the
    // rotation formulas see clean input.
    ComplexMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        w(i, i) = 0.5 * (m(i, i) + std::conj(m(i, i)));
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            w(i, j) = avg;
            w(j, i) = std::conj(avg);
        }
    }

    const double scale = std::max(1.0, std::sqrt(w.sum_abs_squared()));
    constexpr int max_sweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(w) <= tol::jacobi_off * scale) {
            converged = true;
            break;
        }
        jacobi_sweep(w);
    }
    if (!converged && off_diagonal_norm(w) > tol::jacobi_off * scale) {
        throw NumericalError("hermitian_eigenvalues: Jacobi iteration did not "
                             "converge");
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = w(i, i).real();
    }
    std::sort(values.begin(), values.end(), std::greater<double>());
    return values;
}

double spectral_norm(const ComplexMatrix& m, double tolerance) {
    const auto values = hermitian_eigenvalues(m, tolerance);
    double best = 0.0;
    for (double v : values) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

} // namespace hsholevo
