#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hsholevo/errors.hpp"
#include "hsholevo/tolerances.hpp"

namespace hsholevo {

/// Dense complex matrix in row-major order. Value type with plain copy
/// semantics; all sizes are validated at construction and the total
/// dimension is capped so accidental blow-ups fail fast.
class ComplexMatrix {
public:
    using value_type = std::complex<double>;

    /// Largest number of rows or columns any instance may have.
    static constexpr std::size_t max_dimension = 64;

    /// Empty 0x0 matrix.
    ComplexMatrix() = default;

    /// Zero-filled rows x cols matrix. Throws DimensionError when either
    /// extent is zero or exceeds max_dimension.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// n x n identity.
    static ComplexMatrix identity(std::size_t n);

    /// Builds a matrix from row-major entries, rejecting NaN/Inf entries
    /// and size mismatches.
    static ComplexMatrix from_data(std::size_t rows, std::size_t cols,
                                   std::vector<value_type> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    value_type& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    value_type operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    const std::vector<value_type>& data() const noexcept { return entries_; }

    ComplexMatrix adjoint() const;

    /// Trace of a square matrix.
    value_type trace() const;

    /// Sum of |entry|^2 (squared Frobenius norm).
    double sum_abs_squared() const noexcept;

    /// Largest |entry|.
    double max_abs() const noexcept;

    /// True when every entry is finite.
    bool all_finite() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(value_type scalar);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix::value_type s, ComplexMatrix m);
ComplexMatrix operator*(double s, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Which factor of a bipartite system partial_trace keeps.
enum class Subsystem { A, B };

/// Kronecker product. Throws DimensionError when the result would exceed
/// the dimension cap ("instance too large").
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of a square matrix on a dim_a * dim_b bipartite space,
/// keeping the requested factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Subsystem keep);

/// tr(a * b) accumulated entrywise, without materializing the product.
std::complex<double> trace_product(const ComplexMatrix& a,
                                   const ComplexMatrix& b);

/// Max entrywise deviation of m from its adjoint.
double hermitian_deviation(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::hermitian);

/// Eigenvalues of a Hermitian matrix, descending, computed with a cyclic
/// Jacobi iteration (deterministic: no pivot ties broken by runtime
/// state). Throws ValidationError when m is not Hermitian within
/// `tolerance` and NumericalError when the iteration fails to converge.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double tolerance = tol::hermitian);

/// Largest |eigenvalue| of a Hermitian matrix (spectral norm).
double spectral_norm(const ComplexMatrix& m,
                     double tolerance = tol::hermitian);

} // namespace hsholevo
