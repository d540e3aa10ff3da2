#pragma once

// Numerical tolerances used throughout the library. These are part of the
// tested contract: changing them changes what the verifier accepts.

namespace hsholevo::tol {

// Structural validation of Hermitian inputs (densities, observables,
// projectors): max entrywise deviation from the adjoint.
inline constexpr double hermitian = 1e-10;

// Most negative eigenvalue a density matrix may carry before rejection.
inline constexpr double psd = 1e-10;

// Allowed deviation of traces, probability sums and completeness sums
// from their exact values.
inline constexpr double trace = 1e-10;

// Default slack for inequality margins: a margin counts as violated only
// below -inequality.
inline constexpr double inequality = 1e-9;

// Agreement required of quantities that are equal by exact algebra
// (dual-route evaluations, closed forms, cross-checks).
inline constexpr double exact = 1e-12;

// Agreement required of the classical/diagonal-embedding equality, which
// is exact arithmetic on both routes.
inline constexpr double embedding = 1e-14;

// Largest imaginary component tolerated on traces that must be real.
inline constexpr double imaginary = 1e-10;

// Off-diagonal convergence target of the Jacobi eigensolver, relative to
// the matrix scale.
inline constexpr double jacobi_off = 1e-12;

} // namespace hsholevo::tol
