#pragma once

#include <cstddef>
#include <vector>

namespace hsholevo {

// One grid point of the balanced two-signal family p = (1/2, 1/2),
// rho_0 = |0><0|, rho_1 the projector onto (cos t, sin t), measured in the
// computational basis.
struct SweepRow {
    double theta = 0.0;
    double eig_hi = 0.0;
    double eig_lo = 0.0;
    double l_rho_q = 0.0;
    double d_classical = 0.0;
    double d_quantum = 0.0;
    double bound_quarter_sin2 = 0.0;
    double margin_a = 0.0;
    double margin_b = 0.0;
    double margin_c = 0.0;
    double margin_d = 0.0;
    double holevo_chi_bits = 0.0;
    double shannon_mutual_bits = 0.0;
};

// Closed-form cross checks accumulated over the grid. The family admits
// exact expressions for every column: eigenvalues (1 +- |cos t|)/2, purity
// deficit sin^2(t)/2, classical divergence sin^4(t)/8, quantum divergence
// sin^2(t)/8, identity residual sin^2(t)/4.
struct SweepReport {
    std::vector<SweepRow> rows;
    double max_eigenvalue_dev = 0.0;
    double max_entropy_dev = 0.0;
    double max_classical_dev = 0.0;
    double max_quantum_dev = 0.0;
    double max_residual_dev = 0.0;
    // d_classical > bound_quarter_sin2 + tol, counted on theta <= pi/2.
    std::size_t bound_violations = 0;
    bool analytic_ok = false;
};

SweepReport run_sweep(std::size_t points);

} // namespace hsholevo
