#include "hsholevo/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "hsholevo/checks.hpp"
#include "hsholevo/errors.hpp"
#include "hsholevo/info_measures.hpp"
#include "hsholevo/quantum_objects.hpp"
#include "hsholevo/sampling.hpp"
#include "hsholevo/tolerances.hpp"

namespace hsholevo {

SweepReport run_sweep(std::size_t points) {
    if (points < 2) {
        throw ValidationError(ValidationError::Kind::BadConfig,
                              "run_sweep: need at least two grid points");
    }
    const double pi = std::acos(-1.0);
    SweepReport report;
    report.rows.reserve(points);
    const auto measurement = computational_measurement(2);

    for (std::size_t i = 0; i < points; ++i) {
        const double theta =
            pi * static_cast<double>(i) / static_cast<double>(points - 1);
        const auto ensemble = binary_pure_family(theta);
        const auto joint = induced_joint(ensemble, measurement);
        const auto rho_q = marginal_q(ensemble);
        const auto eigs = hermitian_eigenvalues(rho_q.matrix());
        const auto residual = cross_entropy_residual(ensemble);

        SweepRow row;
        row.theta = theta;
        row.eig_hi = eigs.front();
        row.eig_lo = eigs.back();
        row.l_rho_q = logical_entropy(rho_q);
        row.d_classical = hs_mutual_classical(joint);
        row.d_quantum = hs_mutual_quantum(ensemble);

        const double sin2 = std::sin(theta) * std::sin(theta);
        row.bound_quarter_sin2 = 0.25 * sin2;

        const double l_p =
            classical_logical_entropy(ensemble.probs().probs());
        const double product_bound = 0.5 * l_p * row.l_rho_q;
        row.margin_a = product_bound - 0.5 * row.d_classical;
        row.margin_b = std::abs(residual.direct);
        row.margin_c = product_bound - row.d_quantum;
        row.margin_d = 0.5 * row.l_rho_q - row.d_classical;
        row.holevo_chi_bits = holevo_chi(ensemble);
        row.shannon_mutual_bits = shannon_mutual(joint);
        report.rows.push_back(row);

        const double c = std::abs(std::cos(theta));
        report.max_eigenvalue_dev =
            std::max({report.max_eigenvalue_dev,
                      std::abs(row.eig_hi - 0.5 * (1.0 + c)),
                      std::abs(row.eig_lo - 0.5 * (1.0 - c))});
        report.max_entropy_dev = std::max(
            report.max_entropy_dev, std::abs(row.l_rho_q - 0.5 * sin2));
        report.max_classical_dev =
            std::max(report.max_classical_dev,
                     std::abs(row.d_classical - sin2 * sin2 / 8.0));
        report.max_quantum_dev = std::max(
            report.max_quantum_dev, std::abs(row.d_quantum - sin2 / 8.0));
        report.max_residual_dev =
            std::max(report.max_residual_dev,
                     std::abs(residual.direct - 0.25 * sin2));

        if (theta <= 0.5 * pi + 1e-15 &&
            row.d_classical > row.bound_quarter_sin2 + tol::exact) {
            ++report.bound_violations;
        }
    }

    report.analytic_ok = report.max_eigenvalue_dev <= tol::exact &&
                         report.max_entropy_dev <= tol::exact &&
                         report.max_classical_dev <= tol::exact &&
                         report.max_quantum_dev <= tol::exact &&
                         report.max_residual_dev <= tol::exact &&
                         report.bound_violations == 0;
    return report;
}

} // namespace hsholevo
