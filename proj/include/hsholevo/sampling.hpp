#pragma once

#include "hsholevo/config.hpp"
#include "hsholevo/quantum_objects.hpp"
#include "hsholevo/rng.hpp"

namespace hsholevo {

/// Point on the probability simplex via normalized exponentials.
std::vector<double> sample_simplex(std::size_t n, TrialRng& rng);

/// Random density of the requested rank: G G^dag normalized to unit
/// trace, with G a dim x rank matrix of independent complex Gaussians.
/// The result is fully validated before return.
DensityMatrix sample_ginibre_density(std::size_t dim, std::size_t rank,
                                     TrialRng& rng);

/// Density with rank chosen by mode: 1 (pure), dim (mixed), or uniform in
/// 1..dim (mixed-ranks).
DensityMatrix sample_density(std::size_t dim, EnsembleMode mode,
                             TrialRng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// diagonal phases of R absorbed. Orthonormalization runs twice so the
/// unitarity defect stays at machine level.
ComplexMatrix sample_haar_unitary(std::size_t dim, TrialRng& rng);

/// Projective measurement with exactly `blocks` outcomes: the basis
/// projectors are grouped into `blocks` contiguous runs of random sizes
/// (each at least 1) and conjugated by one Haar unitary.
ProjectiveMeasurement sample_projective_measurement(std::size_t dim,
                                                    std::size_t blocks,
                                                    TrialRng& rng);

/// Ensemble of n signal states on dimension q with simplex-sampled
/// probabilities and mode-ranked states.
CQEnsemble sample_ensemble(std::size_t n, std::size_t q, EnsembleMode mode,
                           TrialRng& rng);

/// Ensemble whose signal states live on pairwise-orthogonal subspaces:
/// the q-dimensional space is split into n blocks, each state is drawn
/// inside its block, and everything is conjugated by one Haar unitary.
/// Requires q >= n.
CQEnsemble sample_orthogonal_support_ensemble(std::size_t n, std::size_t q,
                                              EnsembleMode mode,
                                              TrialRng& rng);

/// Ensemble whose signal states are all the same randomly drawn state.
CQEnsemble sample_identical_signal_ensemble(std::size_t n, std::size_t q,
                                            EnsembleMode mode, TrialRng& rng);

/// The two-state qubit family used by the worked example: balanced
/// probabilities, first signal |0><0|, second the projector onto
/// cos(theta)|0> + sin(theta)|1>.
CQEnsemble binary_pure_family(double theta);

} // namespace hsholevo
