#include "hsholevo/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace hsholevo {

std::vector<double> sample_simplex(std::size_t n, TrialRng& rng) {
    if (n == 0) {
        throw DimensionError("sample_simplex: empty distribution");
    }
    std::vector<double> weights(n);
    double sum = 0.0;
    for (auto& w : weights) {
        w = -std::log(rng.uniform_positive());
        sum += w;
    }
    for (auto& w : weights) {
        w /= sum;
    }
    return weights;
}

DensityMatrix sample_ginibre_density(std::size_t dim, std::size_t rank,
                                     TrialRng& rng) {
    if (rank == 0 || rank > dim) {
        throw DimensionError("sample_ginibre_density: rank must be in 1..dim");
    }
    ComplexMatrix g(dim, rank);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
            g(i, j) = {rng.normal(), rng.normal()};
        }
    }
    ComplexMatrix m = g * g.adjoint();
    const double tr = m.trace().real();
    m *= ComplexMatrix::value_type(1.0 / tr, 0.0);
    // Symmetrize exactly; G G^dag is Hermitian up to round-off.
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < dim; ++j) {
            const auto avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }
    return DensityMatrix::validated(std::move(m));
}

DensityMatrix sample_density(std::size_t dim, EnsembleMode mode,
                             TrialRng& rng) {
    std::size_t rank = dim;
    switch (mode) {
        case EnsembleMode::Pure:
            rank = 1;
            break;
        case EnsembleMode::Mixed:
            rank = dim;
            break;
        case EnsembleMode::MixedRanks:
            rank = 1 + rng.uniform_index(dim);
            break;
    }
    return sample_ginibre_density(dim, rank, rng);
}

ComplexMatrix sample_haar_unitary(std::size_t dim, TrialRng& rng) {
    if (dim == 0 || dim > ComplexMatrix::max_dimension) {
        throw DimensionError("sample_haar_unitary: bad dimension");
    }
    ComplexMatrix u(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            u(i, j) = {rng.normal(), rng.normal()};
        }
    }
    // Gram-Schmidt on columns with one reorthogonalization pass. The
    // unique factorization with positive diagonal makes the Q factor
    // Haar-distributed for Gaussian input.
    for (std::size_t j = 0; j < dim; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                ComplexMatrix::value_type overlap(0.0, 0.0);
                for (std::size_t i = 0; i < dim; ++i) {
                    overlap += std::conj(u(i, k)) * u(i, j);
                }
                for (std::size_t i = 0; i < dim; ++i) {
                    u(i, j) -= overlap * u(i, k);
                }
            }
        }
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            norm_sq += std::norm(u(i, j));
        }
        const double norm = std::sqrt(norm_sq);
        if (norm < 1e-12) {
            throw NumericalError("sample_haar_unitary: degenerate column");
        }
        for (std::size_t i = 0; i < dim; ++i) {
            u(i, j) /= norm;
        }
    }
    return u;
}

namespace {

// Splits dim into `parts` contiguous group sizes, each >= 1, by drawing
// parts-1 distinct cut points uniformly.
std::vector<std::size_t> sample_composition(std::size_t dim,
                                            std::size_t parts,
                                            TrialRng& rng) {
    if (parts == 0 || parts > dim) {
        throw DimensionError("sample_composition: parts must be in 1..dim");
    }
    std::vector<std::size_t> cuts;
    cuts.reserve(parts - 1);
    while (cuts.size() + 1 < parts) {
        const std::size_t candidate = 1 + rng.uniform_index(dim - 1);
        if (std::find(cuts.begin(), cuts.end(), candidate) == cuts.end()) {
            cuts.push_back(candidate);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::size_t> sizes;
    sizes.reserve(parts);
    std::size_t previous = 0;
    for (std::size_t cut : cuts) {
        sizes.push_back(cut - previous);
        previous = cut;
    }
    sizes.push_back(dim - previous);
    return sizes;
}

} // namespace

ProjectiveMeasurement sample_projective_measurement(std::size_t dim,
                                                    std::size_t blocks,
                                                    TrialRng& rng) {
    const auto sizes = sample_composition(dim, blocks, rng);
    const auto u = sample_haar_unitary(dim, rng);
    std::vector<ComplexMatrix> projectors;
    projectors.reserve(blocks);
    std::size_t offset = 0;
    for (std::size_t size : sizes) {
        ComplexMatrix p(dim, dim);
        for (std::size_t c = offset; c < offset + size; ++c) {
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < dim; ++j) {
                    p(i, j) += u(i, c) * std::conj(u(j, c));
                }
            }
        }
        // Clean the tiny anti-Hermitian residue of the outer-product sums.
        for (std::size_t i = 0; i < dim; ++i) {
            p(i, i) = p(i, i).real();
            for (std::size_t j = i + 1; j < dim; ++j) {
                const auto avg = 0.5 * (p(i, j) + std::conj(p(j, i)));
                p(i, j) = avg;
                p(j, i) = std::conj(avg);
            }
        }
        projectors.push_back(std::move(p));
        offset += size;
    }
    return ProjectiveMeasurement::validated(std::move(projectors));
}

CQEnsemble sample_ensemble(std::size_t n, std::size_t q, EnsembleMode mode,
                           TrialRng& rng) {
    auto probs = ClassicalDistribution::validated(sample_simplex(n, rng));
    std::vector<DensityMatrix> states;
    states.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
        states.push_back(sample_density(q, mode, rng));
    }
    return CQEnsemble::make(std::move(probs), std::move(states));
}

CQEnsemble sample_orthogonal_support_ensemble(std::size_t n, std::size_t q,
                                              EnsembleMode mode,
                                              TrialRng& rng) {
    if (q < n) {
        throw DimensionError("sample_orthogonal_support_ensemble: need at "
                             "least one dimension per signal");
    }
    const auto sizes = sample_composition(q, n, rng);
    const auto u = sample_haar_unitary(q, rng);
    auto probs = ClassicalDistribution::validated(sample_simplex(n, rng));
    std::vector<DensityMatrix> states;
    states.reserve(n);
    std::size_t offset = 0;
    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t size = sizes[x];
        std::size_t rank = size;
        if (mode == EnsembleMode::Pure) {
            rank = 1;
        } else if (mode == EnsembleMode::MixedRanks) {
            rank = 1 + rng.uniform_index(size);
        }
        const auto block = sample_ginibre_density(size, rank, rng);
        ComplexMatrix embedded(q, q);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                embedded(offset + i, offset + j) = block.matrix()(i, j);
            }
        }
        const ComplexMatrix rotated = u * embedded * u.adjoint();
        states.push_back(DensityMatrix::trusted(rotated));
        offset += size;
    }
    return CQEnsemble::make(std::move(probs), std::move(states));
}

CQEnsemble sample_identical_signal_ensemble(std::size_t n, std::size_t q,
                                            EnsembleMode mode,
                                            TrialRng& rng) {
    auto probs = ClassicalDistribution::validated(sample_simplex(n, rng));
    const auto state = sample_density(q, mode, rng);
    std::vector<DensityMatrix> states(n, state);
    return CQEnsemble::make(std::move(probs), std::move(states));
}

CQEnsemble binary_pure_family(double theta) {
    auto probs = ClassicalDistribution::validated({0.5, 0.5});
    std::vector<DensityMatrix> states;
    states.push_back(pure_state_density({{1.0, 0.0}, {0.0, 0.0}}));
    states.push_back(pure_state_density(
        {{std::cos(theta), 0.0}, {std::sin(theta), 0.0}}));
    return CQEnsemble::make(std::move(probs), std::move(states));
}

} // namespace hsholevo
