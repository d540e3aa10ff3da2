#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hsholevo/config.hpp"
#include "hsholevo/info_measures.hpp"
#include "hsholevo/sampling.hpp"

namespace hsholevo {

/// Standing of a margin. Proven margins are backed by proofs, so a
/// violation means a bug and fails the run. Empirical margins are
/// conjectured bounds whose violations are counted and reported as data.
/// Identity margins record the residual of a claimed equality; they are
/// never asserted.
enum class MarginClass { Proven, Empirical, Identity };

const char* to_string(MarginClass klass);

struct NamedMargin {
    const char* name;
    MarginClass klass;
    Margin margin;
};

/// Inputs of a violating trial, kept in full so the instance can be
/// replayed. Ordered key/value pairs; values are scalars, vectors or
/// matrices.
using PayloadValue = std::variant<double, std::vector<double>, ComplexMatrix,
                                  std::vector<ComplexMatrix>>;
using Payload = std::vector<std::pair<std::string, PayloadValue>>;

/// Outcome of one randomized trial: the sampled instance shape, every
/// margin evaluated on it, and the full inputs when a margin was
/// violated.
struct TrialRecord {
    std::uint64_t trial_index = 0;
    std::size_t n = 0;       // label-space dimension, 0 when not applicable
    std::size_t q = 0;       // signal-space dimension
    std::size_t blocks = 0;  // measurement outcome count, 0 when unused
    EnsembleMode mode = EnsembleMode::MixedRanks;
    std::vector<NamedMargin> margins;
    std::optional<Payload> counterexample;

    bool any_violation() const {
        for (const auto& m : margins) {
            if (!m.margin.satisfied) {
                return true;
            }
        }
        return false;
    }
};

/// Divergence does not grow under the projective measurement channel.
TrialRecord check_contractivity(const RunConfig& cfg, std::uint64_t trial);

/// Divergence of mixtures is at most the mixture of divergences.
TrialRecord check_joint_convexity(const RunConfig& cfg, std::uint64_t trial);

/// Divergence of reduced states (padded back with the maximally mixed
/// factor) is at most the joint divergence; also verifies that padding
/// equals 1/dim_b times the reduced divergence, which is exact algebra.
TrialRecord check_partial_trace_monotonicity(const RunConfig& cfg,
                                             std::uint64_t trial);

/// Main bound: (1/q) x measured classical mutual divergence is at most
/// the quantum mutual divergence. Each trial also checks the Shannon
/// mutual information against the Holevo quantity, and the expanded
/// trace-product route against the direct evaluation.
TrialRecord check_mutual_info_bound(const RunConfig& cfg, std::uint64_t trial);

/// Entropy-product bounds on random ensembles: scaled classical and
/// quantum mutual divergences against L(marginal_p) L(marginal_q) / 2
/// (empirical), plus the cross-entropy identity residual (recorded).
TrialRecord check_entropy_product_bounds(const RunConfig& cfg,
                                         std::uint64_t trial);

/// Same bounds on balanced two-label ensembles, where the additional
/// half-entropy form of the classical bound applies.
TrialRecord check_binary_balanced_bounds(const RunConfig& cfg,
                                         std::uint64_t trial);

/// Cross-entropy identity residual on ensembles with pairwise-orthogonal
/// signal supports, with a closed-form cross-check of the residual.
TrialRecord check_cross_entropy_orthogonal(const RunConfig& cfg,
                                           std::uint64_t trial);

/// Same residual on overlapping pure-signal ensembles (trial 0 is the
/// fixed worked-example instance with residual 1/8).
TrialRecord check_cross_entropy_overlapping(const RunConfig& cfg,
                                            std::uint64_t trial);

/// Same residual on identical-signal ensembles, where it vanishes.
TrialRecord check_cross_entropy_identical(const RunConfig& cfg,
                                          std::uint64_t trial);

/// Printed correlation lower bound, recorded in both orientations (trial
/// 0 is the fixed maximally entangled exhibit).
TrialRecord check_correlation_lower_bound(const RunConfig& cfg,
                                          std::uint64_t trial);

/// Deliberately reversed contractivity margin; only wired in when the
/// violation-injection hook is set, to exercise the failure path.
TrialRecord check_injected_negated(const RunConfig& cfg, std::uint64_t trial);

struct CheckDef {
    const char* name;
    TrialRecord (*run)(const RunConfig&, std::uint64_t);
};

/// The checks a verification run executes, in report order.
std::vector<CheckDef> suite_checks(bool include_injected);

/// Signed residual of the cross-entropy identity
///   tr(joint (1 - marginal_p (x) marginal_q)) - L(joint)
/// evaluated on full matrices (direct) and through the blockwise closed
/// form sum_x p(x)^2 (tr(state_x^2) - tr(state_x avg)).
struct CrossEntropyResidual {
    double direct = 0.0;
    double closed_form = 0.0;
};

CrossEntropyResidual cross_entropy_residual(const CQEnsemble& ensemble);

} // namespace hsholevo
