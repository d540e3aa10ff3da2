#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hsholevo {

/// Identifies one reproducible random stream: every trial of every check
/// draws from its own stream derived from (master seed, check salt,
/// trial index), so trials can run in any order or in parallel without
/// changing the numbers.
struct RngSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t trial_index = 0;
};

/// SplitMix64 finalizer; used only for seed mixing.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Stable salt for a check name (FNV-1a).
std::uint64_t salt_from_name(std::string_view name) noexcept;

/// Deterministic random stream. The uniform and normal transforms are
/// implemented here rather than with <random> distributions because the
/// standard leaves those sequences implementation-defined, and report
/// bytes must reproduce across toolchains.
class TrialRng {
public:
    TrialRng(std::uint64_t master_seed, std::uint64_t salt,
             std::uint64_t trial_index);
    explicit TrialRng(const RngSpec& spec, std::uint64_t salt = 0);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    /// Uniform double in (0, 1]; safe as a log argument.
    double uniform_positive();

    /// Standard normal via Box-Muller (pairs cached).
    double normal();

    /// Uniform index in [0, n).
    std::size_t uniform_index(std::size_t n);

private:
    std::mt19937_64 engine_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

} // namespace hsholevo
