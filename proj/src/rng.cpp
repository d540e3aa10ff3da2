#include "hsholevo/rng.hpp"

#include <cmath>

#include "hsholevo/errors.hpp"

namespace hsholevo {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t salt_from_name(std::string_view name) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

namespace {

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t salt,
                                 std::uint64_t trial) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ splitmix64(salt));
    s = splitmix64(s ^ (trial * 0x9E3779B97F4A7C15ULL + 1));
    return s;
}

} // namespace

TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t salt,
                   std::uint64_t trial_index)
    : engine_(derive_stream_seed(master_seed, salt, trial_index)) {}

TrialRng::TrialRng(const RngSpec& spec, std::uint64_t salt)
    : TrialRng(spec.master_seed, salt, spec.trial_index) {}

std::uint64_t TrialRng::next_u64() {
    return engine_();
}

double TrialRng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double TrialRng::uniform_positive() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double TrialRng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = uniform_positive();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    cached_ = r * std::sin(angle);
    has_cached_ = true;
    return r * std::cos(angle);
}

std::size_t TrialRng::uniform_index(std::size_t n) {
    if (n == 0) {
        throw DimensionError("uniform_index: empty range");
    }
    // Multiply-shift mapping; bias is at most n / 2^64, far below anything
    // observable here, and the result is fully deterministic.
    const unsigned __int128 product =
        static_cast<unsigned __int128>(next_u64()) *
        static_cast<unsigned __int128>(n);
    return static_cast<std::size_t>(product >> 64);
}

} // namespace hsholevo
