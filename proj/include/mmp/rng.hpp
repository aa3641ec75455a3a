#pragma once

#include <cstdint>
#include <random>

namespace mmp {

// splitmix64 mixing step. Used to derive independent per-trial seeds from a
// single experiment seed so trials can be evaluated in any order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(seed ^ splitmix64(trial + 1));
}

// Uniform double in [0, 1). Hand-rolled from the top 53 bits so that seeded
// streams are identical across standard library implementations
// (std::uniform_real_distribution is not pinned by the standard).
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

}  // namespace mmp
