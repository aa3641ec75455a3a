#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mmp/moment_problem.hpp"

namespace mmp {

// Draws `count` ordered points on [0, 1] with every consecutive gap at least
// min_gap, uniformly over that constrained set: order statistics of `count`
// uniforms on [0, 1 - (count-1) * min_gap], shifted apart by min_gap.
// Requires (count - 1) * min_gap < 1.
std::vector<double> random_switch_points(std::size_t count, double min_gap,
                                         std::mt19937_64& rng);

// Forward-then-invert study: per trial, draw a random configuration with
// `pairs` intervals, compute its moments, invert them, and record the
// max-norm recovery error. Deterministic per seed.
TrialStats roundtrip_experiment(std::size_t pairs, int trials, double min_gap,
                                std::uint64_t seed);

}  // namespace mmp
