#pragma once

#include "minlin/measure.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace minlin {

/// Independent stream seed derived from a base seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic rational convex combinations of the Dirac masses.
std::vector<Measure> sample_simplex(std::size_t num_points, std::size_t count,
                                    std::uint64_t seed);

/// Deterministic measures outside the probability simplex: a negative weight,
/// or nonnegative weights whose mass differs from one.
std::vector<Measure> sample_outside_simplex(std::size_t num_points, std::size_t count,
                                            std::uint64_t seed);

inline constexpr std::size_t kDefaultSampleCount = 20;

}  // namespace minlin
