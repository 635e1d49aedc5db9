// Counter-indexed splitmix64. Draw n of a seeded stream is a pure
// function of (seed, n), so any subrange of the stream can be produced
// independently and in parallel while matching the sequential order
// bit for bit on every platform.

#pragma once

#include <cstdint>

namespace bellsim::mc {

inline constexpr const char* kRngAlgorithm = "splitmix64-counter-v1";

/// The n-th 64-bit output of splitmix64 seeded with `seed`.
std::uint64_t rng_word(std::uint64_t seed, std::uint64_t counter);

/// rng_word mapped to [0, 1) with 53-bit resolution.
double rng_uniform(std::uint64_t seed, std::uint64_t counter);

}  // namespace bellsim::mc
