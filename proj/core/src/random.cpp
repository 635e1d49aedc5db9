#include "bellsim/random.hpp"

namespace bellsim::mc {

std::uint64_t rng_word(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double rng_uniform(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(rng_word(seed, counter) >> 11) * 0x1.0p-53;
}

}  // namespace bellsim::mc
