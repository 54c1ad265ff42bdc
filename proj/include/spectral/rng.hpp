#pragma once

#include <cstdint>
#include <random>

namespace spectral {

// Deterministic draw in [0, bound). mt19937_64's sequence is pinned by the
// standard; std::uniform_int_distribution's is not, so seeded artifacts
// use this instead.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

}  // namespace spectral
