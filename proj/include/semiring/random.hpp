#pragma once

#include <cstdint>
#include <random>

namespace semiring {

// mt19937_64 is fully specified by the standard; distributions are not, so
// sampling goes through uniform_below to keep runs reproducible everywhere.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

}  // namespace semiring
