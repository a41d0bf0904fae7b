#pragma once

#include "semiring/finite_table.hpp"

namespace fixtures {

using semiring::FiniteSemiring;

// The three-element chain 0 < u < 1 with max as addition and min as
// multiplication; indices: 0 -> 0, 1 -> 1, 2 -> u.
inline FiniteSemiring chain3() {
    return FiniteSemiring::from_tables({{0, 1, 2}, {1, 1, 1}, {2, 1, 2}},
                                       {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}});
}

// The Boolean semiring as an order-2 table (1 + 1 = 1).
inline FiniteSemiring bool2() {
    return FiniteSemiring::from_tables({{0, 1}, {1, 1}}, {{0, 0}, {0, 1}});
}

// The two-element field viewed as a semiring (1 + 1 = 0).
inline FiniteSemiring z2() {
    return FiniteSemiring::from_tables({{0, 1}, {1, 0}}, {{0, 0}, {0, 1}});
}

// Z/4Z: has the nilpotent 2, so it is not nilpotent-free.
inline FiniteSemiring z4() {
    FiniteSemiring::Table add(4, std::vector<std::size_t>(4));
    FiniteSemiring::Table mul(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            add[i][j] = (i + j) % 4;
            mul[i][j] = (i * j) % 4;
        }
    return FiniteSemiring::from_tables(add, mul);
}

}  // namespace fixtures
