#pragma once

#include "semiring/boolean.hpp"
#include "semiring/naturals.hpp"
#include "semiring/tropical.hpp"

namespace semiring {

/// Registry of structure facts for the built-in infinite families. Finite
/// table semirings get the same facts computed at runtime from their ideal
/// lattice instead.
template <class S>
struct family_traits {
    static constexpr bool registered = false;
    static constexpr bool semidomain = false;
    static constexpr bool gcd_semidomain = false;
    static constexpr bool subtractive = false;
    static constexpr bool pisd = false;
    static constexpr bool principal_ideals_subtractive = false;
    static constexpr bool accp = false;
    static constexpr bool nilpotent_free = false;
};

template <>
struct family_traits<Naturals> {
    static constexpr bool registered = true;
    static constexpr bool semidomain = true;
    static constexpr bool gcd_semidomain = true;
    // <2,3> = {0,2,3,4,...} witnesses both failures: 2+1 = 3 lies in it
    // while 1 does not, and no single generator produces it.
    static constexpr bool subtractive = false;
    static constexpr bool pisd = false;
    static constexpr bool principal_ideals_subtractive = true;
    static constexpr bool accp = true;
    static constexpr bool nilpotent_free = true;
};

template <>
struct family_traits<Boolean> {
    static constexpr bool registered = true;
    static constexpr bool semidomain = true;
    static constexpr bool gcd_semidomain = true;
    static constexpr bool subtractive = true;
    static constexpr bool pisd = true;
    static constexpr bool principal_ideals_subtractive = true;
    static constexpr bool accp = true;
    static constexpr bool nilpotent_free = true;
};

template <>
struct family_traits<TropicalNat> {
    static constexpr bool registered = true;
    static constexpr bool semidomain = true;
    static constexpr bool gcd_semidomain = true;  // gcd = min
    // Every ideal is {x >= m} ∪ {∞}, which is subtractive and principal.
    static constexpr bool subtractive = true;
    static constexpr bool pisd = true;
    static constexpr bool principal_ideals_subtractive = true;
    static constexpr bool accp = true;
    static constexpr bool nilpotent_free = true;
};

}  // namespace semiring
