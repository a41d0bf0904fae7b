#pragma once

// Independent oracles for expected values: deliberately brute-force and kept
// apart from the implementation paths they check.

#include <cstdint>
#include <optional>
#include <vector>

#include "semiring/finite_table.hpp"

namespace oracles {

// Greatest common divisor by divisor enumeration; (a, b) != (0, 0).
inline std::uint64_t gcd_by_enumeration(std::uint64_t a, std::uint64_t b) {
    std::uint64_t m = a > b ? a : b;
    for (std::uint64_t d = m; d >= 1; --d) {
        bool da = (a == 0) || (a % d == 0);
        bool db = (b == 0) || (b % d == 0);
        if (da && db) return d;
    }
    return 1;
}

// Prime factor multiset by trial division, ascending.
inline std::vector<std::uint64_t> trial_division_factors(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        while (x % d == 0) {
            out.push_back(d);
            x /= d;
        }
    if (x > 1) out.push_back(x);
    return out;
}

inline bool is_prime_u64(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

// Cancellation counterexample on a finite table semiring, if any: a != 0
// with a*b = a*c and b != c.
inline std::optional<std::array<std::size_t, 3>> cancellation_counterexample(
    const semiring::FiniteSemiring& s) {
    for (std::size_t a = 1; a < s.order(); ++a)
        for (std::size_t b = 0; b < s.order(); ++b)
            for (std::size_t c = 0; c < s.order(); ++c)
                if (b != c && s.mul_raw(a, b) == s.mul_raw(a, c))
                    return std::array<std::size_t, 3>{a, b, c};
    return std::nullopt;
}

// First valid Euclidean norm assignment in lexicographic order, by plain
// nested sweep with no pruning; values range over 0..cap per nonzero
// element, infinity fixed at 0.
inline std::optional<std::vector<std::size_t>> first_norm_by_sweep(
    const semiring::FiniteSemiring& s, std::size_t cap) {
    std::size_t n = s.order();
    std::vector<std::size_t> delta(n, 0);

    auto valid = [&]() {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 1; b < n; ++b) {
                bool ok = false;
                for (std::size_t q = 0; q < n && !ok; ++q)
                    for (std::size_t r = 0; r < n && !ok; ++r)
                        if (s.add_raw(s.mul_raw(b, q), r) == a &&
                            (r == 0 || delta[r] < delta[b]))
                            ok = true;
                if (!ok) return false;
            }
        return true;
    };

    // odometer over delta[1..n-1], most significant digit first
    for (;;) {
        if (valid()) return delta;
        std::size_t i = n - 1;
        while (i >= 1) {
            if (delta[i] < cap) {
                ++delta[i];
                break;
            }
            delta[i] = 0;
            --i;
        }
        if (i == 0) return std::nullopt;
    }
}

// All ideals by generator-closure over every subset, the route the
// implementation does not take (it filters subsets directly).
inline std::vector<std::uint32_t> ideals_by_generator_closure(const semiring::FiniteSemiring& s) {
    std::size_t n = s.order();
    std::vector<std::uint32_t> out;
    for (std::uint32_t gens = 0; gens < (1u << n); ++gens) {
        std::uint32_t mask = 1u | gens;
        for (;;) {
            std::uint32_t next = mask;
            for (std::size_t a = 0; a < n; ++a) {
                if (!((mask >> a) & 1u)) continue;
                for (std::size_t b = 0; b < n; ++b) {
                    if ((mask >> b) & 1u) next |= (1u << s.add_raw(a, b));
                    next |= (1u << s.mul_raw(b, a));
                }
            }
            if (next == mask) break;
            mask = next;
        }
        bool seen = false;
        for (std::uint32_t m : out) seen = seen || m == mask;
        if (!seen) out.push_back(mask);
    }
    return out;
}

}  // namespace oracles
