#pragma once

#include <optional>

#include "semiring/boolean.hpp"
#include "semiring/laws.hpp"
#include "semiring/naturals.hpp"
#include "semiring/tropical.hpp"

namespace semiring {

// divide_witness(s, a, b): the least x with a = b·x, if one exists. Backs
// both the divisibility predicate and exact division; b must be nonzero.

inline std::optional<Natural> divide_witness(const Naturals&, const Natural& a,
                                             const Natural& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero");
    if (!a.divisible_by(b)) return std::nullopt;
    return a.exact_div(b);
}

inline std::optional<TropValue> divide_witness(const TropicalNat&, const TropValue& a,
                                               const TropValue& b) {
    if (b.is_infinite()) throw DivisionByZero("division by the tropical zero");
    if (a.is_infinite()) return TropValue::infinity();
    std::int64_t d = a.finite_value() - b.finite_value();
    if (d < 0) return std::nullopt;  // b | a iff b <= a in min-plus
    return TropValue::finite(d);
}

inline std::optional<bool> divide_witness(const Boolean&, bool a, bool b) {
    if (!b) throw DivisionByZero("division by zero");
    return a;  // 1 divides everything: a = 1·a
}

template <FiniteCarrier S>
std::optional<typename S::value_type> divide_witness(const S& s, const typename S::value_type& a,
                                                     const typename S::value_type& b) {
    if (s.is_zero(b)) throw DivisionByZero("division by zero");
    for (const auto& x : s.elements())
        if (s.equal(s.mul(b, x), a)) return x;
    return std::nullopt;
}

/// b | a, i.e. a = b·x for some x; b nonzero.
template <class S>
bool divides(const S& s, const typename S::value_type& b, const typename S::value_type& a) {
    return divide_witness(s, a, b).has_value();
}

/// Exact division a / b; pre: b | a.
template <class S>
typename S::value_type exact_div(const S& s, const typename S::value_type& a,
                                 const typename S::value_type& b) {
    auto w = divide_witness(s, a, b);
    if (!w) throw NoDecomposition("exact_div: " + s.str(b) + " does not divide " + s.str(a));
    return *w;
}

}  // namespace semiring
