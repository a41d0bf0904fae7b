#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "semiring/boolean.hpp"
#include "semiring/naturals.hpp"
#include "semiring/random.hpp"
#include "semiring/tropical.hpp"
#include "semiring/verdict.hpp"

namespace semiring {

template <class S>
concept SemiringFamily = requires(const S s, typename S::value_type a) {
    { s.zero() } -> std::same_as<typename S::value_type>;
    { s.one() } -> std::same_as<typename S::value_type>;
    { s.add(a, a) } -> std::same_as<typename S::value_type>;
    { s.mul(a, a) } -> std::same_as<typename S::value_type>;
    { s.equal(a, a) } -> std::same_as<bool>;
    { s.is_zero(a) } -> std::same_as<bool>;
    { s.is_unit(a) } -> std::same_as<bool>;
    { s.str(a) } -> std::same_as<std::string>;
};

template <class S>
concept FiniteCarrier = SemiringFamily<S> && S::finite_carrier;

// Whether a value falls inside the canonical-size scope of a bounded sweep.
inline bool within_bound(const Naturals&, const Natural& x, unsigned long bound) {
    return x <= Natural(bound);
}
inline bool within_bound(const TropicalNat&, const TropValue& x, unsigned long bound) {
    return x.is_infinite() || x.finite_value() <= static_cast<std::int64_t>(bound);
}
inline bool within_bound(const Boolean&, bool, unsigned long) { return true; }
template <FiniteCarrier S>
bool within_bound(const S&, const typename S::value_type&, unsigned long) {
    return true;
}

namespace detail {

// Checks every semiring law on one triple; empty result means no violation.
template <SemiringFamily S>
std::string laws_on_triple(const S& s, const typename S::value_type& a,
                           const typename S::value_type& b,
                           const typename S::value_type& c) {
    using V = typename S::value_type;
    auto w = [&](const char* law) {
        return std::string(law) + " at (" + s.str(a) + ", " + s.str(b) + ", " + s.str(c) + ")";
    };
    if (!s.equal(s.add(a, b), s.add(b, a))) return w("add-commutative");
    if (!s.equal(s.add(s.add(a, b), c), s.add(a, s.add(b, c)))) return w("add-associative");
    if (!s.equal(s.add(a, s.zero()), a)) return w("add-identity");
    if (!s.equal(s.mul(a, b), s.mul(b, a))) return w("mul-commutative");
    if (!s.equal(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)))) return w("mul-associative");
    if (!s.equal(s.mul(a, s.one()), a)) return w("mul-identity");
    V lhs = s.mul(a, s.add(b, c));
    V rhs = s.add(s.mul(a, b), s.mul(a, c));
    if (!s.equal(lhs, rhs)) return w("distributivity");
    if (!s.equal(s.mul(a, s.zero()), s.zero())) return w("zero-absorbing");
    return {};
}

}  // namespace detail

/// Checks all semiring axioms on every triple drawn from `sample`.
template <SemiringFamily S>
Verdict check_axioms_on(const S& s, const std::vector<typename S::value_type>& sample,
                        const std::string& scope_note) {
    if (s.equal(s.zero(), s.one())) return Verdict::fail("zero equals one", scope_note);
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample) {
                std::string w = detail::laws_on_triple(s, a, b, c);
                if (!w.empty()) return Verdict::fail(w, scope_note);
            }
    return Verdict::pass(scope_note);
}

template <FiniteCarrier S>
Verdict check_axioms_exhaustive(const S& s) {
    return check_axioms_on(s, s.elements(),
                           "exhaustive over " + std::to_string(s.elements().size()) + " elements");
}

/// Bounded-random law sweep for infinite carriers: each trial draws a fresh
/// triple and checks all the laws on it.
template <SemiringFamily S>
Verdict check_axioms_random(const S& s, std::size_t trials, std::uint64_t seed,
                            unsigned long bound) {
    std::string note = "random trials=" + std::to_string(trials) +
                       " seed=" + std::to_string(seed) + " bound=" + std::to_string(bound);
    if (s.equal(s.zero(), s.one())) return Verdict::fail("zero equals one", note);
    Rng rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        auto a = s.sample(rng, bound);
        auto b = s.sample(rng, bound);
        auto c = s.sample(rng, bound);
        std::string w = detail::laws_on_triple(s, a, b, c);
        if (!w.empty()) return Verdict::fail(w, note);
    }
    return Verdict::pass(note);
}

/// Cancellation check: ab = ac implies b = c for nonzero a. Exhaustive on
/// finite carriers, with the least counterexample reported.
template <FiniteCarrier S>
Verdict is_semidomain(const S& s) {
    auto elems = s.elements();
    for (const auto& a : elems) {
        if (s.is_zero(a)) continue;
        for (const auto& b : elems)
            for (const auto& c : elems) {
                if (s.equal(b, c)) continue;
                if (s.equal(s.mul(a, b), s.mul(a, c)))
                    return Verdict::fail(
                        "a=" + s.str(a) + " b=" + s.str(b) + " c=" + s.str(c),
                        "exhaustive cancellation check");
            }
    }
    return Verdict::pass("exhaustive cancellation check over " +
                         std::to_string(elems.size()) + " elements");
}

inline Verdict is_semidomain(const Naturals&) {
    return Verdict::pass("registered family nat: multiplication by a nonzero natural is cancellative");
}

inline Verdict is_semidomain(const TropicalNat&) {
    return Verdict::pass("registered family trop: a+b = a+c forces b = c for finite a");
}

inline Verdict is_semidomain(const Boolean&) {
    return Verdict::pass("registered family bool: two-element semifield");
}

}  // namespace semiring
