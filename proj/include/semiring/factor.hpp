#pragma once

#include <functional>
#include <string>
#include <vector>

#include "semiring/divisibility.hpp"
#include "semiring/euclid.hpp"
#include "semiring/ideal_rep.hpp"
#include "semiring/traits.hpp"
#include "semiring/verdict.hpp"

namespace semiring {

// ---- associates -------------------------------------------------------------

inline bool associates(const Naturals& s, const Natural& a, const Natural& b) {
    return s.equal(a, b);  // the only unit is 1
}
inline bool associates(const TropicalNat& s, const TropValue& a, const TropValue& b) {
    return s.equal(a, b);  // the only unit is 0
}
inline bool associates(const Boolean& s, bool a, bool b) { return s.equal(a, b); }

template <FiniteCarrier S>
bool associates(const S& s, const typename S::value_type& a, const typename S::value_type& b) {
    for (const auto& u : s.elements())
        if (s.is_unit(u) && s.equal(a, s.mul(u, b))) return true;
    return false;
}

/// The ideal-theoretic route: (a) = (b), i.e. mutual divisibility. In a
/// semidomain this is equivalent to being associates; tests cross-check the
/// two routes on finite carriers.
template <class S>
bool principal_ideals_equal(const S& s, const typename S::value_type& a,
                            const typename S::value_type& b) {
    if (s.is_zero(a) || s.is_zero(b)) return s.is_zero(a) == s.is_zero(b);
    return divides(s, a, b) && divides(s, b, a);
}

// ---- irreducible and prime elements -----------------------------------------

inline bool is_irreducible(const Naturals&, const Natural& x) {
    if (x < Natural(2ul)) return false;  // zero and the unit are excluded
    for (Natural d(2ul); d * d <= x; d = d + Natural(1ul))
        if (x.divisible_by(d)) return false;
    return true;
}

// x = a + b with both summands >= 1 exists iff x >= 2, so 1 is the only
// irreducible tropical element.
inline bool is_irreducible(const TropicalNat&, const TropValue& x) {
    return !x.is_infinite() && x.finite_value() == 1;
}

inline bool is_irreducible(const Boolean&, bool) { return false; }

template <FiniteCarrier S>
bool is_irreducible(const S& s, const typename S::value_type& x) {
    if (s.is_zero(x) || s.is_unit(x)) return false;
    for (const auto& a : s.elements())
        for (const auto& b : s.elements())
            if (s.equal(s.mul(a, b), x) && !s.is_unit(a) && !s.is_unit(b)) return false;
    return true;
}

/// p is prime when (p) is a nonzero prime ideal: p | ab forces p | a or
/// p | b. Decided per family.
inline bool is_prime_element(const Naturals& s, const Natural& p) { return is_irreducible(s, p); }

inline bool is_prime_element(const TropicalNat&, const TropValue& p) {
    // min(a,b) >= p forces a >= p or b >= p only for p <= 1, and p must be
    // a nonzero nonunit, leaving exactly p = 1.
    return !p.is_infinite() && p.finite_value() == 1;
}

inline bool is_prime_element(const Boolean&, bool) { return false; }

template <FiniteCarrier S>
bool is_prime_element(const S& s, const typename S::value_type& p) {
    if (s.is_zero(p) || s.is_unit(p)) return false;
    for (const auto& a : s.elements())
        for (const auto& b : s.elements())
            if (divides(s, p, s.mul(a, b)) && !divides(s, p, a) && !divides(s, p, b))
                return false;
    return true;
}

// ---- ACCP factorization ------------------------------------------------------

template <class S>
struct Factorization {
    typename S::value_type unit;
    std::vector<typename S::value_type> factors;  // each irreducible
    typename S::value_type subject;
};

namespace detail {
template <class S>
void require_factorable(const S& s, const typename S::value_type& x) {
    if (s.is_zero(x)) throw NotFactorable("zero has no factorization into irreducibles");
    if (s.is_unit(x)) throw NotFactorable("units have no factorization into irreducibles");
}
}  // namespace detail

/// Factorization by repeated splitting, peeling the least prime divisor
/// first so the output order is deterministic.
inline Factorization<Naturals> factor_accp(const Naturals& s, const Natural& x) {
    detail::require_factorable(s, x);
    Factorization<Naturals> f{s.one(), {}, x};
    Natural rest = x;
    while (!rest.is_one()) {
        Natural d(2ul);
        while (!rest.divisible_by(d)) {
            d = d + Natural(1ul);
            if (d * d > rest) {
                d = rest;  // rest itself is irreducible
                break;
            }
        }
        f.factors.push_back(d);
        rest = rest.exact_div(d);
    }
    // strict magnitude descent guarantees <= log2(x) rounds
    auto check = s.one();
    for (const auto& p : f.factors) check = s.mul(check, p);
    if (!s.equal(check, x)) throw NoDecomposition("factorization product mismatch");
    return f;
}

inline Factorization<TropicalNat> factor_accp(const TropicalNat& s, const TropValue& x) {
    detail::require_factorable(s, x);
    std::int64_t m = x.finite_value();
    if (m > 1000000) throw DepthExceeded("tropical factorization of " + s.str(x) + " too long");
    Factorization<TropicalNat> f{s.one(), {}, x};
    f.factors.assign(static_cast<std::size_t>(m), TropValue::finite(1));
    return f;
}

inline Factorization<Boolean> factor_accp(const Boolean& s, bool x) {
    detail::require_factorable(s, x);
    throw NotFactorable("unreachable: the Boolean semiring has no nonzero nonunits");
}

template <FiniteCarrier S>
Factorization<S> factor_accp(const S& s, const typename S::value_type& x) {
    detail::require_factorable(s, x);
    Factorization<S> f{s.one(), {}, x};

    std::function<void(const typename S::value_type&, std::size_t)> split =
        [&](const typename S::value_type& y, std::size_t depth) {
            if (depth > s.elements().size() + 2)
                throw DepthExceeded("factorization descent did not terminate");
            if (is_irreducible(s, y)) {
                f.factors.push_back(y);
                return;
            }
            // a proper split must strictly grow both principal ideals,
            // which is exactly what ACCP furnishes
            for (const auto& a : s.elements())
                for (const auto& b : s.elements()) {
                    if (s.is_unit(a) || s.is_unit(b)) continue;
                    if (s.is_zero(a) || s.is_zero(b)) continue;
                    if (!s.equal(s.mul(a, b), y)) continue;
                    if (divides(s, y, a) || divides(s, y, b)) continue;  // not strict
                    split(a, depth + 1);
                    split(b, depth + 1);
                    return;
                }
            throw DepthExceeded("no strictly descending factorization of " + s.str(y));
        };
    split(x, 0);

    auto check = s.one();
    for (const auto& p : f.factors) check = s.mul(check, p);
    if (!s.equal(check, x)) throw NoDecomposition("factorization product mismatch");
    return f;
}

// ---- greatest common divisors ------------------------------------------------

inline Natural gcd_set(const Naturals& s, const std::vector<Natural>& a) {
    Naturals nat;
    auto e = natural_euclidean(nat);
    bool seen = false;
    Natural g;
    for (const auto& x : a) {
        if (x.is_zero()) continue;
        g = seen ? euclidean_gcd(e, g, x) : x;
        seen = true;
    }
    if (!seen) throw AllZero("gcd of an all-zero set");
    (void)s;
    return g;
}

inline TropValue gcd_set(const TropicalNat&, const std::vector<TropValue>& a) {
    TropValue g = TropValue::infinity();
    for (const auto& x : a)
        if (x < g) g = x;
    if (g.is_infinite()) throw AllZero("gcd of an all-zero set");
    return g;
}

inline bool gcd_set(const Boolean&, const std::vector<bool>& a) {
    for (bool x : a)
        if (x) return true;
    throw AllZero("gcd of an all-zero set");
}

template <FiniteCarrier S>
typename S::value_type gcd_set(const S& s, const std::vector<typename S::value_type>& a) {
    bool any_nonzero = false;
    for (const auto& x : a) any_nonzero = any_nonzero || !s.is_zero(x);
    if (!any_nonzero) throw AllZero("gcd of an all-zero set");

    std::vector<typename S::value_type> common;
    for (const auto& d : s.elements()) {
        if (s.is_zero(d)) continue;
        bool all = true;
        for (const auto& x : a) all = all && divides(s, d, x);
        if (all) common.push_back(d);
    }
    for (const auto& d : common) {
        bool greatest = true;
        for (const auto& other : common) greatest = greatest && divides(s, other, d);
        if (greatest) return d;
    }
    throw NoGcd("no greatest common divisor at this input");
}

template <class S>
typename S::value_type gcd_pair(const S& s, const typename S::value_type& a,
                                const typename S::value_type& b) {
    if (s.is_zero(a) && s.is_zero(b)) throw ZeroInputs("gcd(0, 0) is undefined");
    return gcd_set(s, std::vector<typename S::value_type>{a, b});
}

// ---- the GCD-semidomain identities -------------------------------------------

/// Tests gcd(ab, ac) = a·gcd(b, c), gcd(a/d, b/d) = 1 for d = gcd(a, b) and
/// the coprimality product rule, all up to associates, over every tuple of
/// size <= bound.
template <class S>
Verdict check_gcd_identities(const S& s, unsigned long bound) {
    static_assert(family_traits<S>::gcd_semidomain || S::finite_carrier,
                  "check_gcd_identities requires a registered GCD semidomain");
    std::vector<typename S::value_type> sample;
    if constexpr (S::finite_carrier)
        sample = s.elements();
    else
        sample = s.elements_up_to(bound);
    std::string note = "tuples of size <= " + std::to_string(bound);

    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample) {
                // (1) gcd(ab, ac) = a gcd(b, c), whenever either side is defined
                if (!s.is_zero(a) && !(s.is_zero(b) && s.is_zero(c))) {
                    auto lhs = gcd_pair(s, s.mul(a, b), s.mul(a, c));
                    auto rhs = s.mul(a, gcd_pair(s, b, c));
                    if (!associates(s, lhs, rhs))
                        return Verdict::fail("gcd(ab,ac) != a gcd(b,c) at a=" + s.str(a) +
                                                 " b=" + s.str(b) + " c=" + s.str(c),
                                             note);
                }
                // (3) gcd(a,b) = 1 and gcd(a,c) = 1 imply gcd(a,bc) = 1
                if (!(s.is_zero(a) && s.is_zero(b)) && !(s.is_zero(a) && s.is_zero(c))) {
                    if (s.is_unit(gcd_pair(s, a, b)) && s.is_unit(gcd_pair(s, a, c))) {
                        auto bc = s.mul(b, c);
                        if (!(s.is_zero(a) && s.is_zero(bc)) &&
                            !s.is_unit(gcd_pair(s, a, bc)))
                            return Verdict::fail("coprimality not multiplicative at a=" +
                                                     s.str(a) + " b=" + s.str(b) +
                                                     " c=" + s.str(c),
                                                 note);
                    }
                }
            }

    // (2) gcd(a/d, b/d) = 1
    for (const auto& a : sample)
        for (const auto& b : sample) {
            if (s.is_zero(a) && s.is_zero(b)) continue;
            auto d = gcd_pair(s, a, b);
            auto qa = exact_div(s, a, d);
            auto qb = exact_div(s, b, d);
            if (!s.is_unit(gcd_pair(s, qa, qb)))
                return Verdict::fail("gcd(a/d, b/d) != 1 at a=" + s.str(a) + " b=" + s.str(b),
                                     note);
        }
    return Verdict::pass(note);
}

// ---- registered prime ideals ---------------------------------------------------

/// The nonzero prime ideals the family registers for scope-bounded checks.
/// These are registries, not classifications: for the naturals the principal
/// ideals of the classical primes plus <2,3>; for the tropical family the
/// unique nonzero prime (1).
inline std::vector<NatIdeal> registered_nonzero_primes(const Naturals&, unsigned long bound) {
    std::vector<NatIdeal> out;
    Naturals nat;
    for (unsigned long p = 2; p <= bound; ++p)
        if (is_irreducible(nat, Natural(p))) out.push_back(NatIdeal::generated_by({Natural(p)}));
    out.push_back(NatIdeal::generated_by({Natural(2ul), Natural(3ul)}));
    return out;
}

inline std::vector<TropIdeal> registered_nonzero_primes(const TropicalNat&, unsigned long) {
    return {TropIdeal::generated_by({TropValue::finite(1)})};
}

inline std::vector<BoolIdeal> registered_nonzero_primes(const Boolean&, unsigned long) {
    return {};  // a semifield has no nonzero primes
}

// For a finite table the registry is complete: the exhaustive spectrum.
inline std::vector<TableIdeal> registered_nonzero_primes(const FiniteSemiring& s, unsigned long) {
    std::vector<TableIdeal> out;
    for (const auto& p : spectrum(s))
        if (p.mask != 1) out.push_back(TableIdeal{&s, p});
    return out;
}

// ---- the Kaplansky criterion ----------------------------------------------------

/// Evaluates both sides of the UFSD criterion at scope `bound`: the UFSD
/// side is UF1 (irreducibles are prime) and UF2 (nonzero nonunits factor
/// into irreducibles); the ideal side asks every registered nonzero prime
/// ideal for a prime element. The verdict holds when the sides agree.
template <class S>
Verdict check_kaplansky(const S& s, unsigned long bound) {
    std::vector<typename S::value_type> sample;
    if constexpr (S::finite_carrier)
        sample = s.elements();
    else
        sample = s.elements_up_to(bound);
    std::string note = "scope bound " + std::to_string(bound);

    bool uf1 = true, uf2 = true;
    std::string witness;
    for (const auto& x : sample) {
        if (is_irreducible(s, x) && !is_prime_element(s, x)) {
            uf1 = false;
            witness = "irreducible nonprime " + s.str(x);
            break;
        }
    }
    for (const auto& x : sample) {
        if (s.is_zero(x) || s.is_unit(x)) continue;
        try {
            auto f = factor_accp(s, x);
            for (const auto& p : f.factors)
                if (!is_irreducible(s, p)) {
                    uf2 = false;
                    witness = "reducible factor " + s.str(p) + " of " + s.str(x);
                }
        } catch (const Error& e) {
            uf2 = false;
            witness = "factorization failed at " + s.str(x) + ": " + e.what();
        }
        if (!uf2) break;
    }

    bool primes_side = true;
    for (const auto& ideal : registered_nonzero_primes(s, bound)) {
        bool found = false;
        for (const auto& x : sample)
            if (ideal.contains(x) && is_prime_element(s, x)) {
                found = true;
                break;
            }
        if (!found) {
            primes_side = false;
            witness = "no prime element found in " + ideal.str();
            break;
        }
    }

    bool ufsd_side = uf1 && uf2;
    std::string detail = note + "; UF1=" + (uf1 ? "yes" : "no") + " UF2=" + (uf2 ? "yes" : "no") +
                         " primes-side=" + (primes_side ? "yes" : "no");
    if (ufsd_side == primes_side) return Verdict::pass(detail);
    return Verdict::fail(witness, detail);
}

// ---- saturation of the prime-product set ------------------------------------------

/// W = units times products of primes. Saturation within scope: whenever a
/// product of two sample elements lands in W (and in the sample), both
/// factors already lie in W.
template <class S>
Verdict check_saturated_prime_products(const S& s, unsigned long bound) {
    std::vector<typename S::value_type> sample;
    if constexpr (S::finite_carrier)
        sample = s.elements();
    else
        sample = s.elements_up_to(bound);
    std::string note = "elements of size <= " + std::to_string(bound);

    auto in_w = [&](const typename S::value_type& x) {
        if (s.is_unit(x)) return true;  // the empty product
        if (s.is_zero(x)) return false;
        try {
            auto f = factor_accp(s, x);
            for (const auto& p : f.factors)
                if (!is_prime_element(s, p)) return false;
            return true;
        } catch (const Error&) {
            return false;
        }
    };
    for (const auto& a : sample)
        for (const auto& b : sample) {
            if (s.is_zero(a) || s.is_zero(b)) continue;
            auto ab = s.mul(a, b);
            if (!within_bound(s, ab, bound)) continue;
            if (in_w(ab) && !(in_w(a) && in_w(b)))
                return Verdict::fail("ab in W with a factor outside at a=" + s.str(a) +
                                         " b=" + s.str(b),
                                     note);
        }
    return Verdict::pass(note);
}

}  // namespace semiring
