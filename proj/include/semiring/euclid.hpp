#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "semiring/divisibility.hpp"
#include "semiring/finite_table.hpp"
#include "semiring/laws.hpp"
#include "semiring/natural.hpp"
#include "semiring/verdict.hpp"

namespace semiring {

/// Element of N ∪ {+∞}, the codomain of Euclidean norms. Totally ordered,
/// with +∞ above every natural; +∞ is reserved for the zero element.
class NormValue {
public:
    NormValue() : inf_(false), v_(0ul) {}
    NormValue(Natural v) : inf_(false), v_(std::move(v)) {}
    NormValue(unsigned long v) : inf_(false), v_(v) {}
    static NormValue infinity() {
        NormValue x;
        x.inf_ = true;
        return x;
    }

    bool is_infinite() const { return inf_; }
    const Natural& finite() const {
        if (inf_) throw Error("NormValue: finite part of +inf");
        return v_;
    }

    friend bool operator==(const NormValue& a, const NormValue& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator<(const NormValue& a, const NormValue& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const NormValue& a, const NormValue& b) { return a < b || a == b; }

    std::string str() const { return inf_ ? "inf" : v_.str(); }

private:
    bool inf_;
    Natural v_;
};

/// A semiring together with a Euclidean norm and a family-registered
/// division procedure. The division is constructive per family (the norm
/// axioms only assert existence); div_rem re-validates its output.
template <class S>
struct EuclideanStructure {
    using value_type = typename S::value_type;

    const S* ring = nullptr;
    std::function<NormValue(const value_type&)> norm;
    std::function<std::pair<value_type, value_type>(const value_type&, const value_type&)> divide;
    // s achieving min δ(s·a); closed form for infinite carriers, empty for
    // finite ones (exhaustive search applies there).
    std::function<value_type(const value_type&)> star_minimizer;
};

/// Division with remainder: a = b·q + r with r = 0 or δ(r) < δ(b). The
/// identity and the norm condition are re-checked before returning.
template <class S>
std::pair<typename S::value_type, typename S::value_type> div_rem(
    const EuclideanStructure<S>& e, const typename S::value_type& a,
    const typename S::value_type& b) {
    const S& s = *e.ring;
    if (s.is_zero(b)) throw DivisionByZero("div_rem: zero divisor");
    auto [q, r] = e.divide(a, b);
    if (!s.equal(s.add(s.mul(b, q), r), a))
        throw NoDecomposition("div_rem: a != b*q + r at a=" + s.str(a) + " b=" + s.str(b));
    if (!s.is_zero(r) && !(e.norm(r) < e.norm(b)))
        throw NoDecomposition("div_rem: remainder norm not reduced at a=" + s.str(a) +
                              " b=" + s.str(b));
    return {q, r};
}

// ---- the canonical structures ---------------------------------------------

inline EuclideanStructure<Naturals> natural_euclidean(const Naturals& s) {
    EuclideanStructure<Naturals> e;
    e.ring = &s;
    e.norm = [](const Natural& a) {
        return a.is_zero() ? NormValue::infinity() : NormValue(a);
    };
    e.divide = [](const Natural& a, const Natural& b) { return a.divmod(b); };
    // δ(s·a) >= δ(a) for s >= 1 and δ(0·a) = +∞, so s = 1 minimizes.
    e.star_minimizer = [](const Natural&) { return Natural(1ul); };
    return e;
}

inline EuclideanStructure<TropicalNat> tropical_euclidean(const TropicalNat& s) {
    EuclideanStructure<TropicalNat> e;
    e.ring = &s;
    e.norm = [](const TropValue& a) {
        return a.is_infinite() ? NormValue::infinity()
                               : NormValue(Natural(static_cast<unsigned long>(a.finite_value())));
    };
    e.divide = [](const TropValue& a, const TropValue& b) {
        // a >= b: exact quotient a-b with zero remainder; otherwise the
        // canonical (q = 0, r = a), valid since δ(a) < δ(b).
        if (a.is_infinite()) return std::make_pair(TropValue::infinity(), TropValue::infinity());
        std::int64_t av = a.finite_value(), bv = b.finite_value();
        if (av >= bv) return std::make_pair(TropValue::finite(av - bv), TropValue::infinity());
        return std::make_pair(TropValue::finite(0), a);
    };
    e.star_minimizer = [](const TropValue&) { return TropValue::finite(0); };
    return e;
}

inline EuclideanStructure<Boolean> boolean_euclidean(const Boolean& s) {
    EuclideanStructure<Boolean> e;
    e.ring = &s;
    e.norm = [](bool a) { return a ? NormValue(0ul) : NormValue::infinity(); };
    e.divide = [](bool a, bool) { return std::make_pair(a, false); };
    e.star_minimizer = [](bool) { return true; };
    return e;
}

/// Structure for a finite table semiring from an explicit norm assignment.
/// The division searches (q, r) in index order and returns the first valid
/// decomposition.
inline EuclideanStructure<FiniteSemiring> finite_euclidean(const FiniteSemiring& s,
                                                           std::vector<NormValue> norm_table) {
    EuclideanStructure<FiniteSemiring> e;
    e.ring = &s;
    auto table = std::make_shared<std::vector<NormValue>>(std::move(norm_table));
    e.norm = [table](const std::size_t& a) { return (*table)[a]; };
    e.divide = [ring = &s, table](const std::size_t& a, const std::size_t& b) {
        const FiniteSemiring& s = *ring;
        for (std::size_t q = 0; q < s.order(); ++q)
            for (std::size_t r = 0; r < s.order(); ++r) {
                if (s.add_raw(s.mul_raw(b, q), r) != a) continue;
                if (r == 0 || (*table)[r] < (*table)[b]) return std::make_pair(q, r);
            }
        throw NoDecomposition("no (q, r) for a=" + std::to_string(a) + " b=" + std::to_string(b));
    };
    return e;
}

// The structures alias the semiring they are built over; a temporary would
// dangle before first use.
EuclideanStructure<Naturals> natural_euclidean(Naturals&&) = delete;
EuclideanStructure<TropicalNat> tropical_euclidean(TropicalNat&&) = delete;
EuclideanStructure<Boolean> boolean_euclidean(Boolean&&) = delete;
EuclideanStructure<FiniteSemiring> finite_euclidean(FiniteSemiring&&, std::vector<NormValue>) =
    delete;

// ---- δ* ---------------------------------------------------------------------

/// δ*(a) = min{δ(s·a) : s ∈ S}. Exact by exhaustion on finite carriers; on
/// infinite carriers the registered minimizer supplies the closed form and a
/// sweep over elements of size <= sweep_bound re-checks minimality.
template <class S>
NormValue star_norm(const EuclideanStructure<S>& e, const typename S::value_type& a,
                    unsigned long sweep_bound = 1000) {
    const S& s = *e.ring;
    if constexpr (S::finite_carrier) {
        NormValue best = NormValue::infinity();
        for (const auto& x : s.elements()) {
            NormValue v = e.norm(s.mul(x, a));
            if (v < best) best = v;
        }
        return best;
    } else {
        if (!e.star_minimizer)
            throw UnboundedSearch("star_norm: no registered minimizer for an infinite carrier");
        NormValue claimed = e.norm(s.mul(e.star_minimizer(a), a));
        for (const auto& x : s.elements_up_to(sweep_bound)) {
            NormValue v = e.norm(s.mul(x, a));
            if (v < claimed)
                throw Error("star_norm: registered minimizer beaten at s=" + s.str(x) +
                            " a=" + s.str(a));
        }
        return claimed;
    }
}

/// The structure (S, δ*, derived division): divide a by s*·b with the
/// original procedure, then fold s* into the quotient. Remainders satisfy
/// δ*(r) <= δ(r) < δ(s*·b) = δ*(b).
template <class S>
EuclideanStructure<S> star_structure(const EuclideanStructure<S>& e,
                                     unsigned long sweep_bound = 1000) {
    const S& s = *e.ring;
    EuclideanStructure<S> out;
    out.ring = e.ring;
    out.norm = [e, sweep_bound](const typename S::value_type& a) {
        return star_norm(e, a, sweep_bound);
    };
    auto minimizer = [e, &s](const typename S::value_type& b) {
        if constexpr (S::finite_carrier) {
            auto best = s.elements().front();
            NormValue bestv = NormValue::infinity();
            bool first = true;
            for (const auto& x : s.elements()) {
                NormValue v = e.norm(s.mul(x, b));
                if (first || v < bestv) {
                    best = x;
                    bestv = v;
                    first = false;
                }
            }
            return best;
        } else {
            return e.star_minimizer(b);
        }
    };
    out.divide = [e, minimizer, &s](const typename S::value_type& a,
                                    const typename S::value_type& b) {
        auto m = minimizer(b);
        auto [q, r] = e.divide(a, s.mul(m, b));
        return std::make_pair(s.mul(q, m), r);
    };
    out.star_minimizer = e.star_minimizer;
    return out;
}

// ---- the Euclidean algorithm ------------------------------------------------

template <class S>
struct GcdChain {
    typename S::value_type gcd;
    // r_-2 = a, r_-1 = b, then the remainders in order, ending at zero
    // (unless b was zero to begin with).
    std::vector<typename S::value_type> remainders;
};

/// Remainder-chain gcd. Swaps so b != 0 (gcd(a, 0) = a); each step divides
/// r_{n-2} by r_{n-1} and the norm of the remainders strictly descends,
/// which both terminates the loop and guards against a broken structure.
template <class S>
GcdChain<S> euclidean_gcd_chain(const EuclideanStructure<S>& e, typename S::value_type a,
                                typename S::value_type b) {
    const S& s = *e.ring;
    if (s.is_zero(a) && s.is_zero(b)) throw ZeroInputs("gcd(0, 0) is undefined");
    if (s.is_zero(b)) std::swap(a, b);
    if (s.is_zero(a)) {
        // now a = 0, b != 0: gcd is b
        return {b, {a, b}};
    }

    GcdChain<S> chain;
    chain.remainders = {a, b};
    auto prev = a, cur = b;
    NormValue cur_norm = e.norm(cur);
    while (true) {
        auto [q, r] = div_rem(e, prev, cur);
        chain.remainders.push_back(r);
        if (s.is_zero(r)) {
            chain.gcd = cur;
            break;
        }
        NormValue rn = e.norm(r);
        if (!(rn < cur_norm))
            throw NonTermination("remainder norms failed to descend at " + s.str(r));
        prev = cur;
        cur = r;
        cur_norm = rn;
    }

    if (!divides(s, chain.gcd, a) || !divides(s, chain.gcd, b))
        throw NoDecomposition("euclidean_gcd: result does not divide the inputs");
    return chain;
}

template <class S>
typename S::value_type euclidean_gcd(const EuclideanStructure<S>& e,
                                     const typename S::value_type& a,
                                     const typename S::value_type& b) {
    return euclidean_gcd_chain(e, a, b).gcd;
}

// ---- norm search on finite semirings ---------------------------------------

struct FoundNorm {
    std::vector<NormValue> table;  // per element index; table[0] = +∞
};

/// Backtracking search for a Euclidean norm with values in {0..value_cap}.
/// Only pairs (a, b) with b a non-divisor of a constrain the assignment:
/// some achievable nonzero remainder must get a norm below δ(b). Assignments
/// are explored in lexicographic order over the elements 1..n-1, so the
/// first hit is deterministic.
inline std::optional<FoundNorm> find_euclidean_norm(const FiniteSemiring& s,
                                                    std::optional<std::size_t> value_cap = {}) {
    std::size_t n = s.order();
    std::size_t cap = value_cap.value_or(n);

    // remainders[a][b]: the r with a = b·q + r for some q (b >= 1)
    std::vector<std::vector<std::vector<std::size_t>>> remainders(
        n, std::vector<std::vector<std::size_t>>(n));
    std::vector<std::vector<bool>> exact(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b) {
            std::vector<bool> seen(n, false);
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t r = 0; r < n; ++r)
                    if (s.add_raw(s.mul_raw(b, q), r) == a) seen[r] = true;
            if (seen[0]) {
                exact[a][b] = true;  // b | a: the pair never constrains δ
                continue;
            }
            for (std::size_t r = 1; r < n; ++r)
                if (seen[r]) remainders[a][b].push_back(r);
        }

    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> delta(n, kUnset);

    // A pair is decided once δ(b) and δ(r) for all its remainders are set.
    auto feasible = [&]() {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 1; b < n; ++b) {
                if (exact[a][b]) continue;
                if (delta[b] == kUnset) continue;
                bool all_set = true, satisfied = false;
                for (std::size_t r : remainders[a][b]) {
                    if (delta[r] == kUnset) {
                        all_set = false;
                        continue;
                    }
                    if (delta[r] < delta[b]) satisfied = true;
                }
                if (all_set && !satisfied) return false;
            }
        return true;
    };

    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t v = 0; v <= cap; ++v) {
            delta[i] = v;
            if (feasible() && assign(i + 1)) return true;
        }
        delta[i] = kUnset;
        return false;
    };

    if (!assign(1)) return std::nullopt;

    FoundNorm found;
    found.table.resize(n, NormValue::infinity());
    for (std::size_t i = 1; i < n; ++i) found.table[i] = NormValue(Natural(delta[i]));
    return found;
}

/// Checks both norm conditions and the δ* inequalities, exhaustively on
/// finite carriers and over elements of size <= bound otherwise.
template <class S>
Verdict verify_structure(const EuclideanStructure<S>& e, unsigned long bound = 200) {
    const S& s = *e.ring;
    std::vector<typename S::value_type> sample;
    std::string note;
    if constexpr (S::finite_carrier) {
        sample = s.elements();
        note = "exhaustive over " + std::to_string(sample.size()) + " elements";
    } else {
        sample = s.elements_up_to(bound);
        note = "elements of size <= " + std::to_string(bound);
    }

    for (const auto& x : sample) {
        bool inf = e.norm(x).is_infinite();
        if (inf != s.is_zero(x))
            return Verdict::fail("norm(" + s.str(x) + ") infinite iff zero violated", note);
    }
    for (const auto& a : sample)
        for (const auto& b : sample) {
            if (s.is_zero(b)) continue;
            try {
                div_rem(e, a, b);
            } catch (const Error& err) {
                return Verdict::fail("division failed at a=" + s.str(a) + " b=" + s.str(b) +
                                         ": " + err.what(),
                                     note);
            }
        }
    for (const auto& b : sample) {
        NormValue st = star_norm(e, b, bound);
        if (!(st <= e.norm(b)))
            return Verdict::fail("delta*(" + s.str(b) + ") > delta(" + s.str(b) + ")", note);
        for (const auto& x : sample)
            if (!(st <= e.norm(s.mul(x, b))))
                return Verdict::fail(
                    "delta*(" + s.str(b) + ") > delta(" + s.str(x) + "*" + s.str(b) + ")", note);
    }
    return Verdict::pass(note);
}

}  // namespace semiring
