#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiring/finite_table.hpp"
#include "semiring/verdict.hpp"

namespace semiring {

/// Subset of a finite carrier as a bitmask; bit i set means element i is a
/// member. Ideal enumeration by subset filtering caps the order at 16.
struct IdealSet {
    std::uint32_t mask = 1;  // bit 0 (the zero element) is always set

    bool contains(std::size_t i) const { return (mask >> i) & 1u; }
    std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask)); }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < 32; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (std::size_t i : members()) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
        return s + "}";
    }

    friend bool operator==(const IdealSet&, const IdealSet&) = default;
};

struct IdealFlags {
    bool subtractive = false;
    bool prime = false;
    bool maximal = false;
    bool principal = false;
    bool proper = false;
};

namespace detail {
constexpr std::size_t kMaxSubsetOrder = 16;

inline void require_subset_order(const FiniteSemiring& s) {
    if (s.order() > kMaxSubsetOrder)
        throw CapExceeded("subset-filter ideal enumeration capped at order " +
                          std::to_string(kMaxSubsetOrder));
}
}  // namespace detail

inline bool is_ideal(const FiniteSemiring& s, std::uint32_t mask) {
    std::size_t n = s.order();
    if (!(mask & 1u)) return false;  // must contain 0
    for (std::size_t a = 0; a < n; ++a) {
        if (!((mask >> a) & 1u)) continue;
        for (std::size_t b = 0; b < n; ++b) {
            if (((mask >> b) & 1u) && !((mask >> s.add_raw(a, b)) & 1u)) return false;
            if (!((mask >> s.mul_raw(a, b)) & 1u)) return false;  // sa for every s
        }
    }
    return true;
}

/// Least ideal containing the generators, by closure iteration to fixpoint.
inline IdealSet ideal_generated(const FiniteSemiring& s, const std::vector<std::size_t>& gens) {
    std::size_t n = s.order();
    std::uint32_t mask = 1u;  // the zero element
    for (std::size_t g : gens) {
        if (g >= n) throw MismatchError("generator out of range");
        mask |= (1u << g);
    }
    for (;;) {
        std::uint32_t next = mask;
        for (std::size_t a = 0; a < n; ++a) {
            if (!((mask >> a) & 1u)) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if ((mask >> b) & 1u) next |= (1u << s.add_raw(a, b));
                next |= (1u << s.mul_raw(b, a));
            }
        }
        if (next == mask) return IdealSet{mask};
        mask = next;
    }
}

/// All ideals by direct subset filtering, sorted by (size, membership).
inline std::vector<IdealSet> enumerate_ideals(const FiniteSemiring& s) {
    detail::require_subset_order(s);
    std::size_t n = s.order();
    std::vector<IdealSet> out;
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 2)
        if (is_ideal(s, mask)) out.push_back(IdealSet{mask});
    std::sort(out.begin(), out.end(), [](const IdealSet& a, const IdealSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });
    return out;
}

inline IdealFlags classify_ideal(const FiniteSemiring& s, const IdealSet& ideal,
                                 const std::vector<IdealSet>& all_ideals) {
    std::size_t n = s.order();
    IdealFlags f;
    f.proper = ideal.size() < n;

    f.subtractive = true;
    for (std::size_t a = 0; a < n && f.subtractive; ++a) {
        if (!ideal.contains(a)) continue;
        for (std::size_t b = 0; b < n; ++b)
            if (ideal.contains(s.add_raw(a, b)) && !ideal.contains(b)) {
                f.subtractive = false;
                break;
            }
    }

    f.prime = f.proper;
    for (std::size_t a = 0; a < n && f.prime; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (ideal.contains(s.mul_raw(a, b)) && !ideal.contains(a) && !ideal.contains(b)) {
                f.prime = false;
                break;
            }

    f.maximal = f.proper;
    if (f.maximal)
        for (const auto& other : all_ideals)
            if (other.size() < n && other.mask != ideal.mask &&
                (other.mask & ideal.mask) == ideal.mask) {
                f.maximal = false;
                break;
            }

    f.principal = false;
    for (std::size_t g = 0; g < n && !f.principal; ++g) {
        std::uint32_t pm = 0;
        for (std::size_t x = 0; x < n; ++x) pm |= (1u << s.mul_raw(x, g));
        if (pm == ideal.mask) f.principal = true;
    }
    return f;
}

inline IdealFlags classify_ideal(const FiniteSemiring& s, const IdealSet& ideal) {
    return classify_ideal(s, ideal, enumerate_ideals(s));
}

/// The prime ideals, in enumeration order.
inline std::vector<IdealSet> spectrum(const FiniteSemiring& s) {
    auto all = enumerate_ideals(s);
    std::vector<IdealSet> out;
    for (const auto& ideal : all)
        if (classify_ideal(s, ideal, all).prime) out.push_back(ideal);
    return out;
}

inline std::vector<IdealSet> maximal_ideals(const FiniteSemiring& s) {
    auto all = enumerate_ideals(s);
    std::vector<IdealSet> out;
    for (const auto& ideal : all)
        if (classify_ideal(s, ideal, all).maximal) out.push_back(ideal);
    return out;
}

/// Every ideal subtractive (the paper's sense of a subtractive semiring).
inline bool is_subtractive_semiring(const FiniteSemiring& s) {
    auto all = enumerate_ideals(s);
    for (const auto& ideal : all)
        if (!classify_ideal(s, ideal, all).subtractive) return false;
    return true;
}

/// Every ideal principal.
inline bool is_principal_ideal_semiring(const FiniteSemiring& s) {
    auto all = enumerate_ideals(s);
    for (const auto& ideal : all)
        if (!classify_ideal(s, ideal, all).principal) return false;
    return true;
}

inline std::vector<std::size_t> units(const FiniteSemiring& s) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < s.order(); ++a)
        if (s.is_unit(a)) out.push_back(a);
    return out;
}

// ---- multiplicatively closed subsets -------------------------------------

struct FiniteMcSet {
    std::uint32_t mask = 2;  // bit 1: contains the one element

    bool contains(std::size_t i) const { return (mask >> i) & 1u; }
    std::string str() const { return IdealSet{mask}.str(); }
};

inline bool is_mc_set(const FiniteSemiring& s, std::uint32_t mask) {
    if (!((mask >> 1) & 1u)) return false;  // 1 ∈ W
    for (std::size_t a = 0; a < s.order(); ++a) {
        if (!((mask >> a) & 1u)) continue;
        for (std::size_t b = a; b < s.order(); ++b)
            if (((mask >> b) & 1u) && !((mask >> s.mul_raw(a, b)) & 1u)) return false;
    }
    return true;
}

inline void require_mc_set(const FiniteSemiring& s, std::uint32_t mask) {
    if (!is_mc_set(s, mask))
        throw NotMCSet("set " + IdealSet{mask}.str() + " is not multiplicatively closed");
}

inline std::vector<FiniteMcSet> enumerate_mc_sets(const FiniteSemiring& s) {
    detail::require_subset_order(s);
    std::size_t n = s.order();
    std::vector<FiniteMcSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (((mask >> 1) & 1u) && is_mc_set(s, mask)) out.push_back(FiniteMcSet{mask});
    return out;
}

/// ab ∈ W forces both a ∈ W and b ∈ W (the converse is MC closure).
inline bool is_saturated(const FiniteSemiring& s, std::uint32_t w) {
    for (std::size_t a = 0; a < s.order(); ++a)
        for (std::size_t b = a; b < s.order(); ++b)
            if (((w >> s.mul_raw(a, b)) & 1u) && !(((w >> a) & 1u) && ((w >> b) & 1u)))
                return false;
    return true;
}

struct SaturatedComplementResult {
    Verdict verdict;
    bool saturated = false;
    bool complement_covered = false;           // complement equals a union of primes
    std::vector<IdealSet> covering_primes;     // primes disjoint from W
    std::optional<std::size_t> uncovered;      // complement element in no disjoint prime
};

/// Checks the equivalence: W saturated MC-set <=> S \ W is a union of prime
/// ideals. The verdict holds when both sides agree.
inline SaturatedComplementResult check_saturated_complement(const FiniteSemiring& s,
                                                            const FiniteMcSet& w) {
    require_mc_set(s, w.mask);
    SaturatedComplementResult r;
    r.saturated = is_saturated(s, w.mask);

    std::uint32_t full = (s.order() >= 32) ? ~0u : ((1u << s.order()) - 1);
    std::uint32_t complement = full & ~w.mask;
    std::uint32_t covered = 0;
    for (const auto& p : spectrum(s))
        if ((p.mask & w.mask) == 0) {
            r.covering_primes.push_back(p);
            covered |= p.mask;
        }
    r.complement_covered = (covered == complement);
    if (!r.complement_covered) {
        for (std::size_t i = 0; i < s.order(); ++i)
            if (((complement >> i) & 1u) && !((covered >> i) & 1u)) {
                r.uncovered = i;
                break;
            }
    }

    std::string note = std::string("saturated=") + (r.saturated ? "yes" : "no") +
                       " complement-union-of-primes=" + (r.complement_covered ? "yes" : "no");
    if (r.saturated == r.complement_covered)
        r.verdict = Verdict::pass(note);
    else
        r.verdict = Verdict::fail(
            r.uncovered ? ("uncovered element " + std::to_string(*r.uncovered)) : "W=" + w.str(),
            note);
    return r;
}

// ---- localization ---------------------------------------------------------

struct FiniteLocalization {
    bool zero_collapse = false;                 // 0 and 1 fell into one class
    std::optional<FiniteSemiring> quotient;     // present unless collapsed
    std::vector<std::size_t> canonical_map;     // s -> class index of (s, 1)
    std::vector<std::pair<std::size_t, std::size_t>> class_reps;  // per class, least (a,s)
};

/// Localization of S at the MC-set T: classes of S x T under
/// (a,s) ~ (b,t) iff u·a·t = u·b·s for some u in T. The three-factor rule
/// keeps the relation transitive in the presence of zero divisors.
inline FiniteLocalization localize_finite(const FiniteSemiring& s, const FiniteMcSet& t) {
    require_mc_set(s, t.mask);
    std::size_t n = s.order();

    std::vector<std::size_t> denoms;
    for (std::size_t i = 0; i < n; ++i)
        if (t.contains(i)) denoms.push_back(i);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t d : denoms) pairs.emplace_back(a, d);

    auto related = [&](const auto& p, const auto& q) {
        for (std::size_t u : denoms) {
            std::size_t lhs = s.mul_raw(s.mul_raw(u, p.first), q.second);
            std::size_t rhs = s.mul_raw(s.mul_raw(u, q.first), p.second);
            if (lhs == rhs) return true;
        }
        return false;
    };

    // Pairs are ordered; the class of a pair is keyed by its least member,
    // so class indices come out deterministic.
    std::vector<int> cls(pairs.size(), -1);
    std::vector<std::pair<std::size_t, std::size_t>> reps;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (cls[i] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(pairs[i]);
        cls[i] = id;
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (cls[j] < 0 && related(pairs[i], pairs[j])) cls[j] = id;
    }

    auto pair_index = [&](std::size_t a, std::size_t d) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].first == a && pairs[i].second == d) return i;
        throw Error("localize_finite: missing pair");
    };
    auto class_of = [&](std::size_t a, std::size_t d) {
        return static_cast<std::size_t>(cls[pair_index(a, d)]);
    };

    constexpr std::size_t one_denom = 1;  // guaranteed by require_mc_set

    std::size_t zero_class = class_of(0, one_denom);
    std::size_t one_class = class_of(1, one_denom);

    FiniteLocalization out;
    if (zero_class == one_class) {
        out.zero_collapse = true;
        return out;
    }

    // Renumber classes so zero is 0, one is 1, the rest by least representative.
    std::size_t m = reps.size();
    std::vector<std::size_t> renum(m);
    std::size_t next = 2;
    for (std::size_t c = 0; c < m; ++c) {
        if (c == zero_class)
            renum[c] = 0;
        else if (c == one_class)
            renum[c] = 1;
        else
            renum[c] = next++;
    }

    std::vector<std::size_t> add_flat(m * m), mul_flat(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto [a, sd] = reps[i];
            auto [b, td] = reps[j];
            std::size_t sum_num = s.add_raw(s.mul_raw(a, td), s.mul_raw(b, sd));
            std::size_t den = s.mul_raw(sd, td);
            add_flat[renum[i] * m + renum[j]] = renum[class_of(sum_num, den)];
            mul_flat[renum[i] * m + renum[j]] = renum[class_of(s.mul_raw(a, b), den)];
        }

    out.quotient = FiniteSemiring::unchecked(m, std::move(add_flat), std::move(mul_flat));
    out.canonical_map.resize(n);
    for (std::size_t x = 0; x < n; ++x) out.canonical_map[x] = renum[class_of(x, one_denom)];
    out.class_reps.resize(m);
    for (std::size_t c = 0; c < m; ++c) out.class_reps[renum[c]] = reps[c];
    return out;
}

}  // namespace semiring
