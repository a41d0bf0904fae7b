#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "semiring/boolean.hpp"
#include "semiring/finite_ideal.hpp"
#include "semiring/finite_table.hpp"
#include "semiring/naturals.hpp"
#include "semiring/tropical.hpp"

namespace semiring {

// Finitely generated ideals with decidable membership, one representation
// per family. These back polynomial contents, the prime-ideal registries
// and the Gaussian checks.

/// Ideal of the natural numbers given by generators. Membership is decided
/// by dynamic programming over the nonnegative combinations of the
/// generators; generator lists are deduplicated and minimalized.
class NatIdeal {
public:
    NatIdeal() = default;  // the zero ideal

    static NatIdeal generated_by(std::vector<Natural> gens) {
        NatIdeal ideal;
        for (auto& g : gens)
            if (!g.is_zero()) ideal.gens_.push_back(std::move(g));
        std::sort(ideal.gens_.begin(), ideal.gens_.end());
        ideal.gens_.erase(std::unique(ideal.gens_.begin(), ideal.gens_.end()), ideal.gens_.end());
        ideal.minimalize();
        return ideal;
    }

    const std::vector<Natural>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_whole() const { return !gens_.empty() && gens_.front().is_one(); }

    bool contains(const Natural& x) const {
        if (x.is_zero()) return true;
        if (gens_.empty()) return false;
        unsigned long target = x.to_ulong();
        std::vector<char> reach(target + 1, 0);
        reach[0] = 1;
        for (unsigned long v = 1; v <= target; ++v)
            for (const auto& g : gens_) {
                unsigned long gv = g.to_ulong();
                if (gv <= v && reach[v - gv]) {
                    reach[v] = 1;
                    break;
                }
            }
        return reach[target] != 0;
    }

    NatIdeal multiplied(const NatIdeal& other) const {
        std::vector<Natural> prods;
        for (const auto& a : gens_)
            for (const auto& b : other.gens_) prods.push_back(a * b);
        return generated_by(std::move(prods));
    }

    // Agreement up to max(generators)^2 + max(generators) is decisive: the
    // bound covers every generator of both sides, and mutual generator
    // membership already forces mutual containment. The bound used is
    // reported so failures stay auditable.
    bool equals(const NatIdeal& other, unsigned long* bound_out = nullptr) const {
        if (gens_.empty() || other.gens_.empty()) {
            if (bound_out) *bound_out = 0;
            return gens_.empty() && other.gens_.empty();
        }
        Natural m = std::max(gens_.back(), other.gens_.back());
        Natural bound = m * m + m;
        unsigned long b = bound.to_ulong();
        if (bound_out) *bound_out = b;
        for (unsigned long v = 1; v <= b; ++v)
            if (contains(Natural(v)) != other.contains(Natural(v))) return false;
        return true;
    }

    std::string str() const {
        std::string s = "<";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) s += ",";
            s += gens_[i].str();
        }
        return s + ">";
    }

private:
    void minimalize() {
        // drop any generator already generated by the others, largest first
        for (std::size_t i = gens_.size(); i-- > 0;) {
            std::vector<Natural> rest;
            for (std::size_t j = 0; j < gens_.size(); ++j)
                if (j != i) rest.push_back(gens_[j]);
            if (rest.empty()) continue;
            NatIdeal without;
            without.gens_ = std::move(rest);
            if (without.contains(gens_[i])) gens_.erase(gens_.begin() + i);
        }
    }

    std::vector<Natural> gens_;  // sorted ascending, no zeros
};

/// Ideal of the tropical semiring. Every ideal is {x >= m} ∪ {∞} for the
/// least finite generator m (or the zero ideal), so the least generator is
/// a complete invariant; the generator list is kept for reporting.
class TropIdeal {
public:
    TropIdeal() = default;  // the zero ideal {∞}

    static TropIdeal generated_by(std::vector<TropValue> gens) {
        TropIdeal ideal;
        ideal.least_ = TropValue::infinity();
        for (const auto& g : gens)
            if (g < ideal.least_) ideal.least_ = g;
        ideal.gens_ = std::move(gens);
        return ideal;
    }

    const TropValue& least() const { return least_; }
    bool is_zero() const { return least_.is_infinite(); }
    bool is_whole() const { return !least_.is_infinite() && least_.finite_value() == 0; }

    bool contains(const TropValue& x) const {
        if (x.is_infinite()) return true;
        return !(x < least_);
    }

    TropIdeal multiplied(const TropIdeal& other) const {
        TropicalNat trop;
        if (is_zero() || other.is_zero()) return TropIdeal();
        return generated_by({trop.mul(least_, other.least_)});
    }

    bool equals(const TropIdeal& other, unsigned long* bound_out = nullptr) const {
        if (bound_out) *bound_out = 0;
        return least_ == other.least_;
    }

    std::string str() const {
        TropicalNat trop;
        return "(" + trop.str(least_) + ")";
    }

private:
    TropValue least_ = TropValue::infinity();
    std::vector<TropValue> gens_;
};

/// Ideal of the Boolean semiring: only {0} and {0,1} exist.
class BoolIdeal {
public:
    BoolIdeal() = default;

    static BoolIdeal generated_by(const std::vector<bool>& gens) {
        BoolIdeal ideal;
        for (bool g : gens) ideal.whole_ = ideal.whole_ || g;
        return ideal;
    }

    bool is_zero() const { return !whole_; }
    bool is_whole() const { return whole_; }
    bool contains(bool x) const { return whole_ || !x; }

    BoolIdeal multiplied(const BoolIdeal& other) const {
        BoolIdeal ideal;
        ideal.whole_ = whole_ && other.whole_;
        return ideal;
    }

    bool equals(const BoolIdeal& other, unsigned long* bound_out = nullptr) const {
        if (bound_out) *bound_out = 0;
        return whole_ == other.whole_;
    }

    std::string str() const { return whole_ ? "{0,1}" : "{0}"; }

private:
    bool whole_ = false;
};

/// Ideal of a finite table semiring: the member set, with a reference to the
/// semiring for closure arithmetic.
struct TableIdeal {
    const FiniteSemiring* ring = nullptr;
    IdealSet set;

    static TableIdeal generated_by(const FiniteSemiring& s, const std::vector<std::size_t>& gens) {
        return TableIdeal{&s, ideal_generated(s, gens)};
    }

    bool is_zero() const { return set.mask == 1; }
    bool is_whole() const { return set.size() == ring->order(); }
    bool contains(std::size_t x) const { return set.contains(x); }

    TableIdeal multiplied(const TableIdeal& other) const {
        std::vector<std::size_t> prods;
        for (std::size_t a : set.members())
            for (std::size_t b : other.set.members()) prods.push_back(ring->mul_raw(a, b));
        return generated_by(*ring, prods);
    }

    bool equals(const TableIdeal& other, unsigned long* bound_out = nullptr) const {
        if (bound_out) *bound_out = 0;
        return set.mask == other.set.mask;
    }

    std::string str() const { return set.str(); }
};

// ---- per-family binding -----------------------------------------------------

template <class S>
struct ideal_traits;

template <>
struct ideal_traits<Naturals> {
    using type = NatIdeal;
    static type generated_by(const Naturals&, std::vector<Natural> gens) {
        return NatIdeal::generated_by(std::move(gens));
    }
};

template <>
struct ideal_traits<TropicalNat> {
    using type = TropIdeal;
    static type generated_by(const TropicalNat&, std::vector<TropValue> gens) {
        return TropIdeal::generated_by(std::move(gens));
    }
};

template <>
struct ideal_traits<Boolean> {
    using type = BoolIdeal;
    static type generated_by(const Boolean&, const std::vector<bool>& gens) {
        return BoolIdeal::generated_by(gens);
    }
};

template <>
struct ideal_traits<FiniteSemiring> {
    using type = TableIdeal;
    static type generated_by(const FiniteSemiring& s, const std::vector<std::size_t>& gens) {
        return TableIdeal::generated_by(s, gens);
    }
};

template <class S>
using ideal_of = typename ideal_traits<S>::type;

template <class S>
ideal_of<S> ideal_mul(const S&, const ideal_of<S>& a, const ideal_of<S>& b) {
    return a.multiplied(b);
}

template <class S>
bool ideal_equal(const S&, const ideal_of<S>& a, const ideal_of<S>& b,
                 unsigned long* bound_out = nullptr) {
    return a.equals(b, bound_out);
}

}  // namespace semiring
