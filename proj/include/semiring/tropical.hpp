#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semiring/errors.hpp"
#include "semiring/random.hpp"

namespace semiring {

/// Element of N ∪ {∞} carried by a machine word. Desk-scale checks never
/// approach the guard limit; the tropical product throws rather than wrap.
class TropValue {
public:
    TropValue() : inf_(true), v_(0) {}  // default is ∞, the additive identity
    static TropValue infinity() { return TropValue(); }
    static TropValue finite(std::int64_t v) {
        if (v < 0) throw Error("TropValue: negative finite value");
        TropValue t;
        t.inf_ = false;
        t.v_ = v;
        return t;
    }

    bool is_infinite() const { return inf_; }
    std::int64_t finite_value() const {
        if (inf_) throw Error("TropValue: finite_value of infinity");
        return v_;
    }

    friend bool operator==(const TropValue& a, const TropValue& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    // Natural order with ∞ greatest.
    friend bool operator<(const TropValue& a, const TropValue& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }

private:
    bool inf_;
    std::int64_t v_;
};

/// The min-plus (tropical) semiring on N ∪ {∞}: addition is min with
/// identity ∞, multiplication is ordinary + with identity 0 and ∞
/// absorbing. An infinite, decidable, subtractive PISD.
struct TropicalNat {
    using value_type = TropValue;
    static constexpr bool finite_carrier = false;
    static constexpr std::int64_t kGuard = std::int64_t(1) << 62;

    std::string name() const { return "trop"; }

    value_type zero() const { return TropValue::infinity(); }
    value_type one() const { return TropValue::finite(0); }

    value_type add(const value_type& a, const value_type& b) const {
        return a < b ? a : b;  // min; ∞ is greatest, hence the identity
    }
    value_type mul(const value_type& a, const value_type& b) const {
        if (a.is_infinite() || b.is_infinite()) return TropValue::infinity();
        std::int64_t x = a.finite_value(), y = b.finite_value();
        if (x > kGuard - y) throw Error("tropical product out of range");
        return TropValue::finite(x + y);
    }

    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    bool is_zero(const value_type& a) const { return a.is_infinite(); }
    bool is_unit(const value_type& a) const { return !a.is_infinite() && a.finite_value() == 0; }

    // ∞ (the zero element) first, then the finite values in increasing order.
    std::vector<value_type> elements_up_to(unsigned long bound) const {
        std::vector<value_type> out;
        out.reserve(bound + 2);
        out.push_back(TropValue::infinity());
        for (unsigned long v = 0; v <= bound; ++v)
            out.push_back(TropValue::finite(static_cast<std::int64_t>(v)));
        return out;
    }

    value_type sample(Rng& rng, unsigned long bound) const {
        std::uint64_t k = uniform_below(rng, bound + 2);
        if (k == 0) return TropValue::infinity();
        return TropValue::finite(static_cast<std::int64_t>(k - 1));
    }

    std::string str(const value_type& a) const {
        return a.is_infinite() ? "inf" : std::to_string(a.finite_value());
    }
    value_type parse(const std::string& text) const {
        if (text == "inf") return TropValue::infinity();
        if (text.empty()) throw ParseError("empty tropical literal");
        for (char c : text)
            if (c < '0' || c > '9') throw ParseError("bad tropical literal: " + text);
        return TropValue::finite(std::stoll(text));
    }
};

}  // namespace semiring
