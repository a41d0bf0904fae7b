#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semiring/boolean.hpp"
#include "semiring/naturals.hpp"
#include "semiring/random.hpp"
#include "semiring/tropical.hpp"

namespace semiring {

// ---- multiplicatively closed sets of the infinite families -------------------

/// MC-set descriptor: `units`, `nonzero`, or `powers:<element>`. Explicit
/// member sets exist only for finite carriers (module finite).
template <class S>
struct McSet {
    enum class Kind { Units, Nonzero, Powers };
    Kind kind = Kind::Nonzero;
    typename S::value_type generator{};  // Powers only

    static McSet units() { return {Kind::Units, {}}; }
    static McSet nonzero() { return {Kind::Nonzero, {}}; }
    static McSet powers(typename S::value_type g) { return {Kind::Powers, std::move(g)}; }

    static McSet parse(const S& s, const std::string& text) {
        if (text == "units") return units();
        if (text == "nonzero") return nonzero();
        if (text.rfind("powers:", 0) == 0) return powers(s.parse(text.substr(7)));
        throw ParseError("bad MC-set spec: " + text);
    }

    std::string str(const S& s) const {
        switch (kind) {
            case Kind::Units: return "units";
            case Kind::Nonzero: return "nonzero";
            default: return "powers:" + s.str(generator);
        }
    }

    bool contains_zero(const S& s) const {
        return kind == Kind::Powers && s.is_zero(generator);
    }
};

// ---- fractions of the naturals -----------------------------------------------

/// Localization of the naturals at an MC-set T: nonnegative fractions with
/// denominators from T. Values are kept in reduced form, so equality is
/// structural; arithmetic is that of F(N) with membership in S_T decided by
/// the reduced denominator.
class NatFractions {
public:
    struct Frac {
        Natural num, den;  // den >= 1, gcd(num, den) = 1
    };
    using value_type = Frac;
    static constexpr bool finite_carrier = false;

    explicit NatFractions(McSet<Naturals> t) : t_(std::move(t)) {
        if (t_.contains_zero(Naturals{}))
            throw ZeroSemiring("localizing at a set containing 0 collapses the semiring");
    }

    const McSet<Naturals>& mcset() const { return t_; }

    std::string name() const { return "frac(nat, " + t_.str(Naturals{}) + ")"; }

    value_type make(const Natural& num, const Natural& den) const {
        if (den.is_zero()) throw DivisionByZero("fraction with zero denominator");
        Natural g = Natural::gcd(num, den);
        if (g.is_zero() || g.is_one()) return {num, den};
        return {num.exact_div(g), den.exact_div(g)};
    }
    value_type from_base(const Natural& n) const { return {n, Natural(1ul)}; }

    value_type zero() const { return {Natural(0ul), Natural(1ul)}; }
    value_type one() const { return {Natural(1ul), Natural(1ul)}; }

    value_type add(const value_type& x, const value_type& y) const {
        return make(x.num * y.den + y.num * x.den, x.den * y.den);
    }
    value_type mul(const value_type& x, const value_type& y) const {
        return make(x.num * y.num, x.den * y.den);
    }

    bool equal(const value_type& x, const value_type& y) const {
        return x.num == y.num && x.den == y.den;
    }
    bool is_zero(const value_type& x) const { return x.num.is_zero(); }

    // A reduced denominator is admissible when it divides some element of T.
    bool denominator_allowed(const Natural& d) const {
        switch (t_.kind) {
            case McSet<Naturals>::Kind::Units: return d.is_one();
            case McSet<Naturals>::Kind::Nonzero: return true;
            default: {
                Natural rest = d;
                for (;;) {
                    Natural g = Natural::gcd(rest, t_.generator);
                    if (g.is_one()) break;
                    rest = rest.exact_div(g);
                }
                return rest.is_one();
            }
        }
    }

    /// Membership of a value of F(N) in the localization S_T.
    bool contains(const value_type& x) const { return denominator_allowed(x.den); }

    bool is_unit(const value_type& x) const {
        return !is_zero(x) && contains(x) && denominator_allowed(x.num);
    }

    // Members with numerator and denominator of size <= bound, denominators
    // first so witnesses come out deterministic.
    std::vector<value_type> elements_up_to(unsigned long bound) const {
        std::vector<value_type> out;
        for (unsigned long d = 1; d <= bound; ++d) {
            if (!denominator_allowed(Natural(d))) continue;
            for (unsigned long n = 0; n <= bound; ++n) {
                auto v = make(Natural(n), Natural(d));
                if (v.num == Natural(n) && v.den == Natural(d))  // already reduced
                    out.push_back(v);
            }
        }
        return out;
    }

    value_type sample(Rng& rng, unsigned long bound) const {
        for (int tries = 0; tries < 64; ++tries) {
            Natural n(uniform_below(rng, bound + 1));
            Natural d(1 + uniform_below(rng, bound));
            auto v = make(n, d);
            if (contains(v)) return v;
        }
        return from_base(Natural(uniform_below(rng, bound + 1)));
    }

    std::string str(const value_type& x) const { return x.num.str() + "/" + x.den.str(); }

    value_type parse(const std::string& text) const {
        auto slash = text.find('/');
        if (slash == std::string::npos) return from_base(Natural::parse(text));
        return make(Natural::parse(text.substr(0, slash)), Natural::parse(text.substr(slash + 1)));
    }

private:
    McSet<Naturals> t_;
};

// ---- fractions of the tropical semiring ----------------------------------------

/// Localization of the tropical semiring. The canonical form of a fraction
/// a/s is the integer difference a - s with ∞ preserved, so the carrier is
/// min-plus over a set of integers: all of Z ∪ {∞} once T contains any
/// nonunit, the nonnegative integers for T = units.
class TropicalFractions {
public:
    struct Val {
        bool inf = true;
        std::int64_t d = 0;
    };
    using value_type = Val;
    static constexpr bool finite_carrier = false;
    static constexpr std::int64_t kGuard = std::int64_t(1) << 62;

    explicit TropicalFractions(McSet<TropicalNat> t) : t_(std::move(t)) {
        if (t_.contains_zero(TropicalNat{}))
            throw ZeroSemiring("localizing at a set containing the tropical zero");
    }

    const McSet<TropicalNat>& mcset() const { return t_; }

    std::string name() const { return "frac(trop, " + t_.str(TropicalNat{}) + ")"; }

    static value_type finite(std::int64_t d) { return {false, d}; }

    value_type make(const TropValue& num, const TropValue& den) const {
        if (den.is_infinite()) throw DivisionByZero("fraction with the tropical zero denominator");
        if (num.is_infinite()) return {};
        return finite(num.finite_value() - den.finite_value());
    }
    value_type from_base(const TropValue& v) const {
        return v.is_infinite() ? Val{} : finite(v.finite_value());
    }

    value_type zero() const { return {}; }
    value_type one() const { return finite(0); }

    value_type add(const value_type& x, const value_type& y) const {
        if (x.inf) return y;
        if (y.inf) return x;
        return finite(std::min(x.d, y.d));
    }
    value_type mul(const value_type& x, const value_type& y) const {
        if (x.inf || y.inf) return {};
        if (x.d > 0 && y.d > kGuard - x.d) throw Error("tropical product out of range");
        return finite(x.d + y.d);
    }

    bool equal(const value_type& x, const value_type& y) const {
        return x.inf == y.inf && (x.inf || x.d == y.d);
    }
    bool is_zero(const value_type& x) const { return x.inf; }

    /// Membership in S_T: nonnegative differences always; negative ones
    /// whenever T supplies arbitrarily large denominators.
    bool contains(const value_type& x) const {
        if (x.inf || x.d >= 0) return true;
        switch (t_.kind) {
            case McSet<TropicalNat>::Kind::Units: return false;
            case McSet<TropicalNat>::Kind::Nonzero: return true;
            default: return t_.generator.finite_value() >= 1;
        }
    }

    bool is_unit(const value_type& x) const {
        if (x.inf) return false;
        return contains(x) && contains(finite(-x.d));
    }

    std::vector<value_type> elements_up_to(unsigned long bound) const {
        std::vector<value_type> out;
        out.push_back({});
        std::int64_t b = static_cast<std::int64_t>(bound);
        std::int64_t lo = contains(finite(-1)) ? -b : 0;
        for (std::int64_t d = lo; d <= b; ++d) out.push_back(finite(d));
        return out;
    }

    value_type sample(Rng& rng, unsigned long bound) const {
        std::int64_t b = static_cast<std::int64_t>(bound);
        std::int64_t lo = contains(finite(-1)) ? -b : 0;
        std::uint64_t span = static_cast<std::uint64_t>(b - lo) + 2;
        std::uint64_t k = uniform_below(rng, span);
        if (k == 0) return {};
        return finite(lo + static_cast<std::int64_t>(k - 1));
    }

    std::string str(const value_type& x) const {
        return x.inf ? "inf" : std::to_string(x.d);
    }

    value_type parse(const std::string& text) const {
        if (text == "inf") return {};
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            TropicalNat trop;
            return make(trop.parse(text.substr(0, slash)), trop.parse(text.substr(slash + 1)));
        }
        std::size_t pos = text[0] == '-' ? 1 : 0;
        if (pos == text.size()) throw ParseError("bad fraction literal: " + text);
        for (std::size_t i = pos; i < text.size(); ++i)
            if (text[i] < '0' || text[i] > '9') throw ParseError("bad fraction literal: " + text);
        std::int64_t mag = std::stoll(text.substr(pos));
        return finite(pos ? -mag : mag);
    }

private:
    McSet<TropicalNat> t_;
};

// ---- constructors per family -----------------------------------------------------

inline NatFractions localize(const Naturals&, McSet<Naturals> t) {
    return NatFractions(std::move(t));
}
inline TropicalFractions localize(const TropicalNat&, McSet<TropicalNat> t) {
    return TropicalFractions(std::move(t));
}
// F(B) = B: localizing a semifield at any admissible MC-set returns it.
inline Boolean localize(const Boolean&, const McSet<Boolean>& t) {
    if (t.contains_zero(Boolean{}))
        throw ZeroSemiring("localizing at a set containing 0 collapses the semiring");
    return Boolean{};
}

template <class S>
auto semifield_of_fractions(const S& s) {
    return localize(s, McSet<S>::nonzero());
}

// ---- raw fractions and the cross-multiplication rule ------------------------------

/// A fraction before canonicalization. fractions_equal is the definitional
/// route (cross multiplication in the base); the families' make() gives the
/// canonical-form route, and the two are cross-checked in tests.
template <class S>
struct RawFraction {
    typename S::value_type num, den;
};

template <class S>
bool fractions_equal(const S& base, const RawFraction<S>& x, const RawFraction<S>& y) {
    if (base.is_zero(x.den) || base.is_zero(y.den))
        throw DivisionByZero("fraction with zero denominator");
    return base.equal(base.mul(x.num, y.den), base.mul(y.num, x.den));
}

}  // namespace semiring
