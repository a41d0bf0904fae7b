#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "semiring/errors.hpp"

namespace semiring {

/// Arbitrary-precision nonnegative integer: the carrier of the
/// natural-number semiring and the finite part of norm values.
/// Subtraction is deliberately absent from the public surface; use
/// checked_sub where a difference is known to exist.
class Natural {
public:
    Natural() : v_(0) {}
    Natural(unsigned long v) : v_(v) {}
    explicit Natural(mpz_class v) : v_(std::move(v)) {
        if (sgn(v_) < 0) throw Error("Natural: negative value");
    }

    static Natural parse(const std::string& text) {
        if (text.empty()) throw ParseError("empty natural literal");
        for (char c : text)
            if (c < '0' || c > '9') throw ParseError("bad natural literal: " + text);
        return Natural(mpz_class(text, 10));
    }

    const mpz_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    friend Natural operator+(const Natural& a, const Natural& b) {
        return Natural(mpz_class(a.v_ + b.v_));
    }
    friend Natural operator*(const Natural& a, const Natural& b) {
        return Natural(mpz_class(a.v_ * b.v_));
    }
    friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

    // Euclidean division; b != 0.
    std::pair<Natural, Natural> divmod(const Natural& b) const {
        if (b.is_zero()) throw DivisionByZero("divmod by zero");
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v_.get_mpz_t(), b.v_.get_mpz_t());
        return {Natural(std::move(q)), Natural(std::move(r))};
    }

    bool divisible_by(const Natural& b) const {
        if (b.is_zero()) throw DivisionByZero("divisibility by zero");
        return mpz_divisible_p(v_.get_mpz_t(), b.v_.get_mpz_t()) != 0;
    }

    // Pre: divisible_by(b).
    Natural exact_div(const Natural& b) const {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), b.v_.get_mpz_t());
        return Natural(std::move(q));
    }

    std::optional<Natural> checked_sub(const Natural& b) const {
        if (v_ < b.v_) return std::nullopt;
        return Natural(mpz_class(v_ - b.v_));
    }

    Natural pow(unsigned long e) const {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
        return Natural(std::move(r));
    }

    // gcd for canonical-form bookkeeping (fraction reduction); the Euclidean
    // algorithm of the euclid module is the theorem-bearing route.
    static Natural gcd(const Natural& a, const Natural& b) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return Natural(std::move(g));
    }

    unsigned long to_ulong() const {
        if (!v_.fits_ulong_p()) throw Error("Natural too large for machine word: " + str());
        return v_.get_ui();
    }

    std::string str() const { return v_.get_str(); }

private:
    mpz_class v_;
};

}  // namespace semiring
