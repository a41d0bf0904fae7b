#pragma once

#include <string>
#include <vector>

#include "semiring/natural.hpp"
#include "semiring/random.hpp"

namespace semiring {

/// The semiring of natural numbers under ordinary addition and
/// multiplication. A semidomain; not subtractive (the ideal generated by
/// {2,3} is {0,2,3,4,...} and 2+1 = 3 lands in it while 1 does not).
struct Naturals {
    using value_type = Natural;
    static constexpr bool finite_carrier = false;

    std::string name() const { return "nat"; }

    value_type zero() const { return Natural(0ul); }
    value_type one() const { return Natural(1ul); }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }

    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    bool is_unit(const value_type& a) const { return a.is_one(); }

    // All elements of canonical size <= bound, in increasing order.
    std::vector<value_type> elements_up_to(unsigned long bound) const {
        std::vector<value_type> out;
        out.reserve(bound + 1);
        for (unsigned long v = 0; v <= bound; ++v) out.emplace_back(v);
        return out;
    }

    value_type sample(Rng& rng, unsigned long bound) const {
        return Natural(uniform_below(rng, bound + 1));
    }

    std::string str(const value_type& a) const { return a.str(); }
    value_type parse(const std::string& text) const { return Natural::parse(text); }
};

}  // namespace semiring
