#pragma once

#include <string>
#include <vector>

#include "semiring/errors.hpp"
#include "semiring/random.hpp"

namespace semiring {

/// The two-element Boolean semiring: join as addition (1+1 = 1), meet as
/// multiplication. The smallest semifield.
struct Boolean {
    using value_type = bool;
    static constexpr bool finite_carrier = true;

    std::string name() const { return "bool"; }

    value_type zero() const { return false; }
    value_type one() const { return true; }

    value_type add(value_type a, value_type b) const { return a || b; }
    value_type mul(value_type a, value_type b) const { return a && b; }

    bool equal(value_type a, value_type b) const { return a == b; }
    bool is_zero(value_type a) const { return !a; }
    bool is_unit(value_type a) const { return a; }

    std::vector<value_type> elements() const { return {false, true}; }
    std::vector<value_type> elements_up_to(unsigned long) const { return elements(); }

    value_type sample(Rng& rng, unsigned long = 0) const { return uniform_below(rng, 2) == 1; }

    std::string str(value_type a) const { return a ? "1" : "0"; }
    value_type parse(const std::string& text) const {
        if (text == "0") return false;
        if (text == "1") return true;
        throw ParseError("bad boolean literal: " + text);
    }
};

}  // namespace semiring
