#include <catch2/catch_amalgamated.hpp>

#include "semiring/laws.hpp"
#include "semiring/traits.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace semiring;

TEST_CASE("natural arithmetic", "[core]") {
    Naturals nat;
    CHECK(nat.equal(nat.add(Natural(2ul), Natural(3ul)), Natural(5ul)));
    CHECK(nat.equal(nat.mul(Natural(2ul), Natural(3ul)), Natural(6ul)));
    CHECK(nat.is_unit(Natural(1ul)));
    CHECK_FALSE(nat.is_unit(Natural(2ul)));
    CHECK_FALSE(nat.is_unit(nat.zero()));

    // no overflow: values leave the machine-word range freely
    Natural big = Natural(1ul << 32).pow(4);
    CHECK(big.str() == "340282366920938463463374607431768211456");
}

TEST_CASE("tropical arithmetic is min-plus", "[core]") {
    TropicalNat trop;
    auto t = [](long v) { return TropValue::finite(v); };
    CHECK(trop.equal(trop.add(t(2), t(3)), t(2)));
    CHECK(trop.equal(trop.mul(t(2), t(3)), t(5)));
    CHECK(trop.equal(trop.mul(trop.zero(), t(3)), trop.zero()));
    CHECK(trop.equal(trop.add(trop.zero(), t(3)), t(3)));
    CHECK(trop.is_unit(t(0)));
    CHECK_FALSE(trop.is_unit(t(1)));
    CHECK_FALSE(trop.is_unit(trop.zero()));
}

TEST_CASE("boolean join-meet", "[core]") {
    Boolean b;
    CHECK(b.add(true, true) == true);
    CHECK(b.mul(true, false) == false);
    CHECK(b.is_unit(true));
    CHECK_FALSE(b.is_unit(false));
}

TEST_CASE("axioms hold on the registered families", "[core]") {
    CHECK(check_axioms_random(Naturals{}, 2000, 0, 1000).holds);
    CHECK(check_axioms_random(TropicalNat{}, 2000, 0, 1000).holds);
    CHECK(check_axioms_exhaustive(Boolean{}).holds);
}

TEST_CASE("axioms catch a broken table", "[core]") {
    // absorption deliberately corrupted: mul(0,1) = 1
    auto violations = FiniteSemiring::validate({{0, 1}, {1, 1}}, {{0, 1}, {1, 1}});
    bool saw_absorption = false;
    for (const auto& v : violations) saw_absorption = saw_absorption || v.axiom == "absorption";
    CHECK(saw_absorption);
}

TEST_CASE("unit flags across families", "[core]") {
    // is_unit(one) and !is_unit(zero) in every family
    Naturals nat;
    TropicalNat trop;
    Boolean b;
    auto chain = fixtures::chain3();
    CHECK(nat.is_unit(nat.one()));
    CHECK_FALSE(nat.is_unit(nat.zero()));
    CHECK(trop.is_unit(trop.one()));
    CHECK_FALSE(trop.is_unit(trop.zero()));
    CHECK(b.is_unit(b.one()));
    CHECK_FALSE(b.is_unit(b.zero()));
    CHECK(chain.is_unit(chain.one()));
    CHECK_FALSE(chain.is_unit(chain.zero()));
}

TEST_CASE("semidomain verdicts", "[core]") {
    CHECK(is_semidomain(Naturals{}).holds);
    CHECK(is_semidomain(Boolean{}).holds);

    // tropical: registered verdict, cross-checked by exhaustion over small values
    CHECK(is_semidomain(TropicalNat{}).holds);
    TropicalNat trop;
    auto sample = trop.elements_up_to(20);
    for (const auto& a : sample) {
        if (trop.is_zero(a)) continue;
        for (const auto& b : sample)
            for (const auto& c : sample)
                if (trop.equal(trop.mul(a, b), trop.mul(a, c))) CHECK(trop.equal(b, c));
    }

    // the chain fails: min(u,u) = min(u,1) but u != 1
    auto chain = fixtures::chain3();
    auto verdict = is_semidomain(chain);
    CHECK_FALSE(verdict.holds);
    auto witness = oracles::cancellation_counterexample(chain);
    REQUIRE(witness.has_value());
    CHECK((*witness)[0] == 2);  // a = u
}

TEST_CASE("element-semiring mismatch is rejected", "[core]") {
    auto chain = fixtures::chain3();
    CHECK_THROWS_AS(chain.add(0, 7), MismatchError);
    CHECK_THROWS_AS(chain.mul(9, 0), MismatchError);
}

TEST_CASE("parsing element literals", "[core]") {
    Naturals nat;
    TropicalNat trop;
    CHECK(nat.equal(nat.parse("42"), Natural(42ul)));
    CHECK_THROWS_AS(nat.parse("-1"), ParseError);
    CHECK(trop.equal(trop.parse("inf"), trop.zero()));
    CHECK(trop.equal(trop.parse("7"), TropValue::finite(7)));
}
