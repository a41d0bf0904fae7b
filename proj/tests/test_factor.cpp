#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "semiring/enumerate.hpp"
#include "semiring/factor.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace semiring;

namespace {
TropValue t(long v) { return TropValue::finite(v); }
}

TEST_CASE("divisibility per family", "[factor]") {
    Naturals nat;
    CHECK(divides(nat, Natural(3ul), Natural(12ul)));
    CHECK_FALSE(divides(nat, Natural(5ul), Natural(12ul)));
    CHECK(divides(nat, Natural(5ul), Natural(0ul)));
    CHECK_THROWS_AS(divides(nat, Natural(0ul), Natural(5ul)), DivisionByZero);

    TropicalNat trop;
    CHECK_FALSE(divides(trop, t(3), t(1)));
    CHECK(divides(trop, t(3), t(5)));
    CHECK(divide_witness(trop, t(5), t(3)).value() == t(2));
    CHECK(divides(trop, t(3), trop.zero()));

    Boolean b;
    CHECK(divides(b, true, false));
    CHECK(divides(b, true, true));

    auto chain = fixtures::chain3();
    CHECK(divides(chain, 2, 0));   // u * 0 = 0
    CHECK(divides(chain, 1, 2));   // u = 1 * u
    CHECK_FALSE(divides(chain, 2, 1));  // min(u, x) never reaches 1
}

TEST_CASE("associates and the principal-ideal route agree", "[factor]") {
    Naturals nat;
    CHECK(associates(nat, Natural(5ul), Natural(5ul)));
    CHECK_FALSE(associates(nat, Natural(5ul), Natural(10ul)));

    Boolean b;
    CHECK(associates(b, true, true));

    // on finite carriers cross-check against (a) = (b)
    for (const auto& s : enumerate_semirings(3)) {
        // both routes only coincide for semidomains, so restrict to them
        if (!is_semidomain(s).holds) continue;
        for (std::size_t a = 0; a < s.order(); ++a)
            for (std::size_t bb = 0; bb < s.order(); ++bb)
                CHECK(associates(s, a, bb) == principal_ideals_equal(s, a, bb));
    }
}

TEST_CASE("irreducibility", "[factor]") {
    Naturals nat;
    CHECK(is_irreducible(nat, Natural(7ul)));
    CHECK_FALSE(is_irreducible(nat, Natural(1ul)));
    CHECK_FALSE(is_irreducible(nat, Natural(0ul)));
    CHECK_FALSE(is_irreducible(nat, Natural(12ul)));

    TropicalNat trop;
    CHECK(is_irreducible(trop, t(1)));
    CHECK_FALSE(is_irreducible(trop, t(2)));  // 2 = 1·1 tropically
    CHECK_FALSE(is_irreducible(trop, trop.one()));
    CHECK_FALSE(is_irreducible(trop, trop.zero()));

    Boolean b;
    CHECK_FALSE(is_irreducible(b, true));
    CHECK_FALSE(is_irreducible(b, false));
}

TEST_CASE("prime elements", "[factor]") {
    Naturals nat;
    CHECK(is_prime_element(nat, Natural(5ul)));
    CHECK_FALSE(is_prime_element(nat, Natural(4ul)));
    // 4 | 2*6 = 12 while 4 divides neither factor
    CHECK(divides(nat, Natural(4ul), Natural(12ul)));
    CHECK_FALSE(divides(nat, Natural(4ul), Natural(2ul)));
    CHECK_FALSE(divides(nat, Natural(4ul), Natural(6ul)));

    // bounded cross-check of the divisibility form against the classical test
    for (unsigned long p = 2; p <= 40; ++p) {
        bool divisibility_form = true;
        for (unsigned long a = 0; a <= 80 && divisibility_form; ++a)
            for (unsigned long b = 0; b <= 80; ++b) {
                Natural ab = Natural(a) * Natural(b);
                if (ab.divisible_by(Natural(p)) && a % p != 0 && b % p != 0) {
                    divisibility_form = false;
                    break;
                }
            }
        CHECK(divisibility_form == is_prime_element(nat, Natural(p)));
    }

    TropicalNat trop;
    CHECK(is_prime_element(trop, t(1)));
    // 2 | 1·1 = 2 tropically but 2 does not divide 1
    CHECK_FALSE(is_prime_element(trop, t(2)));
    CHECK(divides(trop, t(2), trop.mul(t(1), t(1))));
    CHECK_FALSE(divides(trop, t(2), t(1)));

    // finite: the element-level notion matches the ideal-level one
    for (const auto& s : enumerate_semirings(3)) {
        auto all = enumerate_ideals(s);
        for (std::size_t p = 1; p < s.order(); ++p) {
            if (s.is_unit(p)) continue;
            auto principal = ideal_generated(s, {p});
            bool ideal_prime = classify_ideal(s, principal, all).prime;
            CHECK(is_prime_element(s, p) == ideal_prime);
        }
    }
}

TEST_CASE("factorization on the naturals matches trial division", "[factor]") {
    Naturals nat;
    auto f = factor_accp(nat, Natural(12ul));
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == Natural(2ul));
    CHECK(f.factors[1] == Natural(2ul));
    CHECK(f.factors[2] == Natural(3ul));
    CHECK(f.unit.is_one());

    CHECK_THROWS_AS(factor_accp(nat, Natural(1ul)), NotFactorable);
    CHECK_THROWS_AS(factor_accp(nat, Natural(0ul)), NotFactorable);

    for (unsigned long x = 2; x <= 500; ++x) {
        auto factors = factor_accp(nat, Natural(x)).factors;
        auto oracle = oracles::trial_division_factors(x);
        REQUIRE(factors.size() == oracle.size());
        for (std::size_t i = 0; i < oracle.size(); ++i) {
            CHECK(factors[i] == Natural(oracle[i]));
            CHECK(is_irreducible(nat, factors[i]));
        }
    }
}

TEST_CASE("tropical factorization splits into ones", "[factor]") {
    TropicalNat trop;
    auto f = factor_accp(trop, t(3));
    CHECK(trop.is_unit(f.unit));
    REQUIRE(f.factors.size() == 3);
    for (const auto& p : f.factors) CHECK(trop.equal(p, t(1)));

    CHECK_THROWS_AS(factor_accp(trop, trop.one()), NotFactorable);
    CHECK_THROWS_AS(factor_accp(trop, trop.zero()), NotFactorable);
}

TEST_CASE("factorization on non-ACCP-style finite input trips the guard", "[factor]") {
    // in the chain, u = u·u is the only nonunit factorization and it never
    // strictly descends
    auto chain = fixtures::chain3();
    CHECK_FALSE(is_irreducible(chain, 2));
    CHECK_THROWS_AS(factor_accp(chain, 2), DepthExceeded);
}

TEST_CASE("gcd of sets", "[factor]") {
    Naturals nat;
    CHECK(gcd_set(nat, {Natural(12ul), Natural(18ul), Natural(30ul)}) == Natural(6ul));
    CHECK(gcd_set(nat, {Natural(0ul), Natural(5ul)}) == Natural(5ul));
    CHECK_THROWS_AS(gcd_set(nat, {Natural(0ul), Natural(0ul)}), AllZero);

    TropicalNat trop;
    CHECK(trop.equal(gcd_set(trop, {t(3), t(5), t(9)}), t(3)));
    CHECK(trop.equal(gcd_set(trop, {trop.zero(), t(4)}), t(4)));

    Boolean b;
    CHECK(gcd_set(b, {false, true}) == true);

    // every divisor of all three divides the reported gcd (oracle check)
    for (unsigned long d = 1; d <= 30; ++d) {
        if (12 % d == 0 && 18 % d == 0 && 30 % d == 0) CHECK(6 % d == 0);
    }
}

TEST_CASE("gcd identities hold on the registered GCD semidomains", "[factor]") {
    CHECK(check_gcd_identities(Naturals{}, 20).holds);
    CHECK(check_gcd_identities(TropicalNat{}, 15).holds);
    CHECK(check_gcd_identities(Boolean{}, 2).holds);
}

TEST_CASE("kaplansky criterion", "[factor]") {
    auto nat_verdict = check_kaplansky(Naturals{}, 60);
    CHECK(nat_verdict.holds);

    auto trop_verdict = check_kaplansky(TropicalNat{}, 30);
    CHECK(trop_verdict.holds);

    auto bool_verdict = check_kaplansky(Boolean{}, 2);
    CHECK(bool_verdict.holds);

    // the <2,3> registry entry really contains the prime 2
    auto ideal23 = NatIdeal::generated_by({Natural(2ul), Natural(3ul)});
    CHECK(ideal23.contains(Natural(2ul)));
    CHECK(is_prime_element(Naturals{}, Natural(2ul)));
}

TEST_CASE("products of primes form a saturated set", "[factor]") {
    CHECK(check_saturated_prime_products(Naturals{}, 100).holds);
    CHECK(check_saturated_prime_products(TropicalNat{}, 30).holds);
    CHECK(check_saturated_prime_products(Boolean{}, 2).holds);
}

TEST_CASE("uf1 cross-check: irreducible equals prime on the UFSD families", "[factor]") {
    Naturals nat;
    TropicalNat trop;
    for (unsigned long x = 0; x <= 200; ++x)
        CHECK(is_irreducible(nat, Natural(x)) == is_prime_element(nat, Natural(x)));
    for (const auto& x : trop.elements_up_to(200))
        CHECK(is_irreducible(trop, x) == is_prime_element(trop, x));
}
