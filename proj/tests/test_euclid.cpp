#include <catch2/catch_amalgamated.hpp>

#include "semiring/enumerate.hpp"
#include "semiring/euclid.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace semiring;

namespace {
TropValue t(long v) { return TropValue::finite(v); }
}

TEST_CASE("norm values are totally ordered with infinity on top", "[euclid]") {
    CHECK(NormValue(3ul) < NormValue(5ul));
    CHECK(NormValue(5ul) < NormValue::infinity());
    CHECK_FALSE(NormValue::infinity() < NormValue::infinity());
    CHECK(NormValue::infinity() == NormValue::infinity());
}

TEST_CASE("division with remainder per family", "[euclid]") {
    Naturals nat;
    auto en = natural_euclidean(nat);
    auto [q, r] = div_rem(en, Natural(17ul), Natural(5ul));
    CHECK(q == Natural(3ul));
    CHECK(r == Natural(2ul));
    CHECK_THROWS_AS(div_rem(en, Natural(1ul), Natural(0ul)), DivisionByZero);

    TropicalNat trop;
    auto et = tropical_euclidean(trop);
    auto [q1, r1] = div_rem(et, t(1), t(3));
    CHECK(trop.equal(q1, t(0)));
    CHECK(trop.equal(r1, t(1)));
    auto [q2, r2] = div_rem(et, t(5), t(3));
    CHECK(trop.equal(q2, t(2)));
    CHECK(trop.is_zero(r2));
}

TEST_CASE("a broken norm is caught by the division validator", "[euclid]") {
    Naturals nat;
    auto en = natural_euclidean(nat);
    en.norm = [](const Natural& a) {
        return a.is_zero() ? NormValue::infinity() : NormValue(5ul);  // constant norm
    };
    CHECK_THROWS_AS(div_rem(en, Natural(17ul), Natural(5ul)), NoDecomposition);
}

TEST_CASE("star norm", "[euclid]") {
    Naturals nat;
    auto en = natural_euclidean(nat);
    CHECK(star_norm(en, Natural(7ul)) == NormValue(7ul));
    CHECK(star_norm(en, Natural(0ul)) == NormValue::infinity());

    Boolean b;
    auto eb = boolean_euclidean(b);
    CHECK(star_norm(eb, true) == NormValue(0ul));

    // without a registered minimizer the infinite search must refuse
    en.star_minimizer = nullptr;
    CHECK_THROWS_AS(star_norm(en, Natural(7ul)), UnboundedSearch);
}

TEST_CASE("euclidean gcd on naturals matches divisor enumeration", "[euclid]") {
    Naturals nat;
    auto en = natural_euclidean(nat);

    auto chain = euclidean_gcd_chain(en, Natural(12ul), Natural(18ul));
    CHECK(chain.gcd == Natural(6ul));
    CHECK(chain.remainders.front() == Natural(12ul));
    CHECK(chain.remainders.back() == Natural(0ul));

    CHECK(euclidean_gcd(en, Natural(5ul), Natural(0ul)) == Natural(5ul));
    CHECK(euclidean_gcd(en, Natural(0ul), Natural(5ul)) == Natural(5ul));
    CHECK_THROWS_AS(euclidean_gcd(en, Natural(0ul), Natural(0ul)), ZeroInputs);

    for (unsigned long a = 0; a <= 40; ++a)
        for (unsigned long b = 0; b <= 40; ++b) {
            if (a == 0 && b == 0) continue;
            CHECK(euclidean_gcd(en, Natural(a), Natural(b)) ==
                  Natural(oracles::gcd_by_enumeration(a, b)));
        }
}

TEST_CASE("euclidean gcd on the tropical family is min", "[euclid]") {
    TropicalNat trop;
    auto et = tropical_euclidean(trop);
    CHECK(trop.equal(euclidean_gcd(et, t(3), t(5)), t(3)));
    CHECK(trop.equal(euclidean_gcd(et, t(5), t(3)), t(3)));
    CHECK(trop.equal(euclidean_gcd(et, trop.zero(), t(4)), t(4)));

    // divisor-enumeration oracle: d | a iff d <= a, so any common divisor
    // divides min(a, b) and min itself divides both
    for (long a = 0; a <= 25; ++a)
        for (long b = 0; b <= 25; ++b) {
            auto g = euclidean_gcd(et, t(a), t(b));
            CHECK(trop.equal(g, t(std::min(a, b))));
        }
}

TEST_CASE("norm search over the fixtures", "[euclid]") {
    auto found_bool = find_euclidean_norm(fixtures::bool2());
    REQUIRE(found_bool.has_value());
    CHECK(found_bool->table[0] == NormValue::infinity());
    CHECK(found_bool->table[1] == NormValue(0ul));

    auto chain = fixtures::chain3();
    auto found_chain = find_euclidean_norm(chain);
    REQUIRE(found_chain.has_value());
    CHECK(found_chain->table[1] == NormValue(0ul));
    CHECK(found_chain->table[2] == NormValue(1ul));

    auto e = finite_euclidean(chain, found_chain->table);
    CHECK(verify_structure(e).holds);
}

TEST_CASE("norm search agrees with the unpruned sweep at small orders", "[euclid]") {
    for (std::size_t order = 2; order <= 4; ++order) {
        EnumerateOptions opts;
        opts.cap = 4;
        for (const auto& s : enumerate_semirings(order, opts)) {
            auto fast = find_euclidean_norm(s);
            auto slow = oracles::first_norm_by_sweep(s, s.order());
            REQUIRE(fast.has_value() == slow.has_value());
            if (fast) {
                for (std::size_t i = 1; i < s.order(); ++i)
                    CHECK(fast->table[i] == NormValue(Natural((*slow)[i])));
                CHECK(verify_structure(finite_euclidean(s, fast->table)).holds);
            }
        }
    }
}

TEST_CASE("verify_structure on the naturals", "[euclid]") {
    Naturals nat;
    auto en = natural_euclidean(nat);
    CHECK(verify_structure(en, 60).holds);

    // condition (1) broken: norm infinite at a nonzero element
    auto broken = en;
    broken.norm = [](const Natural& a) {
        if (a == Natural(2ul)) return NormValue::infinity();
        return a.is_zero() ? NormValue::infinity() : NormValue(a);
    };
    CHECK_FALSE(verify_structure(broken, 10).holds);
}

TEST_CASE("the star structure is again Euclidean", "[euclid]") {
    Naturals nat;
    auto en = natural_euclidean(nat);
    auto star = star_structure(en, 60);
    CHECK(verify_structure(star, 60).holds);

    auto chain_norm = find_euclidean_norm(fixtures::chain3());
    REQUIRE(chain_norm.has_value());
    auto chain = fixtures::chain3();
    auto e = finite_euclidean(chain, chain_norm->table);
    auto star_fin = star_structure(e);
    CHECK(verify_structure(star_fin).holds);
}
