#include <catch2/catch_amalgamated.hpp>

#include "semiring/frac_checks.hpp"
#include "semiring/laws.hpp"

#include "fixtures.hpp"

using namespace semiring;

namespace {
Natural N(unsigned long v) { return Natural(v); }
TropValue t(long v) { return TropValue::finite(v); }
}

TEST_CASE("cross-multiplication equality on raw fractions", "[frac]") {
    Naturals nat;
    CHECK(fractions_equal(nat, RawFraction<Naturals>{N(1), N(2)},
                          RawFraction<Naturals>{N(2), N(4)}));
    CHECK_FALSE(fractions_equal(nat, RawFraction<Naturals>{N(1), N(2)},
                                RawFraction<Naturals>{N(2), N(3)}));
    CHECK_THROWS_AS(fractions_equal(nat, RawFraction<Naturals>{N(1), N(0)},
                                    RawFraction<Naturals>{N(1), N(1)}),
                    DivisionByZero);

    // tropical rule: a/s = b/t iff a + t = b + s
    TropicalNat trop;
    CHECK(fractions_equal(trop, RawFraction<TropicalNat>{t(3), t(1)},
                          RawFraction<TropicalNat>{t(4), t(2)}));
    CHECK_FALSE(fractions_equal(trop, RawFraction<TropicalNat>{t(3), t(1)},
                                RawFraction<TropicalNat>{t(4), t(1)}));
}

TEST_CASE("canonical forms agree with the cross-multiplication route", "[frac]") {
    Naturals nat;
    NatFractions field = semifield_of_fractions(nat);
    Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
        Natural a(uniform_below(rng, 30)), b(1 + uniform_below(rng, 29));
        Natural c(uniform_below(rng, 30)), d(1 + uniform_below(rng, 29));
        bool canonical = field.equal(field.make(a, b), field.make(c, d));
        bool crossmul = fractions_equal(nat, RawFraction<Naturals>{a, b},
                                        RawFraction<Naturals>{c, d});
        CHECK(canonical == crossmul);
    }

    TropicalNat trop;
    TropicalFractions tfield = semifield_of_fractions(trop);
    CHECK(tfield.equal(tfield.make(t(3), t(1)), tfield.make(t(4), t(2))));
}

TEST_CASE("fraction equality is transitive on sampled triples", "[frac]") {
    Naturals nat;
    Rng rng(5);
    std::size_t checked = 0;
    for (int i = 0; i < 10000; ++i) {
        Natural a(uniform_below(rng, 12)), b(1 + uniform_below(rng, 11));
        Natural k(1 + uniform_below(rng, 5)), l(1 + uniform_below(rng, 5));
        RawFraction<Naturals> x{a, b};
        RawFraction<Naturals> y{a * k, b * k};
        RawFraction<Naturals> z{a * l, b * l};
        if (fractions_equal(nat, x, y) && fractions_equal(nat, y, z)) {
            CHECK(fractions_equal(nat, x, z));
            ++checked;
        }
    }
    CHECK(checked == 10000);
}

TEST_CASE("localizations of the naturals", "[frac]") {
    Naturals nat;
    auto dyadic = localize(nat, McSet<Naturals>::powers(N(2)));
    CHECK(dyadic.contains(dyadic.parse("3/4")));
    CHECK_FALSE(dyadic.contains(dyadic.parse("1/3")));
    CHECK(dyadic.contains(dyadic.parse("5/1")));
    CHECK(dyadic.contains(dyadic.parse("1/16")));
    // 2/6 reduces to 1/3, outside; 3/6 reduces to 1/2, inside
    CHECK_FALSE(dyadic.contains(dyadic.parse("2/6")));
    CHECK(dyadic.contains(dyadic.parse("3/6")));

    auto field = semifield_of_fractions(nat);
    Rng rng(1);
    for (int i = 0; i < 500; ++i) {
        auto u = field.sample(rng, 40);
        CHECK(field.contains(u));
        if (!field.is_zero(u)) CHECK(field.is_unit(u));  // a semifield
    }

    auto trivial = localize(nat, McSet<Naturals>::units());
    CHECK(trivial.contains(trivial.parse("7/1")));
    CHECK_FALSE(trivial.contains(trivial.parse("1/2")));

    CHECK_THROWS_AS(localize(nat, McSet<Naturals>::powers(N(0))), ZeroSemiring);
    CHECK_THROWS_AS(McSet<Naturals>::parse(nat, "set:{1,2}"), ParseError);
}

TEST_CASE("tropical localization collapses pairs to differences", "[frac]") {
    TropicalNat trop;
    auto field = semifield_of_fractions(trop);
    // a/s is the integer a - s
    CHECK(field.equal(field.make(t(3), t(5)), field.finite(-2)));
    CHECK(field.equal(field.parse("3/5"), field.parse("-2")));
    CHECK(field.is_zero(field.make(trop.zero(), t(1))));

    // every nonzero element is a unit
    Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        auto u = field.sample(rng, 25);
        if (!field.is_zero(u)) CHECK(field.is_unit(u));
    }

    // localization at units keeps only nonnegative differences
    auto plain = localize(trop, McSet<TropicalNat>::units());
    CHECK(plain.contains(plain.finite(3)));
    CHECK_FALSE(plain.contains(plain.finite(-3)));
    CHECK_FALSE(plain.is_unit(plain.finite(3)));
    CHECK(plain.is_unit(plain.finite(0)));
}

TEST_CASE("fraction families satisfy the semiring laws", "[frac]") {
    Naturals nat;
    TropicalNat trop;
    NatFractions qplus = semifield_of_fractions(nat);
    TropicalFractions tz = semifield_of_fractions(trop);
    CHECK(check_axioms_random(qplus, 2000, 0, 30).holds);
    CHECK(check_axioms_random(tz, 2000, 0, 30).holds);
}

TEST_CASE("integral equation evaluation", "[frac]") {

    NatFractions base(McSet<Naturals>::units());

    // u = 2: u + 0 = 2 holds, so every element of S is integral
    IntegralEquation<NatFractions> eq1{{base.from_base(N(0))}, {base.from_base(N(2))}};
    CHECK(check_integral_equation(base, base.from_base(N(2)), eq1));

    // u = 3/2: 3/2 + 1 = 5/2 and 2 differ
    IntegralEquation<NatFractions> eq2{{base.from_base(N(1))}, {base.from_base(N(2))}};
    CHECK_FALSE(check_integral_equation(base, base.make(N(3), N(2)), eq2));

    // tropical evaluation in min-plus
    TropicalNat trop;
    TropicalFractions tbase(McSet<TropicalNat>::units());
    IntegralEquation<TropicalFractions> eq3{{tbase.from_base(t(4))}, {tbase.from_base(t(0))}};
    // u = 0: min(0, 4) = 0 vs rhs 0
    CHECK(check_integral_equation(tbase, tbase.from_base(trop.one()), eq3));

    IntegralEquation<TropicalFractions> bad{{tbase.zero()}, {}};
    CHECK_THROWS_AS(check_integral_equation(tbase, tbase.one(), bad), Error);
}

TEST_CASE("integral witness search on the naturals", "[frac]") {
    Naturals nat;
    NatFractions base(McSet<Naturals>::units());

    // 3/2 admits no equation at this scope: N is integrally closed
    CHECK_FALSE(search_integral_witness(base, base.make(N(3), N(2)), 3, 20).has_value());

    // 4/2 is 2 in canonical form, integral at degree 1
    auto w = search_integral_witness(base, base.make(N(4), N(2)), 3, 20);
    REQUIRE(w.has_value());
    CHECK(w->degree() == 1);
    CHECK(check_integral_equation(base, base.from_base(N(2)), *w));

    auto w5 = search_integral_witness(base, base.make(N(5), N(1)), 3, 20);
    REQUIRE(w5.has_value());
    CHECK(w5->degree() == 1);

    // in the full semifield everything is integral: u = b_1 at degree 1
    NatFractions field = semifield_of_fractions(nat);
    auto wf = search_integral_witness(field, field.make(N(3), N(2)), 2, 6);
    REQUIRE(wf.has_value());
    CHECK(wf->degree() == 1);
}

TEST_CASE("integral witness search on the tropical fractions", "[frac]") {

    TropicalFractions base(McSet<TropicalNat>::units());
    // -1 is not integral over the tropical naturals: the lead term n*u
    // stays strictly below every other term on both sides
    CHECK_FALSE(search_integral_witness(base, base.finite(-1), 2, 5).has_value());
    CHECK_FALSE(search_integral_witness(base, base.finite(-2), 2, 4).has_value());

    // members are integral at degree 1
    auto w = search_integral_witness(base, base.from_base(t(3)), 2, 5);
    REQUIRE(w.has_value());
    CHECK(w->degree() == 1);
}

TEST_CASE("integrally closed verdicts", "[frac]") {
    ClosureOptions small;
    small.coeff_bound = 12;
    small.local_coeff_bound = 8;
    small.samples = 3;
    small.sweep_bound = 40;

    std::vector<McSet<Naturals>> nat_locs = {McSet<Naturals>::powers(N(2)),
                                             McSet<Naturals>::powers(N(3))};
    CHECK(check_integrally_closed(Naturals{}, nat_locs, small).holds);

    std::vector<McSet<TropicalNat>> trop_locs = {McSet<TropicalNat>::powers(t(1))};
    small.degree_bound = 2;
    small.coeff_bound = 6;
    CHECK(check_integrally_closed(TropicalNat{}, trop_locs, small).holds);

    CHECK(check_integrally_closed(Boolean{}, {}).holds);
}

TEST_CASE("nilpotent-freeness", "[frac]") {
    CHECK(is_nilpotent_free(Naturals{}).holds);
    CHECK(is_nilpotent_free(TropicalNat{}).holds);
    CHECK(is_nilpotent_free(Boolean{}).holds);
    CHECK(is_nilpotent_free(fixtures::chain3()).holds);

    auto v = is_nilpotent_free(fixtures::z4());
    CHECK_FALSE(v.holds);
    CHECK(v.witness == "s=2");
}

TEST_CASE("goldman-krull verdicts", "[frac]") {
    auto gk_trop = is_goldman_krull(TropicalNat{});
    CHECK(gk_trop.verdict.holds);
    CHECK(gk_trop.witness == "1");

    auto gk_nat = is_goldman_krull(Naturals{}, 100);
    CHECK_FALSE(gk_nat.verdict.holds);
    CHECK(gk_nat.verdict.witness.find("u=30 -> p=7") != std::string::npos);

    CHECK(is_goldman_krull(Boolean{}).verdict.holds);

    Naturals nat;
    CHECK(gk_refuter(nat, N(30)) == N(7));
    CHECK(gk_refuter(nat, N(1)) == N(2));
    CHECK(gk_refuter(nat, N(6)) == N(5));
    CHECK_THROWS_AS(gk_refuter(nat, N(0)), ZeroInputs);
}

TEST_CASE("the three GK conditions agree per family", "[frac]") {
    Naturals nat;
    TropicalNat trop;

    auto vt = check_gk_equivalences(trop, t(1), 30);
    CHECK(vt.holds);
    CHECK(vt.note.find("primes-contain-u=yes") != std::string::npos);

    // all three fail together for u = 2 over the naturals
    auto vn = check_gk_equivalences(nat, N(2), 30);
    CHECK(vn.holds);
    CHECK(vn.note.find("primes-contain-u=no") != std::string::npos);
    CHECK(vn.note.find("ideals-contain-power=no") != std::string::npos);
    CHECK(vn.note.find("inverses-expressible=no") != std::string::npos);

    CHECK(check_gk_equivalences(Boolean{}, true, 10).holds);
    CHECK_THROWS_AS(check_gk_equivalences(nat, N(0), 10), ZeroInputs);

    // a tropical unit cannot generate the semifield and all conditions see it
    auto vu = check_gk_equivalences(trop, t(0), 10);
    CHECK(vu.holds);
    CHECK(vu.note.find("primes-contain-u=no") != std::string::npos);
}

TEST_CASE("PISD Goldman-Krull equivalence", "[frac]") {
    CHECK(check_pisd_gk(TropicalNat{}).holds);
    CHECK(check_pisd_gk(Boolean{}).holds);
    CHECK_THROWS_AS(check_pisd_gk(Naturals{}), NotPISD);
}

TEST_CASE("intermediate semidomains between the tropical family and its semifield", "[frac]") {
    TropicalNat trop;
    // T = localization at powers of a fixed element, three choices
    for (long c : {1L, 2L, 3L}) {
        auto loc = localize(trop, McSet<TropicalNat>::powers(t(c)));
        auto gk = is_goldman_krull(loc);
        CHECK(gk.verdict.holds);
        CHECK(gk.witness == "1");
        // the witness is vacuously in every nonzero prime: the localization
        // is a semifield, so there are none — every nonzero element is a unit
        Rng rng(9);
        for (int i = 0; i < 100; ++i) {
            auto x = loc.sample(rng, 20);
            if (!loc.is_zero(x)) CHECK(loc.is_unit(x));
        }
    }
}

TEST_CASE("single-generator reduction at scope", "[frac]") {
    // F(S) = S[s1/u1, s2/u2] with u1 = 1, u2 = 2 exhibits every difference
    // down to -bound; then u = u1 u2 = 3 alone does the same
    const std::int64_t bound = 30;
    // x is expressible as t / u^n when t = x + n u lands in N
    auto expressible = [&](std::int64_t x, std::int64_t u) {
        for (std::int64_t n = 0; n <= bound; ++n)
            if (x + n * u >= 0) return true;
        return false;
    };
    for (std::int64_t x = -bound; x <= bound; ++x) {
        bool multi = false;
        for (std::int64_t a = 0; a <= bound && !multi; ++a)
            for (std::int64_t b = 0; b <= bound && !multi; ++b)
                if (x + a * 1 + b * 2 >= 0) multi = true;  // t / (u1^a u2^b) form
        CHECK(multi);
        CHECK(expressible(x, 3));
    }
}
