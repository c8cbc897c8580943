#include <doctest.h>

#include "fixtures.hpp"
#include "hdc/divisor.hpp"

using namespace hdc;
using namespace fixtures;

TEST_CASE("divisor degree") {
    CHECK(divisor_degree(four_point_divisor()) == 4);
    CHECK(divisor_degree(make_divisor({fam("t^4+1", "t", "1", "0", 1)})) == 4);
    CHECK(divisor_degree(make_divisor({point_family(pt(0, 0, 1), 3)})) == 3);
    CHECK(divisor_degree(quartic_rational_divisor()) == 10);
}

TEST_CASE("is_hausdorff") {
    CHECK(is_hausdorff(four_point_divisor()));
    CHECK_FALSE(is_hausdorff(make_divisor({point_family(pt(1, 0, 0), 2)})));
    CHECK_FALSE(is_hausdorff(make_divisor({point_family(pt(1, 1, 1))})));
}

TEST_CASE("is_n_rational") {
    EffectiveDivisor triple = make_divisor({affine_point_family(Rational(0), Rational(0), 3)});
    CHECK(is_n_rational(triple, 4));  // D = 3P, (4-1)(4-2) = 6 = 3*2
    EffectiveDivisor three_doubles =
        make_divisor({affine_point_family(Rational(3), Rational(-2), 2),
                      affine_point_family(Rational(1), Rational(1), 2),
                      affine_point_family(Rational(2), Rational(3), 2)});
    CHECK(is_n_rational(three_doubles, 4));
    EffectiveDivisor one_double = make_divisor({affine_point_family(Rational(0), Rational(0), 2)});
    CHECK_FALSE(is_n_rational(one_double, 4));
    CHECK(is_n_rational(one_double, 3));
    EffectiveDivisor simple = make_divisor({affine_point_family(Rational(2), Rational(5), 1)});
    CHECK(is_n_rational(simple, 1));
    CHECK(is_n_rational(simple, 2));
    CHECK_FALSE(is_n_rational(simple, 4));
}

TEST_CASE("decompose_rational_hausdorff") {
    auto c = decompose_rational_hausdorff(quartic_rational_divisor(), 4);
    CHECK(divisor_degree(*c.hausdorff_part) == 4);
    CHECK(divisor_degree(*c.singular_part) == 6);
    CHECK_FALSE(c.is_monomial);
    CHECK_FALSE(c.is_hausdorff);

    auto m = decompose_rational_hausdorff(monomial_quartic_divisor(), 4);
    CHECK(m.is_monomial);
    CHECK(divisor_degree(*m.singular_part) == 3);

    // an affine simple point is not allowed in the singular part for n = 4
    EffectiveDivisor bad = four_point_divisor();
    bad.families.push_back(affine_point_family(Rational(5), Rational(5), 1));
    CHECK_THROWS_WITH_AS(decompose_rational_hausdorff(make_divisor(bad.families), 4),
                         doctest::Contains("NotRationalHausdorff"), DomainError);

    // decompose then re-merge reproduces the original family multiset
    auto c2 = decompose_rational_hausdorff(second_quartic_divisor(), 4);
    EffectiveDivisor merged = merge_divisors(*c2.hausdorff_part, *c2.singular_part);
    CHECK(divisor_degree(merged) == divisor_degree(second_quartic_divisor()));
    CHECK(merged.families.size() == second_quartic_divisor().families.size());
}

TEST_CASE("divisor_from_curve") {
    EffectiveDivisor D = divisor_from_curve(sample_quartic());
    CHECK(divisor_degree(D) == 4);
    CHECK(is_hausdorff(D));
    // families: (1:1:0), (1:-1:0), and {(1:t:0) | t^2+1 = 0}
    REQUIRE(D.families.size() == 3);
    bool has_conj = false;
    for (auto& f : D.families)
        if (f.m == parse_upoly_t("t^2+1")) has_conj = true;
    CHECK(has_conj);

    CHECK_THROWS_WITH_AS(divisor_from_curve(parse_poly("y-x^2")),
                         doctest::Contains("NotHausdorffCurve"), DomainError);
    CHECK_FALSE(check_hausdorff_curve(parse_poly("y-x^2")));
    CHECK(check_hausdorff_curve(sample_quartic()));
    CHECK(check_hausdorff_curve(parse_poly("3*x+2*y-7")));  // lines are Hausdorff

    EffectiveDivisor hyp = divisor_from_curve(parse_poly("x*y-1"));
    CHECK(divisor_degree(hyp) == 2);
    // (1:0:0) + (0:1:0)
    bool has010 = false, has100 = false;
    for (auto& f : hyp.families) {
        if (f.p1.is_zero() && !f.p2.is_zero()) has010 = true;
        if (!f.p1.is_zero() && f.p2.is_zero()) has100 = true;
    }
    CHECK(has010);
    CHECK(has100);

    // degree preservation whenever it succeeds
    for (const char* s : {"x^2+y^2-1", "x^3-y^2+x*y^2", "x*y-1"}) {
        MPoly<Rational> f = parse_poly(s);
        CHECK(divisor_degree(divisor_from_curve(f)) == f.total_degree());
    }
}

TEST_CASE("validate_singular_point") {
    EffectiveDivisor D = divisor_from_curve(sample_quartic());
    CHECK(validate_singular_point(Rational(41, 64), Rational(-1, 32), D));
    EffectiveDivisor E = make_divisor({point_family(pt(1, 1, 0))});
    CHECK_FALSE(validate_singular_point(Rational(1), Rational(1), E));
    CHECK_FALSE(validate_singular_point(Rational(0), Rational(0), D));
}

TEST_CASE("build_monomial_divisor") {
    EffectiveDivisor D = divisor_from_curve(sample_quartic());
    EffectiveDivisor M = build_monomial_divisor(D, Rational(41, 64), Rational(-1, 32), 4);
    CHECK(divisor_degree(M) == 7);  // n + (n-1)
    auto c = decompose_rational_hausdorff(M, 4);
    CHECK(c.is_monomial);

    EffectiveDivisor circle = make_divisor({fam("t^2+1", "1", "t", "0", 1)});
    EffectiveDivisor M2 = build_monomial_divisor(circle, Rational(0), Rational(-1), 2);
    CHECK(divisor_degree(M2) == 3);

    EffectiveDivisor E = make_divisor({point_family(pt(1, 1, 0)), point_family(pt(1, -1, 0))});
    CHECK_THROWS_WITH_AS(build_monomial_divisor(E, Rational(1), Rational(1), 2),
                         doctest::Contains("InvalidSingularPoint"), DomainError);
}

TEST_CASE("family validation") {
    // non-squarefree m
    CHECK_THROWS_AS(fam("t^2-2*t+1", "1", "t", "0", 1), DomainError);
    // coordinates all vanishing at a root of m
    CHECK_THROWS_AS(fam("t^2-1", "t-1", "t-1", "0", 1), DomainError);
    // family collision: (1:t:0) over t^2-1 contains (1:1:0)
    CHECK_THROWS_AS(
        make_divisor({fam("t^2-1", "1", "t", "0", 1), point_family(pt(1, 1, 0))}),
        DomainError);
    // same two points described two ways
    CHECK_THROWS_AS(
        make_divisor({fam("t^2-2", "1", "t", "0", 1), fam("t^2-2", "1", "t", "0", 1)}),
        DomainError);
    // disjoint families pass
    auto D = make_divisor({fam("t^2-2", "1", "t", "0", 1), fam("t^2+2", "1", "t", "0", 1)});
    CHECK(divisor_degree(D) == 4);
    CHECK_FALSE(families_share_point(D.families[0], D.families[1]));
    // a family never collides with itself when points are distinct
    CHECK(families_share_point(D.families[0], D.families[0]));
}

TEST_CASE("degree identity for monomial construction on random Hausdorff divisors") {
    uint64_t s = 12345;
    auto next = [&s]() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 11;
    };
    int built = 0;
    for (int trial = 0; trial < 20 && built < 10; ++trial) {
        int n = 2 + static_cast<int>(next() % 4);
        std::vector<ConjugateFamily> fams;
        std::vector<long> used;
        int got = 0;
        while (got < n) {
            long c = static_cast<long>(next() % 19) - 9;
            if (std::find(used.begin(), used.end(), c) != used.end()) continue;
            used.push_back(c);
            fams.push_back(point_family({Rational(1), Rational(c), Rational(0)}, 1));
            ++got;
        }
        EffectiveDivisor D = make_divisor(fams);
        Rational a(static_cast<long>(next() % 13) - 6, 1 + static_cast<long>(next() % 4));
        Rational b(static_cast<long>(next() % 13) - 6, 1 + static_cast<long>(next() % 4));
        if (!validate_singular_point(a, b, D)) continue;
        EffectiveDivisor M = build_monomial_divisor(D, a, b, n);
        CHECK(divisor_degree(M) == 2 * n - 1);
        ++built;
    }
    CHECK(built >= 5);
}
