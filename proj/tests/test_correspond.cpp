#include <doctest.h>

#include <vector>

#include "heronq/correspond.hpp"
#include "heronq/errors.hpp"
#include "heronq/tables.hpp"
#include "heronq/verify.hpp"

using namespace heronq;

TEST_CASE("forward map on [1,6,3,8]") {
    auto corr = quad_to_curve(Quadrilateral::make(1, 6, 3, 8));
    CHECK(corr.curve.alpha() == Rational(46));
    CHECK(*corr.curve.n() == Rational(12));
    CHECK(corr.p1 == CurvePoint(Rational(3), Rational(3)));
    CHECK(corr.p2 == CurvePoint(Rational(-18), Rational(108)));
    CHECK(corr.p3 == CurvePoint(Rational(-6), Rational(48)));
    CHECK(corr.curve.contains(corr.p1));
    CHECK(corr.curve.contains(corr.p2));
    CHECK(corr.curve.contains(corr.p3));
    CHECK(corr.curve.add(corr.curve.add(corr.p1, corr.p2), corr.p3).infinity);
    // P1 = (x1, a x1), P2 = (-q2, b q2), P3 = (-q3, d q3)
    CHECK(corr.p1.y == corr.quad.a() * corr.p1.x);
    CHECK(corr.p2.y == -corr.quad.b() * corr.p2.x);
    CHECK(corr.p3.y == -corr.quad.d() * corr.p3.x);

    CHECK_THROWS_AS(quad_to_curve(Quadrilateral::make(1, 1, 1, 2)), InvalidInput); // not Heron
}

TEST_CASE("forward map in triangle mode") {
    auto corr = quad_to_curve(Quadrilateral::make_triangle(3, 4, 5));
    CHECK(corr.curve.alpha().is_zero());
    CHECK(*corr.curve.n() == Rational(6));
    CHECK(corr.p3.y.is_zero()); // d = 0 lands P3 in the 2-torsion
    CHECK(corr.curve.add(corr.curve.add(corr.p1, corr.p2), corr.p3).infinity);
}

TEST_CASE("forward map relations hold across table labelings") {
    for (const auto& row : table2()) {
        for (const auto& lab : dihedral_labelings(row.sides)) {
            auto corr = quad_to_curve(lab);
            CHECK(*corr.curve.n() == Rational(row.n));
            CHECK(corr.curve.contains(corr.p1));
            CHECK(corr.curve.contains(corr.p2));
            CHECK(corr.curve.contains(corr.p3));
            CHECK(corr.curve.add(corr.curve.add(corr.p1, corr.p2), corr.p3).infinity);
        }
    }
}

TEST_CASE("side-recovery quartic of the area-12 curve") {
    auto corr = quad_to_curve(Quadrilateral::make(1, 6, 3, 8));
    auto quartic = quartic_of(corr.curve, corr.p1);
    CHECK(quartic.a_side() == Rational(1));
    CHECK(quartic.zeta() == Rational(51)); // (x1^2 + n^2)/x1
    CHECK(quartic.n_squared() == Rational(144));
    CHECK(quartic.rhs(Rational(0)) == Rational(2692)); // z^2 = b^4 - 92 b^2 + 2692
    CHECK(quartic.contains(Rational(6), Rational(26)));
    CHECK(quartic.contains(-quartic.a_side(), quartic.zeta())); // base point
    CHECK(!quartic.contains(Rational(6), Rational(25)));

    auto rec = sides_from_quartic_point(quartic, corr.curve, corr.p1, Rational(6), Rational(26),
                                        Branch::Minus);
    REQUIRE(rec);
    CHECK(*rec == Quadrilateral::make(1, 6, 3, 8));
    // plus branch gives a negative side here
    CHECK(!sides_from_quartic_point(quartic, corr.curve, corr.p1, Rational(6), Rational(26),
                                    Branch::Plus));
    // b = +-a divides by zero
    CHECK_THROWS_AS(sides_from_quartic_point(quartic, corr.curve, corr.p1, -quartic.a_side(),
                                             quartic.zeta(), Branch::Minus),
                    InvalidInput);

    // P1 must be affine, positive, of order > 2
    CHECK_THROWS_AS(quartic_of(corr.curve, CurvePoint(Rational(0), Rational(0))), InvalidInput);
    CHECK_THROWS_AS(quartic_of(corr.curve, CurvePoint::at_infinity()), InvalidInput);
}

TEST_CASE("birational map fixtures") {
    auto corr = quad_to_curve(Quadrilateral::make(1, 6, 3, 8));
    auto quartic = quartic_of(corr.curve, corr.p1);

    auto img = quartic_point_to_curve(quartic, Rational(6), Rational(26));
    CHECK(img == CurvePoint(Rational(24), Rational(192)));
    CHECK(corr.curve.contains(img));
    CHECK(quartic_point_to_curve(quartic, Rational(6), Rational(-26)) ==
          CurvePoint(Rational(-150, 49), Rational(-9960, 343)));
    CHECK(quartic_point_to_curve(quartic, Rational(-6), Rational(-26)) == corr.p3);
    CHECK(quartic_point_to_curve(quartic, Rational(-8), Rational(-30)) == corr.p2);
    CHECK(quartic_point_to_curve(quartic, Rational(1), Rational(-51)) ==
          CurvePoint(Rational(0), Rational(0)));
    CHECK(quartic_point_to_curve(quartic, Rational(1), Rational(51)) ==
          CurvePoint(Rational(2601, 4), Rational(137241, 8)));
    // base point to infinity, conjugate of the base point to a finite image
    CHECK(quartic_point_to_curve(quartic, -quartic.a_side(), quartic.zeta()).infinity);
    CHECK(quartic_point_to_curve(quartic, Rational(-1), Rational(-51)) ==
          CurvePoint(Rational(-64, 289), Rational(28704, 4913)));
    CHECK_THROWS_AS(quartic_point_to_curve(quartic, Rational(6), Rational(27)), InvalidInput);
}

TEST_CASE("birational map round-trips") {
    auto corr = quad_to_curve(Quadrilateral::make(1, 6, 3, 8));
    auto quartic = quartic_of(corr.curve, corr.p1);

    const std::vector<std::pair<Rational, Rational>> samples = {
        {Rational(6), Rational(26)},  {Rational(6), Rational(-26)}, {Rational(-6), Rational(26)},
        {Rational(-6), Rational(-26)}, {Rational(8), Rational(30)},  {Rational(8), Rational(-30)},
        {Rational(-8), Rational(-30)}, {Rational(1), Rational(51)},  {Rational(1), Rational(-51)},
        {Rational(-1), Rational(-51)}};
    for (const auto& [b, z] : samples) {
        REQUIRE(quartic.contains(b, z));
        auto P = quartic_point_to_curve(quartic, b, z);
        CHECK(corr.curve.contains(P));
        auto back = curve_point_to_quartic(quartic, P);
        REQUIRE(back);
        CHECK(back->first == b);
        CHECK(back->second == z);
    }
    auto base = curve_point_to_quartic(quartic, CurvePoint::at_infinity());
    REQUIRE(base);
    CHECK(base->first == -quartic.a_side());
    CHECK(base->second == quartic.zeta());

    // sample along the group: pull back k P1 (+ twists by (0,0)) and map forward
    int mapped = 0;
    CurvePoint T(Rational(0), Rational(0));
    for (long k = 1; k <= 12 && mapped < 20; ++k) {
        for (const CurvePoint& R :
             {corr.curve.scalar_mul(k, corr.p1),
              corr.curve.add(corr.curve.scalar_mul(k, corr.p1), T),
              corr.curve.add(corr.curve.scalar_mul(k, corr.p1), corr.p2)}) {
            auto bz = curve_point_to_quartic(quartic, R);
            if (!bz) continue; // finitely many points have no affine preimage
            CHECK(quartic.contains(bz->first, bz->second));
            CHECK(quartic_point_to_curve(quartic, bz->first, bz->second) == R);
            ++mapped;
        }
    }
    CHECK(mapped >= 20);
}

TEST_CASE("reverse search on the area-12 curve") {
    auto corr = quad_to_curve(Quadrilateral::make(1, 6, 3, 8));
    auto quad = curve_to_quad(corr.curve, {corr.p1, corr.p2});
    auto ar = area(quad);
    REQUIRE(ar);
    CHECK(*ar == Rational(12));
    Rational alpha =
        (quad.a().squared() + quad.b().squared() - quad.c().squared() + quad.d().squared()) / 2;
    CHECK(alpha == Rational(46));

    CHECK_THROWS_AS(curve_to_quad(corr.curve, {}, 10), InvalidInput);

    // rank-0 curve with only 2-torsion available: the search must exhaust,
    // never fabricate (n = 1 is not a congruent number)
    auto C1 = EllipticCurve::from_alpha_n(Rational(0), Rational(1));
    CHECK_THROWS_AS(curve_to_quad(C1, {CurvePoint(Rational(1), Rational(0))}), SearchExhausted);
}

TEST_CASE("congruent quadrilaterals") {
    struct Fixture {
        long n;
        CurvePoint gen;
    };
    const std::vector<Fixture> fixtures = {{5, CurvePoint(Rational(-4), Rational(6))},
                                           {6, CurvePoint(Rational(-2), Rational(8))},
                                           {6, CurvePoint(Rational(12), Rational(36))},
                                           {7, CurvePoint(Rational(25), Rational(120))}};
    for (const auto& f : fixtures) {
        auto q = congruent_quad(Rational(f.n), f.gen);
        auto ar = area(q);
        REQUIRE(ar);
        CHECK(*ar == Rational(f.n));
        CHECK(q.a().squared() + q.b().squared() + q.d().squared() == q.c().squared());
    }
    // generator must lie on y^2 = x^3 - n^2 x
    CHECK_THROWS_AS(congruent_quad(Rational(5), CurvePoint(Rational(2), Rational(3))), InvalidInput);
}

TEST_CASE("round-trip preserves the curve across table rows") {
    int done = 0;
    for (const auto& row : table2()) {
        if (++done > 12) break; // the acceptance harness runs the wide version
        auto corr = quad_to_curve(row.sides);
        auto quad = curve_to_quad(corr.curve, {corr.p1, corr.p2});
        auto corr2 = quad_to_curve(quad);
        CHECK(corr2.curve.alpha() == corr.curve.alpha());
        CHECK(*corr2.curve.n() == *corr.curve.n());
    }
}
