#include <doctest.h>

#include "heronq/errors.hpp"
#include "heronq/quad.hpp"
#include "heronq/tables.hpp"

using namespace heronq;

TEST_CASE("construction") {
    auto q = Quadrilateral::make(1, 6, 3, 8);
    CHECK(q.a() == Rational(1));
    CHECK(q.b() == Rational(6));
    CHECK(q.c() == Rational(3));
    CHECK(q.d() == Rational(8));
    CHECK(!q.is_triangle());
    CHECK(q.semiperimeter() == Rational(9));
    CHECK(q.sides() == std::vector<Rational>{1, 6, 3, 8});
    CHECK(q.str() == "[1, 6, 3, 8]");
    CHECK(q == Quadrilateral::make(1, 6, 3, 8));

    CHECK_THROWS_AS(Quadrilateral::make(0, 1, 1, 1), InvalidInput);
    CHECK_THROWS_AS(Quadrilateral::make(1, 1, 1, -2), InvalidInput);
    // quadrilateral inequality: each side below the sum of the others
    CHECK_THROWS_AS(Quadrilateral::make(1, 1, 1, 4), InvalidInput);
    CHECK_THROWS_AS(Quadrilateral::make(1, 1, 1, 3), InvalidInput); // degenerate

    auto t = Quadrilateral::make_triangle(3, 4, 5);
    CHECK(t.is_triangle());
    CHECK(t.d().is_zero());
    CHECK_THROWS_AS(Quadrilateral::make(3, 4, 5, 0), InvalidInput);
    CHECK_THROWS_AS(Quadrilateral::make_triangle(1, 1, 2), InvalidInput);
}

TEST_CASE("Brahmagupta area") {
    CHECK(*area(Quadrilateral::make(1, 6, 3, 8)) == Rational(12));
    CHECK(*area(Quadrilateral::make(1, 1, 1, 1)) == Rational(1));
    // Heron special case via d = 0
    CHECK(*area(Quadrilateral::make_triangle(3, 4, 5)) == Rational(6));
    CHECK(*area(Quadrilateral::make_triangle(13, 14, 15)) == Rational(84));

    // cyclic but not Heron: radicand 27/16 is not a square
    auto k = Quadrilateral::make(1, 1, 1, 2);
    CHECK(brahmagupta_radicand(k) == Rational(27, 16));
    CHECK(!area(k));

    // scaling sides by t scales the area by t^2
    auto s = Quadrilateral::make(Rational(1, 2), 3, Rational(3, 2), 4);
    CHECK(*area(s) == Rational(3));
}

TEST_CASE("angle data of [1,6,3,8]") {
    auto ang = angles(Quadrilateral::make(1, 6, 3, 8));
    CHECK(ang.sin_theta == Rational(4, 5));
    CHECK(ang.cos_theta == Rational(-3, 5));
    CHECK(ang.sin_theta.squared() + ang.cos_theta.squared() == Rational(1));
    CHECK(ang.tau == Rational(2)); // tan(theta/2) = sin/(1+cos)
    CHECK(ang.tau + ang.tau.inverse() == Rational(5, 2));
    CHECK(ang.t == Rational(1, 4)); // x1/n

    auto sq = angles(Quadrilateral::make(1, 1, 1, 1));
    CHECK(sq.sin_theta == Rational(1));
    CHECK(sq.cos_theta.is_zero());
    CHECK(sq.tau == Rational(1));

    CHECK_THROWS_AS(angles(Quadrilateral::make(1, 1, 1, 2)), InvalidInput);
}

TEST_CASE("Ptolemy") {
    CHECK(diagonal_products(Quadrilateral::make(1, 6, 3, 8)) == Rational(51));
    CHECK(diagonal_products(Quadrilateral::make(1, 1, 1, 1)) == Rational(2));
}

TEST_CASE("trapezoid of prescribed area") {
    auto tr = trapezoid_with_area(Rational(2), Rational(1), Rational(16));
    CHECK(tr == Quadrilateral::make(5, 1, 5, 7));
    CHECK(*area(tr) == Rational(16));

    auto tr2 = trapezoid_with_area(Rational(3), Rational(2), Rational(72));
    CHECK(*area(tr2) == Rational(72));
    CHECK(tr2.a() == Rational(13));
    CHECK(tr2.c() == Rational(13));
    CHECK(tr2.d() - tr2.b() == Rational(10)); // 2j^2 - 2k^2

    CHECK_THROWS_AS(trapezoid_with_area(Rational(2), Rational(2), Rational(16)), InvalidInput);
    CHECK_THROWS_AS(trapezoid_with_area(Rational(1), Rational(2), Rational(16)), InvalidInput);
    // parallel side collapses: l = n/(2jk) + k^2 - j^2 <= 0
    CHECK_THROWS_AS(trapezoid_with_area(Rational(2), Rational(1), Rational(12)), InvalidInput);
}

TEST_CASE("table areas are exact") {
    for (const auto& row : table2()) {
        auto ar = area(row.sides);
        REQUIRE(ar);
        CHECK(*ar == Rational(row.n));
    }
}
