#include <doctest.h>

#include "heronq/correspond.hpp"
#include "heronq/errors.hpp"
#include "heronq/families.hpp"
#include "heronq/heights.hpp"
#include "heronq/json_io.hpp"

using namespace heronq;

TEST_CASE("rational round-trip") {
    CHECK(rational_json(Rational(-5, 9)) == Json("-5/9"));
    CHECK(rational_json(Rational(7)) == Json("7"));
    CHECK(rational_from_json(Json("22/7")) == Rational(22, 7));
    CHECK_THROWS_AS(rational_from_json(Json("x")), InvalidInput);
    CHECK_THROWS_AS(rational_from_json(Json(3)), InvalidInput); // numbers lose exactness
}

TEST_CASE("point round-trip") {
    auto j = point_json(CurvePoint(Rational(3), Rational(-5, 2)));
    CHECK(j["x"] == "3");
    CHECK(j["y"] == "-5/2");
    CHECK(point_from_json(j) == CurvePoint(Rational(3), Rational(-5, 2)));

    auto inf = point_json(CurvePoint::at_infinity());
    CHECK(inf["inf"] == true);
    CHECK(point_from_json(inf).infinity);
}

TEST_CASE("curve round-trip") {
    auto E = EllipticCurve::from_alpha_n(Rational(46), Rational(12));
    auto j = curve_json(E);
    CHECK(j["alpha"] == "46");
    CHECK(j["n"] == "12");
    CHECK(!j.contains("beta"));
    CHECK(curve_from_json(j) == E);

    // beta-form fallback when beta is not -n^2
    auto G = EllipticCurve::from_alpha_beta(Rational(1), Rational(2));
    auto k = curve_json(G);
    CHECK(k["beta"] == "2");
    CHECK(!k.contains("n"));
    CHECK(curve_from_json(k) == G);

    CHECK_THROWS_AS(curve_from_json(Json::object({{"alpha", "1"}})), InvalidInput);
}

TEST_CASE("quadrilateral round-trip") {
    auto q = Quadrilateral::make(1, 6, 3, 8);
    auto j = quad_json(q);
    CHECK(j["sides"] == Json::array({"1", "6", "3", "8"}));
    CHECK(quad_from_json(j) == q);

    // d = 0 deserializes through the triangle constructor
    auto t = Quadrilateral::make_triangle(3, 4, 5);
    CHECK(quad_from_json(quad_json(t)) == t);
    CHECK(quad_from_json(quad_json(t)).is_triangle());

    CHECK_THROWS_AS(quad_from_json(Json::object({{"sides", Json::array({"1", "2"})}})),
                    InvalidInput);
}

TEST_CASE("composite payloads") {
    auto corr = quad_to_curve(Quadrilateral::make(1, 6, 3, 8));
    auto j = correspondence_json(corr);
    CHECK(j["curve"]["alpha"] == "46");
    CHECK(j["area"] == "12");
    CHECK(j["points"][0]["x"] == "3");
    CHECK(j["points"][1]["x"] == "-18");
    CHECK(j["points"][2]["x"] == "-6");
    CHECK(j["quad"]["sides"][3] == "8");

    auto t = torsion_json(corr.curve.torsion_classify());
    CHECK(t["group"] == "Z2");
    CHECK(t["order"] == 2);

    auto f = family_json(family_6_1(Rational(3), Rational(2)), true);
    CHECK(f["family"] == "6.1");
    CHECK(f["parameters"]["u"] == "3");
    CHECK(f["parameters"]["w"] == "2");
    CHECK(f["curve"]["n"] == "90");
    CHECK(f["expected_min_rank"] == 4);
    CHECK(f["point_count"] == 4);
    CHECK(f["points"].size() == 4);
    auto f2 = family_json(family_6_1(Rational(3), Rational(2)), false);
    CHECK(!f2.contains("points"));
    CHECK(f2["point_count"] == 4);

    auto pm = pairing_matrix(corr.curve, {corr.p1, corr.p2});
    auto pj = pairing_json(pm);
    CHECK(pj["points"].size() == 2);
    CHECK(pj["matrix"].size() == 2);
    CHECK(pj["matrix"][0].size() == 2);
    CHECK(pj["det"].get<double>() == doctest::Approx(1.804590246070).epsilon(1e-9));

    auto sr = sieve_one(EllipticCurve::from_alpha_n(Rational(0), Rational(5)));
    auto sj = sieve_json(sr);
    CHECK(sj["curve"] == sr.curve_id);
    CHECK(sj["passed"] == false);
    CHECK(sj["s1"].get<double>() == doctest::Approx(sr.s1).epsilon(1e-12));
    CHECK(!sj.contains("s2"));
    CHECK(sj["bad_primes"][0] == 2);
}

TEST_CASE("round_sig") {
    CHECK(round_sig(1.0) == 1.0);
    CHECK(round_sig(0.0) == 0.0);
    CHECK(round_sig(-2.594523704846580123, 15) == -2.59452370484658);
    CHECK(round_sig(1.23456789, 3) == 1.23);
    CHECK(round_sig(12345.6789, 2) == 12000.0);
}
