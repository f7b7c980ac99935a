#include <doctest.h>

#include <cmath>

#include "heronq/correspond.hpp"
#include "heronq/families.hpp"
#include "heronq/heights.hpp"

using namespace heronq;

namespace {
bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
bool close_rel(double a, double b, double rel) {
    return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}
} // namespace

TEST_CASE("naive height") {
    CHECK(naive_height(CurvePoint::at_infinity()) == 0.0);
    CHECK(close(naive_height(CurvePoint(Rational(-196), Rational(1092))), std::log(196.0), 1e-15));
    CHECK(close(naive_height(CurvePoint(Rational(3, 7), Rational(1))), std::log(7.0), 1e-15));
    CHECK(naive_height(CurvePoint(Rational(0), Rational(0))) == 0.0);
}

TEST_CASE("canonical height on the area-216 curve") {
    auto E = EllipticCurve::from_alpha_n(Rational(-11), Rational(216));
    CurvePoint G(Rational(-196), Rational(1092));
    REQUIRE(E.contains(G));

    double h = canonical_height(E, G);
    CHECK(close(h, 2.594523704846580, 1e-12)); // x-line normalization, no 1/2

    // quadraticity: h(kP) = k^2 h(P)
    CHECK(close(canonical_height(E, E.double_point(G)), 4 * h, 1e-8));
    CHECK(close(canonical_height(E, E.scalar_mul(3, G)), 9 * h, 1e-8));
    CHECK(close(canonical_height(E, E.negate(G)), h, 1e-10));

    // agreement with the slow doubling-limit estimator
    CHECK(close(canonical_height_doubling_limit(E, G, 6), h, 1e-1));

    // torsion heights vanish exactly
    CHECK(canonical_height(E, CurvePoint(Rational(0), Rational(0))) == 0.0);
    CHECK(canonical_height(E, CurvePoint::at_infinity()) == 0.0);
    auto U = EllipticCurve::from_alpha_n(Rational(1), Rational(1));
    CHECK(canonical_height(U, CurvePoint(Rational(-1), Rational(1))) == 0.0);
    auto Z = EllipticCurve::from_alpha_n(Rational(-7), Rational(12));
    CHECK(canonical_height(Z, CurvePoint(Rational(36), Rational(180))) == 0.0);
}

TEST_CASE("pairing on the area-12 curve") {
    auto corr = quad_to_curve(Quadrilateral::make(1, 6, 3, 8));
    double h1 = canonical_height(corr.curve, corr.p1);
    double h2 = canonical_height(corr.curve, corr.p2);
    CHECK(close(h1, 1.697444350850, 1e-9));
    CHECK(close(h2, 1.571816451296, 1e-9));

    auto pm = pairing_matrix(corr.curve, {corr.p1, corr.p2});
    REQUIRE(pm.entries.size() == 2);
    CHECK(close(pm.det, 1.804590246070, 1e-9));
    CHECK(close(pm.entries[0][0], h1, 1e-12));
    CHECK(close(pm.entries[1][1], h2, 1e-12));
    CHECK(pm.entries[0][1] == pm.entries[1][0]);
    CHECK(close(pm.entries[0][1], height_pairing(corr.curve, corr.p1, corr.p2), 1e-12));
    CHECK(independent(corr.curve, {corr.p1, corr.p2}, 1e-4));

    // dependent sets
    auto pm2 = pairing_matrix(corr.curve, {corr.p1, corr.curve.double_point(corr.p1)});
    CHECK(std::fabs(pm2.det) < 1e-8);
    CHECK(!independent(corr.curve, {corr.p1, corr.curve.double_point(corr.p1)}, 1e-4));
    CHECK(!independent(corr.curve, {corr.p1, corr.curve.negate(corr.p1)}, 1e-4));

    // torsion-only singleton has a zero matrix
    auto pm1 = pairing_matrix(corr.curve, {CurvePoint(Rational(0), Rational(0))});
    CHECK(pm1.entries[0][0] == 0.0);
    CHECK(pm1.det == 0.0);

    // parallelogram law: h(P+Q) + h(P-Q) = 2h(P) + 2h(Q)
    auto S = corr.curve.add(corr.p1, corr.p2);
    auto D = corr.curve.add(corr.p1, corr.curve.negate(corr.p2));
    CHECK(close(canonical_height(corr.curve, S) + canonical_height(corr.curve, D),
                2 * h1 + 2 * h2, 1e-6));

    // Gram determinant is invariant under the unimodular change {P1,P2} -> {P1+P2,P2}
    auto pm3 = pairing_matrix(corr.curve, {S, corr.p2});
    CHECK(close_rel(pm3.det, pm.det, 1e-6));
}

TEST_CASE("height is invariant under integral rescaling") {
    auto corr = quad_to_curve(Quadrilateral::make(Rational(5, 6), 1, Rational(5, 6), 2));
    REQUIRE(corr.curve.alpha() == Rational(5, 2));
    double h = canonical_height(corr.curve, corr.p1);
    auto [ic, u] = corr.curve.integral_model();
    double hi = canonical_height(ic, EllipticCurve::scale_point(corr.p1, u));
    CHECK(close(h, hi, 1e-8));
}

TEST_CASE("regulator of the rank-3 congruent specialization") {
    auto f = family_5_1(Rational(2));
    auto pm = pairing_matrix(f.curve, f.points);
    CHECK(close_rel(pm.det, 43.6831845338168, 1e-10));
}
