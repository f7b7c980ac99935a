#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heronq/curve.hpp"
#include "heronq/quad.hpp"

namespace heronq {

// A parameterized curve plus the rational points its construction promises.
// expected_min_rank counts the independent infinite-order points the
// construction is built to supply; the torsion showcases list torsion points
// and claim 0.
struct FamilyInstance {
    std::string family; // "5.1","5.2a","5.2b","6.1","6.2","trapezoid","rectangle","z2z4","a2b2d2"
    std::vector<std::pair<std::string, Rational>> parameters;
    EllipticCurve curve;
    std::vector<CurvePoint> points;
    int expected_min_rank = 0;
};

// Rank-1 pencil behind the congruent constructions: on y² = x³ − (z(z²−1))²x
// the points p1 = ((z²+1)²/4, ·) and p2 = (−z(z−1)², ·) satisfy p1 = −2·p2,
// so they span a single infinite-order class.
struct CongruentSeed {
    EllipticCurve curve;
    CurvePoint p1, p2;
};
CongruentSeed congruent_seed(const Rational& z);

// Congruent curve y² = x³ − n²x with
//   n = |6(w²+2w−1)(w²−2w−1)(w⁴+1)(w⁴+6w²+1)|
// and three independent points; w ∉ {0, ±1}.
FamilyInstance family_5_1(const Rational& w);

// Rank-1 auxiliary curve y² = x³ + a2·x² + a4·x + a6 whose rational points
// parameterize a congruent family below.
struct AuxCurve {
    Rational a2, a4, a6;
    CurvePoint generator;

    bool contains(const CurvePoint& P) const;
    CurvePoint mul(long k) const; // k · generator
};
AuxCurve aux_5_2a();       // y² = x³ + 58x² + 1440x + 12960, generator (−12, 48)
AuxCurve aux_5_2b_short(); // y² = x³ + 155x² + 7500x + 112500, generator (50, 1000)

// (x,y) on aux_5_2a with x ≠ 0 gives t = −(x+36)/x and the congruent curve
// of area n = |3(t²−1)(t²+2)(2t²+1)| with three points.
FamilyInstance family_5_2a(const Rational& x, const Rational& y);

// family_5_2b reads its input on the long Weierstrass form
//   y² − 20xy − 1200y = x³ + 55x² − 4500x − 247500,
// which is aux_5_2b_short() under y_long = y_short + 10·x + 600.
bool aux_5_2b_contains(const Rational& x, const Rational& y);
CurvePoint aux_5_2b_long_of_short(const CurvePoint& P);

// (x,y) on the long form with y ≠ 0 gives t = (30x+1650)/y − 2 and the
// congruent curve of area n = |2t(t²−4)(4t²−1)(t²+1)(t⁴+7t²+1)| with three
// points; the third needs 5t⁴+35t²+5 to be a square, which holds for every
// point of the auxiliary curve and is asserted.
FamilyInstance family_5_2b(const Rational& x, const Rational& y);

// Curve E_{u,w}: y² = x³ + αx² − n²x with
//   α = u⁴w² + 4w⁴ − 8w⁴u + 4w⁴u² + 8w² − 16w²u + 12w²u² + 4 − 8u + 4u² − 4w²u³
//   n = |(w⁴−1)·u(u−2)(u−1)|
// and three unconditional points; a fourth at x₄ = ±(w⁴−1)u²(u−1) is included
// when its y² is a rational square.  u ∉ {0,1,2}, w ∉ {0,±1}.  E_{u,−w} and
// E_{u,1/w} coincide with E_{u,w}, so w is canonicalized to |w| ≥ 1 first.
FamilyInstance family_6_1(const Rational& u, const Rational& w);

// The substitution making x₄ automatically rational:
//   w = (m² + 2(u−1)(u²−2u+4)m + 8(u−1)²) / ((u−1)m² − 8(u−1)³).
Rational family_6_1_w_of_m(const Rational& u, const Rational& m);

// Five-point subfamily of family_6_1: choose m = m(u) by Fermat's tangent
// method (Dickson, History of the Theory of Numbers II, p. 639) so that a
// quartic in m with square leading coefficient becomes a square, making both
// x₄ and x₅ = −x₄ rational.  The quartic value is asserted square.
FamilyInstance family_6_2(const Rational& u);

// Rectangle 2m × (m²−4), m > 2: curve y² = x(x + m⁴−4m²)(x − 4m²+16), full
// rational 2-torsion, no promised infinite-order point.
FamilyInstance family_rectangle(const Rational& m);

// α = u⁴ − 6u²v² + v⁴, n = |2uv(u²−v²)|: torsion Z2xZ4 exhibited by the
// order-4 point (2uv(u+v)², 2uv(u²+v²)(u+v)²); u,v ≠ 0, u ≠ ±v.
FamilyInstance family_z2z4(const Rational& u, const Rational& v);

// Classical parameterization of a² + b² + d² = c²:
//   (a,b,c,d) = (p²+q²−1, 2p, p²+q²+1, 2q)
// (the r of the homogeneous form scaled to 1).  Sides must be positive; the
// area is rational iff (p+q+1)(p²+q²−p+q)(p+q−1)(p²+q²+p−q) is a square.
Quadrilateral family_a2b2d2(const Rational& p, const Rational& q);

// Isosceles trapezoid of exact area n (see trapezoid_with_area) together
// with its correspondence curve and points.
FamilyInstance family_trapezoid(const Rational& j, const Rational& k, const Rational& n);

// By-name dispatch used by the CLI; throws InvalidInput for unknown names or
// missing parameters.  "a2b2d2" is only accepted when the quadrilateral is
// Heron (the bare quadrilateral is available via family_a2b2d2).
FamilyInstance make_family(const std::string& name,
                           const std::vector<std::pair<std::string, Rational>>& params);

} // namespace heronq
