#include "heronq/families.hpp"

#include <optional>
#include <string>
#include <utility>

#include "heronq/correspond.hpp"
#include "heronq/errors.hpp"

namespace heronq {

namespace {

// Lift a promised x-coordinate to the point (x, +sqrt(x³+αx²+βx)).  The
// family constructions guarantee the radicand is a rational square for every
// admissible parameter, so a failure here is an internal error, not bad
// input.
CurvePoint lift(const EllipticCurve& E, const Rational& x, const char* who) {
    Rational y2 = ((x + E.alpha()) * x + E.beta()) * x;
    auto y = y2.sqrt();
    if (!y)
        throw Error(std::string(who) + ": x = " + x.str() +
                    " does not lift to a rational point on " + E.str());
    return CurvePoint(x, *y);
}

std::optional<CurvePoint> try_lift(const EllipticCurve& E, const Rational& x) {
    Rational y2 = ((x + E.alpha()) * x + E.beta()) * x;
    auto y = y2.sqrt();
    if (!y) return std::nullopt;
    return CurvePoint(x, *y);
}

Rational abs_value(const Rational& r) { return r.abs(); }

} // namespace

CongruentSeed congruent_seed(const Rational& z) {
    if (z.is_zero() || z == Rational(1) || z == Rational(-1))
        throw InvalidInput("congruent_seed: z must avoid {0, ±1} (area z(z²−1) vanishes)");
    Rational n = abs_value(z * (z * z - 1));
    auto E = EllipticCurve::from_alpha_n(Rational(0), n);
    Rational z2 = z * z;
    CurvePoint p1((z2 + 1).squared() / 4,
                  (z2 + 1) * (z2 + 2 * z - 1) * (z2 - 2 * z - 1) / 8);
    CurvePoint p2(-z * (z - 1).squared(), 2 * z2 * (z - 1).squared());
    if (!E.contains(p1) || !E.contains(p2))
        throw Error("congruent_seed: constructed points left the curve");
    return CongruentSeed{E, p1, p2};
}

FamilyInstance family_5_1(const Rational& w) {
    if (w.is_zero() || w == Rational(1) || w == Rational(-1))
        throw InvalidInput("family 5.1: w must avoid {0, ±1}");
    Rational A = w * w + 2 * w - 1;
    Rational B = w * w - 2 * w - 1;
    Rational C = w.pow(4) + 1;
    Rational D = w.pow(4) + 6 * w * w + 1;
    Rational n = abs_value(6 * A * B * C * D);
    if (n.is_zero()) throw InvalidInput("family 5.1: degenerate w (area vanishes)");
    auto E = EllipticCurve::from_alpha_n(Rational(0), n);
    // The construction proceeds through the rank-1 pencil n = z(z²−1), the
    // substitution z = (2t²+1)/3, and finally t = (w²−1)/(2w); each
    // substitution rescales n by a square, and the x-coordinates below carry
    // the full rescaling so that all three land on y² = x³ − n²x.
    Rational x1 = -6 * C * A.squared() * B.squared();
    Rational x2 = 12 * C.squared() * D;
    Rational x3 = -3 * A * B * D.squared();
    std::vector<CurvePoint> pts{lift(E, x1, "family 5.1"), lift(E, x2, "family 5.1"),
                                lift(E, x3, "family 5.1")};
    return FamilyInstance{"5.1", {{"w", w}}, E, std::move(pts), 3};
}

bool AuxCurve::contains(const CurvePoint& P) const { return cubic_contains(a2, a4, a6, P); }

CurvePoint AuxCurve::mul(long k) const { return cubic_scalar_mul(a2, a4, a6, k, generator); }

AuxCurve aux_5_2a() {
    return AuxCurve{Rational(58), Rational(1440), Rational(12960),
                    CurvePoint(Rational(-12), Rational(48))};
}

AuxCurve aux_5_2b_short() {
    return AuxCurve{Rational(155), Rational(7500), Rational(112500),
                    CurvePoint(Rational(50), Rational(1000))};
}

FamilyInstance family_5_2a(const Rational& x, const Rational& y) {
    if (x.is_zero()) throw InvalidInput("family 5.2a: x = 0 has no parameter image");
    AuxCurve aux = aux_5_2a();
    if (!aux.contains(CurvePoint(x, y)))
        throw InvalidInput("family 5.2a: (x, y) is not on y² = x³ + 58x² + 1440x + 12960");
    Rational t = -(x + 36) / x;
    Rational t2 = t * t;
    Rational n = abs_value(3 * (t2 - 1) * (t2 + 2) * (2 * t2 + 1));
    if (n.is_zero()) throw InvalidInput("family 5.2a: degenerate parameter t = ±1 (area vanishes)");
    auto E = EllipticCurve::from_alpha_n(Rational(0), n);
    // First two points come from the underlying two-stage congruent pencil;
    // the third is the alternative divisor choice, rational exactly when
    // 10t⁴ − 2t² − 8 is a square, which the auxiliary curve parameterizes
    // (s = 36y/x²).
    Rational xa = -3 * (2 * t2 + 1) * (t2 - 1).squared();
    Rational xb = 3 * (t2 + 2) * (2 * t2 + 1).squared();
    Rational xc = 6 * (t2 - 1) * (2 * t2 + 1).squared();
    std::vector<CurvePoint> pts{lift(E, xa, "family 5.2a"), lift(E, xb, "family 5.2a"),
                                lift(E, xc, "family 5.2a")};
    return FamilyInstance{"5.2a", {{"x", x}, {"y", y}, {"t", t}}, E, std::move(pts), 3};
}

bool aux_5_2b_contains(const Rational& x, const Rational& y) {
    Rational lhs = y * y - 20 * x * y - 1200 * y;
    Rational rhs = ((x + 55) * x - 4500) * x - 247500;
    return lhs == rhs;
}

CurvePoint aux_5_2b_long_of_short(const CurvePoint& P) {
    if (P.infinity) return P;
    return CurvePoint(P.x, P.y + 10 * P.x + 600);
}

FamilyInstance family_5_2b(const Rational& x, const Rational& y) {
    if (!aux_5_2b_contains(x, y))
        throw InvalidInput("family 5.2b: (x, y) is not on y² − 20xy − 1200y = x³ + 55x² − 4500x − 247500");
    if (y.is_zero()) throw InvalidInput("family 5.2b: y = 0 has no parameter image");
    Rational t = (30 * x + 1650) / y - 2;
    Rational t2 = t * t;
    Rational n = abs_value(2 * t * (t2 - 4) * (4 * t2 - 1) * (t2 + 1) * (t2 * t2 + 7 * t2 + 1));
    if (n.is_zero())
        throw InvalidInput("family 5.2b: degenerate parameter t ∈ {0, ±2, ±1/2} (area vanishes)");
    if (t == Rational(1) || t == Rational(-1))
        throw InvalidInput("family 5.2b: t = ±1 collapses the first point onto 2-torsion");
    // Every auxiliary point makes 5t⁴ + 35t² + 5 a square; the third
    // coordinate's lift depends on it.
    if (!(5 * t2 * t2 + 35 * t2 + 5).is_square())
        throw Error("family 5.2b: 5t⁴+35t²+5 failed to be square on an auxiliary point");
    auto E = EllipticCurve::from_alpha_n(Rational(0), n);
    Rational q = t2 * t2 + 7 * t2 + 1;
    Rational x1 = ((1 + t2) * q).squared();
    Rational x2 = -9 * (t + 2) * (1 + 2 * t) * (1 - 2 * t) * (2 - t) * t2 * (1 + t2).squared();
    Rational x3 = -2 * t * (1 - 2 * t).squared() * (2 - t).squared() * (1 + t2) * q;
    std::vector<CurvePoint> pts{lift(E, x1, "family 5.2b"), lift(E, x2, "family 5.2b"),
                                lift(E, x3, "family 5.2b")};
    return FamilyInstance{"5.2b", {{"x", x}, {"y", y}, {"t", t}}, E, std::move(pts), 3};
}

namespace {

// Shared core of families 6.1/6.2 after w has been fixed.  Returns the curve
// plus the three unconditional points.
struct UWCore {
    EllipticCurve curve;
    Rational x4; // the conditional coordinate, before the sign choice
    std::vector<CurvePoint> points;
};

UWCore uw_core(const Rational& u, const Rational& w, const char* who) {
    Rational um1 = u - 1;
    Rational w2 = w * w, w4 = w2 * w2;
    Rational alpha = 4 * (w4 + 1) * um1.squared() +
                     w2 * (u.pow(4) - 4 * u.pow(3) + 12 * u * u - 16 * u + 8);
    Rational n = abs_value((w4 - 1) * u * (u - 2) * um1);
    auto E = EllipticCurve::from_alpha_n(alpha, n);
    Rational x1 = -(w - 1).squared() * (w + 1).squared() * u * u * um1;
    Rational x2 = -u * u * w2 * (u - 2).squared();
    Rational x3 = -4 * (w2 + 1).squared() * um1.squared();
    std::vector<CurvePoint> pts{lift(E, x1, who), lift(E, x2, who), lift(E, x3, who)};
    return UWCore{E, (w4 - 1) * u * u * um1, std::move(pts)};
}

// |w|, inverted into [1, ∞): E_{u,−w} and E_{u,1/w} are the same curve.
Rational canonical_w(const Rational& w) {
    Rational c = w.abs();
    if (c < Rational(1)) c = c.inverse();
    return c;
}

} // namespace

FamilyInstance family_6_1(const Rational& u, const Rational& w) {
    if (u.is_zero() || u == Rational(1) || u == Rational(2))
        throw InvalidInput("family 6.1: u must avoid {0, 1, 2}");
    if (w.is_zero()) throw InvalidInput("family 6.1: w must avoid {0, ±1}");
    Rational wc = canonical_w(w);
    if (wc == Rational(1)) throw InvalidInput("family 6.1: w must avoid {0, ±1}");
    UWCore core = uw_core(u, wc, "family 6.1");
    int rank = 3;
    // The fourth coordinate is rational only on the w(m) slice; include it
    // (either sign — the w → 1/w normalization swaps the two) when the lift
    // happens to exist.
    if (auto P = try_lift(core.curve, core.x4)) {
        core.points.push_back(*P);
        rank = 4;
    } else if (auto M = try_lift(core.curve, -core.x4)) {
        core.points.push_back(*M);
        rank = 4;
    }
    return FamilyInstance{"6.1", {{"u", u}, {"w", wc}}, core.curve, std::move(core.points), rank};
}

Rational family_6_1_w_of_m(const Rational& u, const Rational& m) {
    if (u == Rational(1)) throw InvalidInput("w(m): u = 1 is degenerate");
    Rational um1 = u - 1;
    Rational den = um1 * m * m - 8 * um1.pow(3);
    if (den.is_zero()) throw InvalidInput("w(m): parameter pole m² = 8(u−1)²");
    return (m * m + 2 * um1 * (u * u - 2 * u + 4) * m + 8 * um1.squared()) / den;
}

FamilyInstance family_6_2(const Rational& u) {
    if (u.is_zero() || u == Rational(1) || u == Rational(2))
        throw InvalidInput("family 6.2: u must avoid {0, 1, 2}");
    Rational um1 = u - 1;
    Rational g = u * u - 2 * u + 4;        // no rational roots
    Rational h = 3 * u * u - 6 * u + 4;    // no rational roots
    Rational m = -4 * um1 *
                 (u.pow(8) - 8 * u.pow(7) + 34 * u.pow(6) - 92 * u.pow(5) + 178 * u.pow(4) -
                  248 * u.pow(3) + 232 * u * u - 128 * u + 32) /
                 (g * h.squared());
    // The defining quartic in m: its leading coefficient is the square h²,
    // which is what makes the tangent-method choice of m land on a square.
    Rational e = u.pow(4) - 4 * u.pow(3) + 12 * u * u - 16 * u + 8;
    Rational c4 = h.squared();
    Rational c3 = 4 * um1 * g * e;
    Rational c2 = 4 * um1.squared() *
                  (u.pow(8) - 8 * u.pow(7) + 40 * u.pow(6) - 128 * u.pow(5) + 268 * u.pow(4) -
                   368 * u.pow(3) + 400 * u * u - 320 * u + 128);
    Rational c1 = 32 * um1.pow(3) * g * e;
    Rational c0 = 64 * um1.pow(4) * h.squared();
    Rational quartic = (((c4 * m + c3) * m + c2) * m + c1) * m + c0;
    if (!quartic.is_square())
        throw Error("family 6.2: quartic in m is not a square at the tangent-method parameter");
    Rational w = family_6_1_w_of_m(u, m);
    if (w.is_zero() || w.abs() == Rational(1))
        throw InvalidInput("family 6.2: u lands on a degenerate w");
    Rational wc = canonical_w(w);
    UWCore core = uw_core(u, wc, "family 6.2");
    core.points.push_back(lift(core.curve, core.x4, "family 6.2"));
    core.points.push_back(lift(core.curve, -core.x4, "family 6.2"));
    return FamilyInstance{
        "6.2", {{"u", u}, {"m", m}, {"w", wc}}, core.curve, std::move(core.points), 5};
}

FamilyInstance family_rectangle(const Rational& m) {
    if (!(m > Rational(2))) throw InvalidInput("rectangle family: m > 2 required");
    Rational m2 = m * m;
    Rational alpha = (m2 - 4).squared();
    Rational n = 2 * m * (m2 - 4);
    auto E = EllipticCurve::from_alpha_n(alpha, n);
    // Full rational 2-torsion and nothing else is promised.
    std::vector<CurvePoint> pts = E.two_torsion();
    return FamilyInstance{"rectangle", {{"m", m}}, E, std::move(pts), 0};
}

FamilyInstance family_z2z4(const Rational& u, const Rational& v) {
    if (u.is_zero() || v.is_zero() || u == v || u == -v)
        throw InvalidInput("z2z4 family: need u, v nonzero and u ≠ ±v");
    Rational u2 = u * u, v2 = v * v;
    Rational alpha = u2 * u2 - 6 * u2 * v2 + v2 * v2;
    Rational n = abs_value(2 * u * v * (u2 - v2));
    auto E = EllipticCurve::from_alpha_n(alpha, n);
    CurvePoint T(2 * u * v * (u + v).squared(), 2 * u * v * (u2 + v2) * (u + v).squared());
    if (!E.contains(T)) throw Error("z2z4 family: marked point left the curve");
    if (E.point_order(T) != 4) throw Error("z2z4 family: marked point is not of order 4");
    return FamilyInstance{"z2z4", {{"u", u}, {"v", v}}, E, {T}, 0};
}

Quadrilateral family_a2b2d2(const Rational& p, const Rational& q) {
    Rational s = p * p + q * q;
    Quadrilateral quad = Quadrilateral::make(s - 1, 2 * p, s + 1, 2 * q);
    Rational a = quad.a(), b = quad.b(), c = quad.c(), d = quad.d();
    if (a * a + b * b + d * d != c * c)
        throw Error("a2b2d2 family: defining identity failed"); // unreachable
    return quad;
}

FamilyInstance family_trapezoid(const Rational& j, const Rational& k, const Rational& n) {
    Quadrilateral quad = trapezoid_with_area(j, k, n);
    Correspondence corr = quad_to_curve(quad);
    // Positive rank is guaranteed unless three sides are equal (the two
    // parallel sides are quad.b() and quad.d(); the legs are equal always).
    bool three_equal = quad.b() == quad.a() || quad.d() == quad.a();
    std::vector<CurvePoint> pts{corr.p1, corr.p2, corr.p3};
    return FamilyInstance{"trapezoid",
                          {{"j", j}, {"k", k}, {"n", n}},
                          corr.curve,
                          std::move(pts),
                          three_equal ? 0 : 1};
}

namespace {

const Rational& need(const std::vector<std::pair<std::string, Rational>>& params,
                     const char* key, const std::string& fam) {
    for (const auto& [k, v] : params)
        if (k == key) return v;
    throw InvalidInput("family " + fam + ": missing parameter '" + key + "'");
}

} // namespace

FamilyInstance make_family(const std::string& name,
                           const std::vector<std::pair<std::string, Rational>>& params) {
    if (name == "5.1") return family_5_1(need(params, "w", name));
    if (name == "5.2a") return family_5_2a(need(params, "x", name), need(params, "y", name));
    if (name == "5.2b") return family_5_2b(need(params, "x", name), need(params, "y", name));
    if (name == "6.1") return family_6_1(need(params, "u", name), need(params, "w", name));
    if (name == "6.2") return family_6_2(need(params, "u", name));
    if (name == "rectangle") return family_rectangle(need(params, "m", name));
    if (name == "z2z4") return family_z2z4(need(params, "u", name), need(params, "v", name));
    if (name == "trapezoid")
        return family_trapezoid(need(params, "j", name), need(params, "k", name),
                                need(params, "n", name));
    if (name == "a2b2d2") {
        Quadrilateral quad = family_a2b2d2(need(params, "p", name), need(params, "q", name));
        if (!area(quad))
            throw InvalidInput("family a2b2d2: quadrilateral at these parameters is not Heron");
        Correspondence corr = quad_to_curve(quad);
        return FamilyInstance{"a2b2d2", params, corr.curve, {corr.p1, corr.p2, corr.p3}, 0};
    }
    throw InvalidInput("unknown family '" + name + "'");
}

} // namespace heronq
