#include "heronq/correspond.hpp"

#include <algorithm>

#include "heronq/errors.hpp"

namespace heronq {

Correspondence quad_to_curve(const Quadrilateral& q) {
    auto n = area(q);
    if (!n) throw InvalidInput("quadrilateral has irrational area; no E_{alpha,-n^2} attached");
    if (!n->is_positive()) throw InvalidInput("degenerate quadrilateral of zero area");
    const Rational &a = q.a(), &b = q.b(), &c = q.c(), &d = q.d();
    Rational alpha = (a.squared() + b.squared() - c.squared() + d.squared()) / Rational(2);
    Rational x1 = ((a + c).squared() - (b - d).squared()) / Rational(4);
    Rational q2 = ((a + d).squared() - (b - c).squared()) / Rational(4);
    Rational q3 = ((a + b).squared() - (c - d).squared()) / Rational(4);
    EllipticCurve curve = EllipticCurve::from_alpha_n(alpha, *n);
    Correspondence out{curve, CurvePoint(x1, a * x1), CurvePoint(-q2, b * q2),
                       CurvePoint(-q3, d * q3), q};
    for (const CurvePoint* P : {&out.p1, &out.p2, &out.p3})
        if (!curve.contains(*P)) throw Error("internal: correspondence point off the curve");
    if (!curve.add(curve.add(out.p1, out.p2), out.p3).infinity)
        throw Error("internal: correspondence points do not sum to infinity");
    return out;
}

QuarticCurve::QuarticCurve(Rational alpha, Rational a_side, Rational zeta)
    : alpha_(std::move(alpha)), a_(std::move(a_side)), zeta_(std::move(zeta)) {}

Rational QuarticCurve::n_squared() const {
    return (zeta_.squared() - (a_.squared() - alpha_).squared()) / Rational(4);
}

Rational QuarticCurve::rhs(const Rational& b) const {
    Rational b2 = b.squared();
    return b2.squared() - Rational(2) * alpha_ * b2 + zeta_.squared() - a_.squared().squared() +
           Rational(2) * a_.squared() * alpha_;
}

bool QuarticCurve::contains(const Rational& b, const Rational& z) const {
    return z.squared() == rhs(b);
}

QuarticCurve quartic_of(const EllipticCurve& curve, const CurvePoint& P1) {
    if (!curve.n()) throw InvalidInput("curve is not in E_{alpha,-n^2} form");
    if (P1.infinity || P1.y.is_zero()) throw InvalidInput("P1 must have order greater than 2");
    if (!P1.x.is_positive() || !P1.y.is_positive())
        throw InvalidInput("P1 must have positive coordinates");
    if (!curve.contains(P1)) throw InvalidInput("P1 is not on the curve");
    Rational a = P1.y / P1.x;
    Rational zeta = (P1.x.squared() + curve.n()->squared()) / P1.x;
    return QuarticCurve(curve.alpha(), a, zeta);
}

std::optional<Quadrilateral> sides_from_quartic_point(const QuarticCurve& quartic,
                                                      const EllipticCurve& curve,
                                                      const CurvePoint& P1, const Rational& b,
                                                      const Rational& z, Branch branch) {
    QuarticCurve check = quartic_of(curve, P1);
    if (check.alpha() != quartic.alpha() || check.a_side() != quartic.a_side() ||
        check.zeta() != quartic.zeta())
        throw InvalidInput("quartic does not belong to (curve, P1)");
    if (!quartic.contains(b, z)) throw InvalidInput("(b,z) is not on the quartic");
    const Rational &a = quartic.a_side(), &zeta = quartic.zeta();
    if (b == a || b == -a) throw InvalidInput("b = +/-a: side recovery divides by zero");
    Rational s(branch == Branch::Plus ? 1 : -1);
    Rational den = a.squared() - b.squared();
    Rational c = (a * zeta + s * b * z) / den;
    Rational d = -(b * zeta + s * a * z) / den;
    if (!b.is_positive() || !c.is_positive() || !d.is_positive()) return std::nullopt;
    try {
        return Quadrilateral::make(a, b, c, d);
    } catch (const InvalidInput&) {
        return std::nullopt;
    }
}

namespace {

struct QuarticMapCoeffs {
    Rational q1, q2, q3, zeta, alpha, a;
};

QuarticMapCoeffs map_coeffs(const QuarticCurve& q) {
    const Rational &a = q.a_side(), &alpha = q.alpha();
    return {Rational(-4) * a,
            Rational(6) * a.squared() - Rational(2) * alpha,
            Rational(4) * a * (alpha - a.squared()),
            q.zeta(), alpha, a};
}

} // namespace

CurvePoint quartic_point_to_curve(const QuarticCurve& quartic, const Rational& b, const Rational& z) {
    if (!quartic.contains(b, z)) throw InvalidInput("(b,z) is not on the quartic");
    auto [q1, q2, q3, zeta, alpha, a] = map_coeffs(quartic);
    Rational B = b + a;
    Rational X, Yp;
    if (B.is_zero()) {
        if (z == zeta) return CurvePoint::at_infinity(); // base point
        // conjugate point (−a, −ζ): limit of the general formulas
        X = q3.squared() / (Rational(4) * zeta.squared()) - q2;
        Yp = -q1 * zeta + q2 * q3 / (Rational(2) * zeta) -
             q3.pow(3) / (Rational(8) * zeta.pow(3));
    } else {
        Rational B2 = B.squared();
        X = (Rational(2) * zeta * (z + zeta) + q3 * B) / B2;
        Rational Yg = (Rational(4) * zeta.squared() * (z + zeta) + Rational(2) * zeta * (q3 * B + q2 * B2) -
                       q3.squared() * B2 / (Rational(2) * zeta)) /
                      (B2 * B);
        Yp = Yg + q3 * X / (Rational(2) * zeta) + q1 * zeta;
    }
    return {(X - Rational(2) * (alpha - a.squared())) / Rational(4), Yp / Rational(8)};
}

std::optional<std::pair<Rational, Rational>> curve_point_to_quartic(const QuarticCurve& quartic,
                                                                    const CurvePoint& P) {
    auto [q1, q2, q3, zeta, alpha, a] = map_coeffs(quartic);
    if (P.infinity) return std::make_pair(-a, zeta);
    Rational X = Rational(4) * P.x + Rational(2) * (alpha - a.squared());
    Rational Yg = Rational(8) * P.y - q3 * X / (Rational(2) * zeta) - q1 * zeta;
    if (Yg.is_zero()) {
        // only the image of the conjugate base point can land here
        Rational bb = -a;
        Rational zz = -zeta;
        if (quartic_point_to_curve(quartic, bb, zz) == P) return std::make_pair(bb, zz);
        return std::nullopt;
    }
    Rational B = (Rational(4) * zeta.squared() * (X + q2) - q3.squared()) /
                 (Rational(2) * zeta * Yg);
    Rational z = (X * B.squared() - q3 * B) / (Rational(2) * zeta) - zeta;
    Rational b = B - a;
    if (!quartic.contains(b, z)) return std::nullopt;
    return std::make_pair(b, z);
}

namespace {

// unique variant among {P, −P, P+T, −(P+T)} (T = (0,0)) with the given signs
std::optional<CurvePoint> sign_variant(const EllipticCurve& curve, const CurvePoint& P,
                                       bool want_x_positive) {
    CurvePoint T(Rational(0), Rational(0));
    for (const CurvePoint& base : {P, curve.add(P, T)}) {
        if (base.infinity || base.x.is_zero()) continue;
        if (base.x.is_positive() != want_x_positive) continue;
        if (base.y.is_zero()) continue;
        return base.y.is_positive() ? base : curve.negate(base);
    }
    return std::nullopt;
}

} // namespace

Quadrilateral curve_to_quad(const EllipticCurve& curve, const std::vector<CurvePoint>& generators,
                            int max_combinations) {
    if (!curve.n()) throw InvalidInput("curve is not in E_{alpha,-n^2} form");
    if (generators.empty()) throw InvalidInput("curve_to_quad needs at least one generator");
    for (const auto& G : generators)
        if (!curve.contains(G)) throw InvalidInput("generator is not on the curve");

    const Rational n = *curve.n();
    const Rational alpha = curve.alpha();

    // deterministic candidate pool: small multiples and pairwise combinations
    std::vector<CurvePoint> pool;
    auto push = [&pool](const CurvePoint& P) {
        if (P.infinity) return;
        if (std::find(pool.begin(), pool.end(), P) == pool.end()) pool.push_back(P);
    };
    for (const auto& G : generators) {
        CurvePoint acc = CurvePoint::at_infinity();
        for (int m = 1; m <= 8; ++m) {
            acc = curve.add(acc, G);
            push(acc);
        }
    }
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            for (int m1 = 1; m1 <= 4; ++m1)
                for (int m2 = -4; m2 <= 4; ++m2) {
                    if (m2 == 0) continue;
                    push(curve.add(curve.scalar_mul(m1, generators[i]),
                                   curve.scalar_mul(m2, generators[j])));
                }

    int tried = 0;
    for (std::size_t sum = 0; sum <= 2 * pool.size() && tried < max_combinations; ++sum) {
        for (std::size_t i = 0; i < pool.size() && tried < max_combinations; ++i) {
            if (sum < i) break;
            std::size_t j = sum - i;
            if (j >= pool.size()) continue;
            ++tried;
            auto R = sign_variant(curve, pool[i], true);   // x₁ > 0, y₁ > 0
            auto S = sign_variant(curve, pool[j], false);  // x₂ < 0, y₂ > 0
            if (!R || !S) continue;
            CurvePoint P3 = curve.negate(curve.add(*R, *S));
            if (P3.infinity || !P3.x.is_negative() || !P3.y.is_positive()) continue;
            Rational a = R->y / R->x;
            Rational b = -S->y / S->x;
            Rational d = -P3.y / P3.x;
            Rational zeta = R->x + n.squared() / R->x;
            Rational c = (zeta - b * d) / a;
            if (!a.is_positive() || !b.is_positive() || !c.is_positive() || !d.is_positive()) continue;
            try {
                Quadrilateral quad = Quadrilateral::make(a, b, c, d);
                auto ar = area(quad);
                if (!ar || *ar != n) continue;
                Rational alpha_check =
                    (a.squared() + b.squared() - c.squared() + d.squared()) / Rational(2);
                if (alpha_check != alpha) continue;
                return quad;
            } catch (const InvalidInput&) {
                continue;
            }
        }
    }
    throw SearchExhausted("no positive-side quadrilateral found within the candidate budget");
}

Quadrilateral congruent_quad(const Rational& n, const CurvePoint& generator) {
    if (!n.is_positive()) throw InvalidInput("n must be positive");
    EllipticCurve E = EllipticCurve::from_alpha_n(Rational(0), n);
    if (!E.contains(generator)) throw InvalidInput("generator is not on y^2 = x^3 - n^2 x");
    if (E.point_order(generator) != 0) throw InvalidInput("generator must have infinite order");
    Quadrilateral q = curve_to_quad(E, {generator});
    Rational lhs = q.a().squared() + q.b().squared() + q.d().squared();
    if (lhs != q.c().squared()) throw Error("internal: congruent quadrilateral identity failed");
    return q;
}

} // namespace heronq
