#include "heronq/curve.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "heronq/analytic.hpp"
#include "heronq/errors.hpp"
#include "heronq/intutil.hpp"

namespace heronq {

std::string CurvePoint::str() const {
    if (infinity) return "inf";
    return "(" + x.str() + ", " + y.str() + ")";
}

bool cubic_contains(const Rational& a2, const Rational& a4, const Rational& a6, const CurvePoint& P) {
    if (P.infinity) return true;
    return P.y.squared() == ((P.x + a2) * P.x + a4) * P.x + a6;
}

CurvePoint cubic_negate(const CurvePoint& P) {
    if (P.infinity) return P;
    return {P.x, -P.y};
}

CurvePoint cubic_add(const Rational& a2, const Rational& a4, const Rational& a6,
                     const CurvePoint& P, const CurvePoint& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Rational lambda;
    if (P.x == Q.x) {
        if (P.y == -Q.y) return CurvePoint::at_infinity(); // includes the y = 0 case
        lambda = (Rational(3) * P.x.squared() + Rational(2) * a2 * P.x + a4) / (Rational(2) * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    Rational x3 = lambda.squared() - a2 - P.x - Q.x;
    Rational y3 = lambda * (P.x - x3) - P.y;
    return {x3, y3};
}

CurvePoint cubic_double(const Rational& a2, const Rational& a4, const Rational& a6, const CurvePoint& P) {
    return cubic_add(a2, a4, a6, P, P);
}

CurvePoint cubic_scalar_mul(const Rational& a2, const Rational& a4, const Rational& a6,
                            long k, const CurvePoint& P) {
    CurvePoint base = P;
    if (k < 0) {
        base = cubic_negate(base);
        k = -k;
    }
    CurvePoint acc = CurvePoint::at_infinity();
    while (k > 0) {
        if (k & 1) acc = cubic_add(a2, a4, a6, acc, base);
        k >>= 1;
        if (k > 0) base = cubic_double(a2, a4, a6, base);
    }
    return acc;
}

EllipticCurve EllipticCurve::from_alpha_n(const Rational& alpha, const Rational& n) {
    if (n.is_zero()) throw InvalidInput("curve parameter n must be nonzero");
    Rational na = n.abs();
    Rational beta = -na.squared();
    if (alpha.squared() == Rational(4) * beta) throw InvalidInput("singular curve: alpha^2 = 4*beta");
    return EllipticCurve(alpha, beta, na);
}

EllipticCurve EllipticCurve::from_alpha_beta(const Rational& alpha, const Rational& beta) {
    if (beta.is_zero()) throw InvalidInput("singular curve: beta = 0");
    if (alpha.squared() == Rational(4) * beta) throw InvalidInput("singular curve: alpha^2 = 4*beta");
    std::optional<Rational> n;
    Rational neg = -beta;
    if (neg.is_positive() && neg.is_square()) n = *neg.sqrt();
    return EllipticCurve(alpha, beta, n);
}

Rational EllipticCurve::discriminant() const {
    return Rational(16) * beta_.squared() * (alpha_.squared() - Rational(4) * beta_);
}

bool EllipticCurve::contains(const CurvePoint& P) const {
    return cubic_contains(alpha_, beta_, Rational(0), P);
}

CurvePoint EllipticCurve::negate(const CurvePoint& P) const { return cubic_negate(P); }

CurvePoint EllipticCurve::add(const CurvePoint& P, const CurvePoint& Q) const {
    return cubic_add(alpha_, beta_, Rational(0), P, Q);
}

CurvePoint EllipticCurve::double_point(const CurvePoint& P) const {
    return cubic_add(alpha_, beta_, Rational(0), P, P);
}

CurvePoint EllipticCurve::scalar_mul(long k, const CurvePoint& P) const {
    return cubic_scalar_mul(alpha_, beta_, Rational(0), k, P);
}

std::vector<CurvePoint> EllipticCurve::two_torsion() const {
    std::vector<CurvePoint> out{CurvePoint(Rational(0), Rational(0))};
    Rational disc = alpha_.squared() - Rational(4) * beta_;
    if (disc.is_square()) {
        Rational r = *disc.sqrt();
        Rational x1 = (-alpha_ + r) / Rational(2);
        Rational x2 = (-alpha_ - r) / Rational(2);
        if (x1 != x2 && !x1.is_zero() && !x2.is_zero()) {
            if (x2 < x1) std::swap(x1, x2);
            out.emplace_back(x1, Rational(0));
            out.emplace_back(x2, Rational(0));
        }
    }
    return out;
}

std::array<Integer, 5> clear_denominators(const std::array<Rational, 5>& c) {
    Integer l = 1;
    for (const auto& q : c) l = lcm(l, q.den());
    std::array<Integer, 5> out;
    for (std::size_t i = 0; i < 5; ++i) out[i] = c[i].num() * (l / c[i].den());
    return out;
}

std::vector<Rational> EllipticCurve::psi3_rational_roots() const {
    std::array<Rational, 5> c{-beta_.squared(), Rational(0), Rational(6) * beta_,
                              Rational(4) * alpha_, Rational(3)};
    return rational_roots_quartic(clear_denominators(c));
}

std::vector<CurvePoint> EllipticCurve::three_torsion() const {
    std::vector<CurvePoint> out;
    for (const Rational& x : psi3_rational_roots()) {
        Rational f = ((x + alpha_) * x + beta_) * x;
        if (f.is_positive() && f.is_square()) {
            Rational y = *f.sqrt();
            out.emplace_back(x, y);
            out.emplace_back(x, -y);
        }
    }
    return out;
}

namespace {

// Rational roots x of double(P).x = target_x, i.e. (x²−β)² = 4·target_x·(x³+αx²+βx).
std::vector<Rational> halving_x_roots(const Rational& alpha, const Rational& beta, const Rational& tx) {
    std::array<Rational, 5> c{beta.squared(),
                              Rational(-4) * beta * tx,
                              Rational(-2) * beta - Rational(4) * alpha * tx,
                              Rational(-4) * tx,
                              Rational(1)};
    return rational_roots_quartic(clear_denominators(c));
}

// Does some rational point halve to x-coordinate tx?  (Existence of x with
// double((x,y)).x = tx and y² = f(x) a rational square.)
bool has_halving_point(const Rational& alpha, const Rational& beta, const Rational& tx) {
    for (const Rational& x : halving_x_roots(alpha, beta, tx)) {
        Rational f = ((x + alpha) * x + beta) * x;
        if (f.is_positive() && f.is_square()) return true;
    }
    return false;
}

} // namespace

TorsionGroup EllipticCurve::torsion_classify() const {
    // Upper bound: the torsion order divides #E(F_p) at every good odd prime.
    Integer g = 0;
    {
        auto [ic, u] = integral_model();
        Integer disc = ic.discriminant().num();
        int taken = 0;
        for (std::uint64_t p = 3; taken < 6 && p < 20000; p += 2) {
            if (!mpz_probab_prime_p(Integer(p).get_mpz_t(), 25)) continue;
            if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
            g = gcd(g, Integer(count_points_mod_p(ic, p)));
            ++taken;
        }
        if (g == 0) g = 12; // no usable prime below the cap; fall back to Mazur's bound
    }

    auto t2 = two_torsion();
    bool full_two = t2.size() == 3;

    bool has3 = false;
    if (mpz_divisible_ui_p(g.get_mpz_t(), 3)) has3 = !three_torsion().empty();

    bool has4 = false;
    CurvePoint four_cover;
    std::uint64_t needed4 = full_two ? 8 : 4;
    if (mpz_divisible_ui_p(g.get_mpz_t(), needed4)) {
        for (const auto& T : t2) {
            // no point halves to (0,0) when β < 0: x² = β has no solution
            if (T.x.is_zero() && beta_.is_negative()) continue;
            for (const Rational& x : halving_x_roots(alpha_, beta_, T.x)) {
                Rational f = ((x + alpha_) * x + beta_) * x;
                if (f.is_positive() && f.is_square()) {
                    has4 = true;
                    four_cover = CurvePoint(x, *f.sqrt());
                    break;
                }
            }
            if (has4) break;
        }
    }

    bool has8 = false;
    if (has4 && full_two && mpz_divisible_ui_p(g.get_mpz_t(), 16))
        has8 = has_halving_point(alpha_, beta_, four_cover.x);

    if (!full_two) {
        if (has3 && !has4) return {TorsionTag::Z6, 6, "Z6"};
        if (!has3 && !has4) return {TorsionTag::Z2, 2, "Z2"};
        if (has3 && has4) return {TorsionTag::Other, 12, "Z12"};
        return {TorsionTag::Other, 4, "Z4"};
    }
    if (has3) return {TorsionTag::Other, 12, "Z2xZ6"};
    if (has8) return {TorsionTag::Other, 16, "Z2xZ8"};
    if (has4) return {TorsionTag::Z2xZ4, 8, "Z2xZ4"};
    return {TorsionTag::Z2xZ2, 4, "Z2xZ2"};
}

int EllipticCurve::point_order(const CurvePoint& P) const {
    if (P.infinity) return 1;
    CurvePoint Q = P; // Q = kP at the top of iteration k
    for (int k = 1; k <= 12; ++k) {
        if (Q.infinity) return k;
        Q = add(Q, P);
    }
    return 0;
}

std::pair<EllipticCurve, Rational> EllipticCurve::integral_model() const {
    Integer da = alpha_.den(), db = beta_.den();
    Integer u = 1;
    auto fa = factor(da);
    auto fb = factor(db);
    if (fa.complete && fb.complete) {
        std::map<Integer, int> e;
        for (const auto& [p, k] : fa.primes) e[p] = std::max(e[p], (k + 1) / 2);
        for (const auto& [p, k] : fb.primes) e[p] = std::max(e[p], (k + 3) / 4);
        for (const auto& [p, k] : e)
            for (int i = 0; i < k; ++i) u *= p;
    } else {
        u = da * db; // coarse but always sufficient
    }
    Rational ur(u);
    EllipticCurve out(alpha_ * ur.squared(), beta_ * ur.squared().squared(),
                      n_ ? std::optional<Rational>(*n_ * ur.squared()) : std::nullopt);
    return {out, ur};
}

CurvePoint EllipticCurve::scale_point(const CurvePoint& P, const Rational& u) {
    if (P.infinity) return P;
    return {P.x * u.squared(), P.y * u.squared() * u};
}

std::string EllipticCurve::str() const {
    std::ostringstream os;
    os << "y^2 = x^3 + (" << alpha_.str() << ")*x^2 + (" << beta_.str() << ")*x";
    return os.str();
}

} // namespace heronq
