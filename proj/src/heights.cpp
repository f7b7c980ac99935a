#include "heronq/heights.hpp"

#include <cmath>

#include "heronq/errors.hpp"
#include "heronq/intutil.hpp"

namespace heronq {

double naive_height(const CurvePoint& P) {
    if (P.infinity) return 0.0;
    Integer num = ::abs(P.x.num()), den = P.x.den();
    return log_abs(num > den ? num : den);
}

namespace {

long double to_long_double(const Integer& z) {
    long e = 0;
    double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return ldexpl(static_cast<long double>(d), e);
}

} // namespace

double canonical_height(const EllipticCurve& curve, const CurvePoint& P) {
    if (!curve.contains(P)) throw InvalidInput("point is not on the curve");
    if (P.infinity || curve.point_order(P) != 0) return 0.0;

    auto [ic, scale] = curve.integral_model();
    CurvePoint Q = EllipticCurve::scale_point(P, scale);
    const Integer A = ic.alpha().num(), B = ic.beta().num();

    // x(2P) = F(u,v)/G(u,v) on x = u/v, with
    //   F(u,v) = (u² − Bv²)²,  G(u,v) = 4uv(u² + Auv + Bv²).
    // gcd(F(u,v), G(u,v)) divides R = Res(F,G) = Δ² for coprime u,v, so the
    // exact cancellation at every step can be recovered from residues modulo
    // M = R^(K+2); dividing out g_k reduces the modulus to M/g_k, which stays
    // ≥ R² for K steps.  Magnitudes travel separately as normalized long
    // doubles: (a_k, b_k) = (u_k, v_k)/H_k with H_k = max(|u_k|, |v_k|),
    //   ĥ = log H₀ + Σ_k 4^{−(k+1)} (log max(|F(a,b)|,|G(a,b)|) − log g_k)
    // in the x-line normalization (see the header).
    const int K = 32;
    Integer delta = ic.discriminant().num();
    Integer R = delta * delta;
    Integer M;
    mpz_pow_ui(M.get_mpz_t(), R.get_mpz_t(), K + 2);

    Integer u = Q.x.num() % M, v = Q.x.den();
    if (sgn(u) < 0) u += M;
    const long double Ald = to_long_double(A), Bld = to_long_double(B);
    Integer absnum = ::abs(Q.x.num());
    Integer h0 = absnum > Q.x.den() ? absnum : Q.x.den();
    long double a = to_long_double(Q.x.num()) / to_long_double(h0);
    long double b = to_long_double(Q.x.den()) / to_long_double(h0);

    long double sum = 0.0L;
    for (int k = 0; k < K; ++k) {
        Integer u2 = u * u % M, v2 = v * v % M;
        Integer t = (u2 - B * v2) % M;
        Integer f = t * t % M;
        Integer h = 4 * u * v % M * ((u2 + A * u % M * v + B * v2) % M) % M;
        if (sgn(f) < 0) f += M;
        if (sgn(h) < 0) h += M;
        Integer g = gcd(gcd(f, R), gcd(h, R));

        long double fa = a * a - Bld * b * b;
        long double F = fa * fa;
        long double G = 4.0L * a * b * (a * a + Ald * a * b + Bld * b * b);
        long double m = fabsl(F) > fabsl(G) ? fabsl(F) : fabsl(G);
        sum += ldexpl(logl(m) - static_cast<long double>(log_abs(g)), -2 * (k + 1));

        u = f / g;
        v = h / g;
        M /= g;
        a = F / m;
        b = G / m;
    }
    long double hx = static_cast<long double>(log_abs(h0)) + sum;
    return static_cast<double>(hx);
}

double canonical_height_doubling_limit(const EllipticCurve& curve, const CurvePoint& P, int k) {
    if (!curve.contains(P)) throw InvalidInput("point is not on the curve");
    if (P.infinity || curve.point_order(P) != 0) return 0.0;
    auto [ic, scale] = curve.integral_model();
    CurvePoint Q = EllipticCurve::scale_point(P, scale);
    for (int i = 0; i < k; ++i) Q = ic.double_point(Q);
    return naive_height(Q) / std::ldexp(1.0, 2 * k);
}

double height_pairing(const EllipticCurve& curve, const CurvePoint& P, const CurvePoint& Q) {
    return (canonical_height(curve, curve.add(P, Q)) - canonical_height(curve, P) -
            canonical_height(curve, Q)) /
           2.0;
}

namespace {

double determinant(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
        if (m[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            double factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

} // namespace

PairingMatrix pairing_matrix(const EllipticCurve& curve, const std::vector<CurvePoint>& points) {
    const std::size_t n = points.size();
    PairingMatrix out;
    out.points = points;
    out.entries.assign(n, std::vector<double>(n, 0.0));
    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = canonical_height(curve, points[i]);
    for (std::size_t i = 0; i < n; ++i) {
        out.entries[i][i] = h[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            double hij =
                (canonical_height(curve, curve.add(points[i], points[j])) - h[i] - h[j]) / 2.0;
            out.entries[i][j] = out.entries[j][i] = hij;
        }
    }
    out.det = determinant(out.entries);
    return out;
}

bool independent(const EllipticCurve& curve, const std::vector<CurvePoint>& points, double tol) {
    return pairing_matrix(curve, points).det > tol;
}

} // namespace heronq
