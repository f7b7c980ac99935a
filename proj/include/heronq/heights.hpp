#pragma once

#include <vector>

#include "heronq/curve.hpp"

namespace heronq {

// log max(|num(x)|, den(x)); 0 for the point at infinity.
double naive_height(const CurvePoint& P);

// Néron–Tate canonical height in the x-line normalization
//   ĥ(P) = lim 4^{−k} log H(x(2^k P)),
// twice the value under the convention that carries a leading 1/2.  This is
// the normalization of the reference regulator fixtures (a 3×3 pairing
// determinant differs by 2³ between the two).  Exact-rational duplication
// with gcd cancellation tracked modulo a power of the discriminant
// resultant; only logarithms are floating point.  Torsion points give
// exactly 0.
double canonical_height(const EllipticCurve& curve, const CurvePoint& P);

// Slow independent estimator ĥ ≈ h(x(2^k P))/(2·4^k) by exact doubling.
double canonical_height_doubling_limit(const EllipticCurve& curve, const CurvePoint& P, int k = 6);

// ⟨P,Q⟩ = (ĥ(P+Q) − ĥ(P) − ĥ(Q))/2
double height_pairing(const EllipticCurve& curve, const CurvePoint& P, const CurvePoint& Q);

struct PairingMatrix {
    std::vector<std::vector<double>> entries;
    std::vector<CurvePoint> points;
    double det = 0.0;
};

PairingMatrix pairing_matrix(const EllipticCurve& curve, const std::vector<CurvePoint>& points);

// true iff det(pairing_matrix) > tol
bool independent(const EllipticCurve& curve, const std::vector<CurvePoint>& points, double tol = 1e-4);

} // namespace heronq
