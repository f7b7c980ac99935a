#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "heronq/curve.hpp"
#include "heronq/quad.hpp"

namespace heronq {

// Heron quadrilateral (a,b,c,d) of area n ↔ curve y² = x³ + αx² − n²x with
// α = (a²+b²−c²+d²)/2 and the three marked points
//   P₁ = (x₁, a·x₁),  x₁ = ((a+c)² − (b−d)²)/4
//   P₂ = (−q₂, b·q₂), q₂ = ((a+d)² − (b−c)²)/4
//   P₃ = (−q₃, d·q₃), q₃ = ((a+b)² − (c−d)²)/4
// satisfying P₁ + P₂ + P₃ = ∞.
struct Correspondence {
    EllipticCurve curve;
    CurvePoint p1, p2, p3;
    Quadrilateral quad;
};

Correspondence quad_to_curve(const Quadrilateral& q);

// C(b,z): z² = b⁴ − 2αb² + (ζ² − a⁴ + 2a²α), the side-recovery quartic built
// from a point P₁ = (x₁, y₁) with a = y₁/x₁ and ζ = (x₁² + n²)/x₁.
// (−a, ζ) always lies on it.
class QuarticCurve {
  public:
    QuarticCurve(Rational alpha, Rational a_side, Rational zeta);

    const Rational& alpha() const { return alpha_; }
    const Rational& a_side() const { return a_; }
    const Rational& zeta() const { return zeta_; }
    Rational n_squared() const; // (ζ² − (a² − α)²)/4

    Rational rhs(const Rational& b) const;
    bool contains(const Rational& b, const Rational& z) const;

  private:
    Rational alpha_, a_, zeta_;
};

// Requires P1 affine with x₁ > 0, y₁ > 0 and order > 2.
QuarticCurve quartic_of(const EllipticCurve& curve, const CurvePoint& P1);

enum class Branch { Plus, Minus };

// Recover sides c = (aζ ± bz)/(a² − b²), d = −(bζ ± az)/(a² − b²) and return
// the quadrilateral (a,b,c,d), or nullopt when a side is nonpositive or the
// quadrilateral inequality fails.  b = ±a is a division-by-zero error.
std::optional<Quadrilateral> sides_from_quartic_point(const QuarticCurve& quartic,
                                                      const EllipticCurve& curve,
                                                      const CurvePoint& P1, const Rational& b,
                                                      const Rational& z, Branch branch);

// Composed birational map C(b,z) → E_{α,−n²} (exact), and its inverse.
// The base point (−a, ζ) maps to ∞.  The inverse returns nullopt for the
// finitely many curve points with no affine preimage.
CurvePoint quartic_point_to_curve(const QuarticCurve& quartic, const Rational& b, const Rational& z);
std::optional<std::pair<Rational, Rational>> curve_point_to_quartic(const QuarticCurve& quartic,
                                                                    const CurvePoint& P);

// Search small integer combinations of the generators, normalized through
// the four sign variants ±R, ±(R+(0,0)), for a pair yielding positive sides.
// Throws SearchExhausted when the candidate budget runs out (which is not a
// proof that no quadrilateral exists).
Quadrilateral curve_to_quad(const EllipticCurve& curve, const std::vector<CurvePoint>& generators,
                            int max_combinations = 500);

// curve_to_quad on y² = x³ − n²x; the result satisfies a² + b² + d² = c².
Quadrilateral congruent_quad(const Rational& n, const CurvePoint& generator);

} // namespace heronq
