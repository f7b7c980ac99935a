#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heronq/rational.hpp"

namespace heronq {

struct CurvePoint {
    bool infinity = true;
    Rational x, y;

    CurvePoint() = default;
    CurvePoint(Rational px, Rational py) : infinity(false), x(std::move(px)), y(std::move(py)) {}
    static CurvePoint at_infinity() { return CurvePoint(); }

    bool operator==(const CurvePoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }

    std::string str() const;
};

// Group law on y² = x³ + a2·x² + a4·x + a6 (short form with a1 = a3 = 0).
// Shared by EllipticCurve and the auxiliary rank-1 curves used for family
// parameter generation, which have a6 ≠ 0.
bool cubic_contains(const Rational& a2, const Rational& a4, const Rational& a6, const CurvePoint& P);
CurvePoint cubic_negate(const CurvePoint& P);
CurvePoint cubic_add(const Rational& a2, const Rational& a4, const Rational& a6,
                     const CurvePoint& P, const CurvePoint& Q);
CurvePoint cubic_double(const Rational& a2, const Rational& a4, const Rational& a6, const CurvePoint& P);
CurvePoint cubic_scalar_mul(const Rational& a2, const Rational& a4, const Rational& a6,
                            long k, const CurvePoint& P);

enum class TorsionTag { Z2, Z6, Z2xZ2, Z2xZ4, Other };

struct TorsionGroup {
    TorsionTag tag = TorsionTag::Other;
    int order = 0;
    std::string structure; // "Z2", "Z6", "Z2xZ2", "Z2xZ4", or what was detected

    std::string name() const { return structure; }
};

// y² = x³ + α·x² + β·x, nonsingular (β ≠ 0, α² ≠ 4β).  The quadrilateral
// correspondence uses β = −n²; a general β hook is kept for the birational
// quartic targets and for curves like y² = x³ + αx² + βx with β > 0.
class EllipticCurve {
  public:
    static EllipticCurve from_alpha_n(const Rational& alpha, const Rational& n);
    static EllipticCurve from_alpha_beta(const Rational& alpha, const Rational& beta);

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    // set when β = −n² for rational n > 0
    const std::optional<Rational>& n() const { return n_; }

    Rational discriminant() const; // 16β²(α² − 4β)

    bool contains(const CurvePoint& P) const;
    CurvePoint negate(const CurvePoint& P) const;
    CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const;
    CurvePoint double_point(const CurvePoint& P) const;
    CurvePoint scalar_mul(long k, const CurvePoint& P) const;

    // all rational points of order dividing 2, (0,0) first then ascending x
    std::vector<CurvePoint> two_torsion() const;
    // rational roots of ψ₃(x) = 3x⁴ + 4αx³ + 6βx² − β²
    std::vector<Rational> psi3_rational_roots() const;
    // affine 3-torsion points (ψ₃ roots whose y² is a rational square)
    std::vector<CurvePoint> three_torsion() const;
    TorsionGroup torsion_classify() const;
    // exact order if ≤ 12, otherwise 0 (infinite order by Mazur's bound)
    int point_order(const CurvePoint& P) const;

    // (x,y) → (u²x, u³y) with minimal positive integer u making α, β integral
    std::pair<EllipticCurve, Rational> integral_model() const;
    static CurvePoint scale_point(const CurvePoint& P, const Rational& u);

    bool operator==(const EllipticCurve& o) const { return alpha_ == o.alpha_ && beta_ == o.beta_; }
    std::string str() const;

  private:
    EllipticCurve(Rational alpha, Rational beta, std::optional<Rational> n)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), n_(std::move(n)) {}

    Rational alpha_, beta_;
    std::optional<Rational> n_;
};

// Clears denominators of a degree-≤4 rational polynomial to a primitive-ish
// integer coefficient array (low degree first).
std::array<Integer, 5> clear_denominators(const std::array<Rational, 5>& c);

} // namespace heronq
