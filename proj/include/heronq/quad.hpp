#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heronq/rational.hpp"

namespace heronq {

// Cyclic quadrilateral with consecutive rational sides a,b,c,d.
// Every side is positive and shorter than the sum of the other three;
// make_triangle() relaxes positivity for d only (d = 0), which degenerates
// the quadrilateral to a triangle inscribed in its circumcircle.
class Quadrilateral {
  public:
    static Quadrilateral make(Rational a, Rational b, Rational c, Rational d);
    static Quadrilateral make_triangle(Rational a, Rational b, Rational c);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }
    bool is_triangle() const { return d_.is_zero(); }

    Rational semiperimeter() const;
    std::vector<Rational> sides() const { return {a_, b_, c_, d_}; }
    std::string str() const;

    bool operator==(const Quadrilateral& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }

  private:
    Quadrilateral(Rational a, Rational b, Rational c, Rational d);
    Rational a_, b_, c_, d_;
};

// (s−a)(s−b)(s−c)(s−d); the square of the area when the area is rational
Rational brahmagupta_radicand(const Quadrilateral& q);

// Exact area when the radicand is a rational square; nullopt means the
// quadrilateral is cyclic but not Heron (irrational area).
std::optional<Rational> area(const Quadrilateral& q);

struct AngleData {
    Rational sin_theta, cos_theta; // angle between sides a and b
    Rational tau;                  // tan(θ/2) = sinθ/(1+cosθ)
    Rational t;                    // ((a+c)² − (b−d)²)/(4n)
};

// Fails (InvalidInput) when the area is irrational or zero.
AngleData angles(const Quadrilateral& q);

// Ptolemy: product of the diagonals, ac + bd.
Rational diagonal_products(const Quadrilateral& q);

// Isosceles trapezoid (j²+k², ℓ, j²+k², ℓ+2j²−2k²) with ℓ = n/(2jk)+k²−j²,
// of exact area n.  Requires j > k > 0 and the positivity of both parallel
// sides.
Quadrilateral trapezoid_with_area(const Rational& j, const Rational& k, const Rational& n);

} // namespace heronq
