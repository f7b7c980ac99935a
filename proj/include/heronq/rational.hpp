#pragma once

// Exact rational scalar backed by GMP.  Values are kept canonical at all
// times: lowest terms, positive denominator, zero is 0/1.  Equality is
// structural, which is why canonical form matters.

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "heronq/errors.hpp"

namespace heronq {

using Integer = mpz_class;

class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, like int -> mpq
    Rational(const Integer& n) : v_(n) {}
    // catches unevaluated GMP expression templates like -z or a*b
    template <class U>
    Rational(const __gmp_expr<mpz_t, U>& e) : v_(Integer(e)) {}
    Rational(const Integer& num, const Integer& den);

    // Accepts "p", "p/q", optional leading +/- on either part.
    static std::optional<Rational> parse(std::string_view s);
    // Same grammar; malformed text throws InvalidInput.
    static Rational parse_or_throw(std::string_view s);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_positive() const { return sign() > 0; }
    bool is_negative() const { return sign() < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;
    Rational squared() const { return *this * *this; }

    // True iff the value is the square of a rational.
    bool is_square() const;
    // Exact nonnegative square root, when is_square().
    std::optional<Rational> sqrt() const;

    // n-th power for small integer n (n may be negative; 0^0 = 1).
    Rational pow(long e) const;

    double to_double() const { return v_.get_d(); }

    // "p" when the denominator is 1, else "p/q".
    std::string str() const;

    const mpq_class& raw() const { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw InvalidInput("rational division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator/(long a, const Rational& b) { return Rational(a) / b; }

} // namespace heronq
