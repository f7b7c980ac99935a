#include "heronq/rational.hpp"

#include <cctype>
#include <ostream>

#include "heronq/errors.hpp"

namespace heronq {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view s) {
    auto trim = [](std::string_view t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
        return t;
    };
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char ch : t)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    s = trim(s);
    std::string_view num_part = s, den_part;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num_part = trim(s.substr(0, slash));
        den_part = trim(s.substr(slash + 1));
        if (den_part.empty()) return std::nullopt;
    }
    if (!is_int(num_part)) return std::nullopt;
    if (!den_part.empty() && !is_int(den_part)) return std::nullopt;
    // mpz_class accepts a leading '-' but not '+'
    if (num_part.front() == '+') num_part.remove_prefix(1);
    if (!den_part.empty() && den_part.front() == '+') den_part.remove_prefix(1);
    try {
        Integer num(std::string(num_part), 10);
        Integer den = den_part.empty() ? Integer(1) : Integer(std::string(den_part), 10);
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Rational Rational::parse_or_throw(std::string_view s) {
    auto r = parse(s);
    if (!r) throw InvalidInput("not a rational (\"p\" or \"p/q\"): \"" + std::string(s) + "\"");
    return *r;
}

Rational Rational::abs() const {
    return is_negative() ? -*this : *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw InvalidInput("inverse of zero");
    return Rational(den(), num());
}

bool Rational::is_square() const {
    if (is_negative()) return false;
    return mpz_perfect_square_p(v_.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(v_.get_den().get_mpz_t()) != 0;
}

std::optional<Rational> Rational::sqrt() const {
    if (!is_square()) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), v_.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(rn, rd);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational base = *this, acc = 1;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string Rational::str() const {
    std::string out = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        out += '/';
        out += v_.get_den().get_str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace heronq
