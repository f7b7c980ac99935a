#include "heronq/quad.hpp"

#include "heronq/errors.hpp"

namespace heronq {

Quadrilateral::Quadrilateral(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

Quadrilateral Quadrilateral::make(Rational a, Rational b, Rational c, Rational d) {
    for (const Rational* s : {&a, &b, &c, &d})
        if (!s->is_positive()) throw InvalidInput("quadrilateral sides must be positive");
    Rational per = a + b + c + d;
    for (const Rational* s : {&a, &b, &c, &d})
        if (!(*s < per - *s)) throw InvalidInput("each side must be shorter than the sum of the other three");
    return Quadrilateral(std::move(a), std::move(b), std::move(c), std::move(d));
}

Quadrilateral Quadrilateral::make_triangle(Rational a, Rational b, Rational c) {
    for (const Rational* s : {&a, &b, &c})
        if (!s->is_positive()) throw InvalidInput("triangle sides must be positive");
    Rational per = a + b + c;
    for (const Rational* s : {&a, &b, &c})
        if (!(*s < per - *s)) throw InvalidInput("triangle inequality violated");
    return Quadrilateral(std::move(a), std::move(b), std::move(c), Rational(0));
}

Rational Quadrilateral::semiperimeter() const { return (a_ + b_ + c_ + d_) / Rational(2); }

std::string Quadrilateral::str() const {
    return "[" + a_.str() + ", " + b_.str() + ", " + c_.str() + ", " + d_.str() + "]";
}

Rational brahmagupta_radicand(const Quadrilateral& q) {
    Rational s = q.semiperimeter();
    return (s - q.a()) * (s - q.b()) * (s - q.c()) * (s - q.d());
}

std::optional<Rational> area(const Quadrilateral& q) {
    Rational r = brahmagupta_radicand(q);
    if (!r.is_square()) return std::nullopt;
    return *r.sqrt();
}

AngleData angles(const Quadrilateral& q) {
    auto n = area(q);
    if (!n) throw InvalidInput("quadrilateral has irrational area");
    if (!n->is_positive()) throw InvalidInput("degenerate quadrilateral of zero area");
    Rational denom = q.a() * q.b() + q.c() * q.d();
    AngleData out;
    out.sin_theta = Rational(2) * *n / denom;
    out.cos_theta = (q.a().squared() + q.b().squared() - q.c().squared() - q.d().squared()) /
                    (Rational(2) * denom);
    out.tau = out.sin_theta / (Rational(1) + out.cos_theta);
    out.t = ((q.a() + q.c()).squared() - (q.b() - q.d()).squared()) / (Rational(4) * *n);
    return out;
}

Rational diagonal_products(const Quadrilateral& q) { return q.a() * q.c() + q.b() * q.d(); }

Quadrilateral trapezoid_with_area(const Rational& j, const Rational& k, const Rational& n) {
    if (!k.is_positive() || !(k < j)) throw InvalidInput("trapezoid parameters require j > k > 0");
    Rational ell = n / (Rational(2) * j * k) + k.squared() - j.squared();
    Rational other = ell + Rational(2) * j.squared() - Rational(2) * k.squared();
    if (!ell.is_positive() || !other.is_positive())
        throw InvalidInput("trapezoid parameters give a nonpositive parallel side");
    return Quadrilateral::make(j.squared() + k.squared(), ell, j.squared() + k.squared(), other);
}

} // namespace heronq
