#include "heronq/analytic.hpp"

#include <cmath>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "heronq/errors.hpp"
#include "heronq/intutil.hpp"

namespace heronq {

namespace {

struct ReducedCurve {
    Integer A, B;   // integral model y² = x³ + Ax² + Bx
    Integer disc;   // its discriminant numerator (integer)
};

ReducedCurve reduce_integral(const EllipticCurve& curve) {
    auto [ic, u] = curve.integral_model();
    return {ic.alpha().num(), ic.beta().num(), ic.discriminant().num()};
}

bool divisible(const Integer& v, const Integer& d) {
    return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

// p-minimal model at odd p within the scalings x ↦ p²x: divide while
// p² | A and p⁴ | B.  For p ≥ 5 that is full minimality (v(c4) ≥ 4 needs
// exactly those two divisibilities on y² = x³+Ax²+Bx), so a prime left
// dividing the reduced discriminant genuinely has bad reduction.
ReducedCurve p_minimal(const ReducedCurve& rc, std::uint64_t p) {
    Integer p2 = Integer(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
    Integer p4 = p2 * p2;
    Integer a = rc.A, b = rc.B;
    bool reduced = false;
    while (divisible(a, p2) && divisible(b, p4)) {
        a /= p2;
        b /= p4;
        reduced = true;
    }
    if (!reduced) return rc;
    return {a, b, Integer(16) * b * b * (a * a - 4 * b)};
}

bool is_bad_prime(const ReducedCurve& rc, std::uint64_t p) {
    if (p == 2) return true;
    if (mpz_divisible_ui_p(rc.disc.get_mpz_t(), static_cast<unsigned long>(p)) == 0) return false;
    return mpz_divisible_ui_p(p_minimal(rc, p).disc.get_mpz_t(),
                              static_cast<unsigned long>(p)) != 0;
}

std::uint64_t count_points(const ReducedCurve& rc0, std::uint64_t p) {
    bool touches = mpz_divisible_ui_p(rc0.disc.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
    const ReducedCurve rc = touches ? p_minimal(rc0, p) : rc0;
    // residues of A, B mod p
    std::uint64_t a = mpz_fdiv_ui(rc.A.get_mpz_t(), static_cast<unsigned long>(p));
    std::uint64_t b = mpz_fdiv_ui(rc.B.get_mpz_t(), static_cast<unsigned long>(p));
    std::vector<bool> qr(p, false);
    for (std::uint64_t t = 0; t <= (p - 1) / 2; ++t) qr[t * t % p] = true;
    std::uint64_t count = 1; // infinity
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t f = ((x + a) * x % p + b) % p * x % p;
        if (f == 0)
            count += 1;
        else if (qr[f])
            count += 2;
    }
    return count;
}

} // namespace

std::uint64_t count_points_mod_p(const EllipticCurve& curve, std::uint64_t p) {
    if (p >= (1ull << 21)) throw InvalidInput("prime too large for enumeration counter");
    ReducedCurve rc = reduce_integral(curve);
    if (p < 3 || is_bad_prime(rc, p)) throw BadReduction("bad reduction at p=" + std::to_string(p));
    return count_points(rc, p);
}

std::vector<std::uint64_t> bad_primes_up_to(const EllipticCurve& curve, std::uint64_t bound) {
    ReducedCurve rc = reduce_integral(curve);
    std::vector<std::uint64_t> out;
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(bound)))
        if (is_bad_prime(rc, p)) out.push_back(p);
    return out;
}

int effective_threads() {
    if (const char* env = std::getenv("HERONQ_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
        return 1;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

double nagao_term(const ReducedCurve& rc, std::uint64_t p) {
    std::uint64_t m = count_points(rc, p);
    return (1.0 - static_cast<double>(p - 1) / static_cast<double>(m)) * std::log(static_cast<double>(p));
}

std::vector<std::uint64_t> good_odd_primes(const ReducedCurve& rc, std::uint64_t N) {
    std::vector<std::uint64_t> ps;
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(N)))
        if (!is_bad_prime(rc, p)) ps.push_back(p);
    return ps;
}

} // namespace

double mestre_nagao_sum_serial(const EllipticCurve& curve, std::uint64_t N) {
    ReducedCurve rc = reduce_integral(curve);
    double sum = 0.0;
    for (std::uint64_t p : good_odd_primes(rc, N)) sum += nagao_term(rc, p);
    return sum;
}

double mestre_nagao_sum(const EllipticCurve& curve, std::uint64_t N) {
    ReducedCurve rc = reduce_integral(curve);
    std::vector<std::uint64_t> ps = good_odd_primes(rc, N);
    std::vector<double> terms(ps.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
#endif
    for (std::size_t i = 0; i < ps.size(); ++i) terms[i] = nagao_term(rc, ps[i]);
    double sum = 0.0;
    for (double t : terms) sum += t; // ascending primes: identical fold to serial
    return sum;
}

SieveReport sieve_one(const EllipticCurve& curve, const SieveThresholds& t) {
    SieveReport r;
    r.curve_id = curve.str();
    try {
        r.bad_primes = bad_primes_up_to(curve, t.n2);
        r.s1 = mestre_nagao_sum(curve, t.n1);
        if (r.s1 > t.bound1) {
            r.s2 = mestre_nagao_sum(curve, t.n2);
            r.passed = *r.s2 > t.bound2;
        }
    } catch (const Error& e) {
        r.error = e.what();
        r.passed = false;
    }
    return r;
}

std::vector<SieveReport> sieve(const std::vector<EllipticCurve>& curves, const SieveThresholds& t) {
    std::vector<SieveReport> out;
    out.reserve(curves.size());
    for (const auto& c : curves) out.push_back(sieve_one(c, t));
    return out;
}

} // namespace heronq
