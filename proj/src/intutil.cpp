#include "heronq/intutil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace heronq {

bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

double log_abs(const Integer& z) {
    if (z == 0) return -std::numeric_limits<double>::infinity();
    long exp2 = 0;
    double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(exp2) * M_LN2;
}

namespace {

bool probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Brent's cycle variant of Pollard rho with deterministic seeds.  Returns a
// nontrivial factor of composite n, or 0 if the budget is exhausted.
Integer rho_brent(const Integer& n, std::uint64_t& budget) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1; budget > 0; ++c) {
        Integer y = 2, r = 1, q = 1, g = 1, x, ys;
        const unsigned long m = 128;
        while (g == 1 && budget > 0) {
            x = y;
            for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
            Integer k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                unsigned long steps = m;
                if (r - k < steps) steps = mpz_get_ui(mpz_class(r - k).get_mpz_t());
                for (unsigned long i = 0; i < steps && budget > 0; ++i, --budget) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                }
                g = gcd(q, n);
                k += steps;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack to recover the factor lost inside the batch
            g = 1;
            while (g == 1 && budget > 0) {
                ys = (ys * ys + c) % n;
                g = gcd(x > ys ? x - ys : ys - x, n);
                --budget;
            }
        }
        if (g > 1 && g < n) return g;
    }
    return 0;
}

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> table = primes_up_to(100000);
    return table;
}

} // namespace

Factorization factor(Integer n, std::uint64_t rho_budget) {
    Factorization out;
    n = ::abs(n);
    if (n <= 1) return out; // 0 and 1 factor to nothing

    std::map<Integer, int> found;
    for (std::uint32_t p : small_primes()) {
        if (n == 1) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                n /= p;
                ++e;
            }
            found[Integer(p)] = e;
        }
        if (Integer(p) * p > n) break;
    }
    if (n > 1 && Integer(100000) * 100000 > n) {
        // trial division proved n prime (no factor below sqrt)
        found[n] += 1;
        n = 1;
    }

    std::vector<std::pair<Integer, int>> pending; // (value, multiplicity)
    if (n > 1) pending.push_back({n, 1});
    while (!pending.empty()) {
        auto [v, mult] = pending.back();
        pending.pop_back();
        if (probable_prime(v)) {
            found[v] += mult;
            continue;
        }
        if (mpz_perfect_power_p(v.get_mpz_t())) {
            for (unsigned long e = 2; ; ++e) {
                Integer root;
                if (mpz_root(root.get_mpz_t(), v.get_mpz_t(), e) != 0) {
                    pending.push_back({root, mult * static_cast<int>(e)});
                    break;
                }
                if (Integer(1) << e > v) break; // unreachable guard
            }
            continue;
        }
        Integer g = rho_brent(v, rho_budget);
        if (g == 0) {
            out.complete = false;
            for (int i = 0; i < mult; ++i) out.cofactor *= v;
            continue;
        }
        pending.push_back({g, mult});
        pending.push_back({v / g, mult});
    }
    out.primes.assign(found.begin(), found.end());
    return out;
}

std::optional<std::vector<Integer>> divisors(const Factorization& f, std::size_t cap) {
    if (!f.complete) return std::nullopt;
    std::size_t count = 1;
    for (const auto& [p, e] : f.primes) {
        count *= static_cast<std::size_t>(e) + 1;
        if (count > cap) return std::nullopt;
    }
    std::vector<Integer> out{1};
    for (const auto& [p, e] : f.primes) {
        std::size_t base = out.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rational roots of integer polynomials of degree <= 4.
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<mpq_class>; // coefficients, low degree first

int poly_degree(const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpq_class poly_eval(const Poly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    poly_trim(d);
    return d;
}

// Remainder of euclidean division a / b, b nonzero.
Poly poly_rem(Poly a, const Poly& b) {
    poly_trim(a);
    int db = poly_degree(b);
    while (poly_degree(a) >= db) {
        int da = poly_degree(a);
        mpq_class q = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
        a[da] = 0;
        poly_trim(a);
    }
    return a;
}

// gcd via euclidean remainders (monic-normalized result).
Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (poly_degree(b) >= 0) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = poly_degree(a);
    if (d >= 0) {
        mpq_class lead = a[d];
        for (auto& c : a) c /= lead;
    }
    return a;
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    Poly q(a.size(), mpq_class(0)), r = a;
    poly_trim(r);
    int db = poly_degree(b);
    while (poly_degree(r) >= db) {
        int dr = poly_degree(r);
        mpq_class f = r[dr] / b[db];
        q[dr - db] = f;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b[i];
        poly_trim(r);
    }
    poly_trim(q);
    return q;
}

struct SturmChain {
    std::vector<Poly> seq;

    explicit SturmChain(const Poly& squarefree) {
        seq.push_back(squarefree);
        Poly d = poly_derivative(squarefree);
        if (poly_degree(d) >= 0) seq.push_back(d);
        while (seq.size() >= 2) {
            Poly r = poly_rem(seq[seq.size() - 2], seq.back());
            if (poly_degree(r) < 0) break;
            for (auto& c : r) c = -c;
            seq.push_back(std::move(r));
        }
    }

    int variations(const mpq_class& x) const {
        int count = 0, prev = 0;
        for (const auto& p : seq) {
            int s = sgn(poly_eval(p, x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }
};

// Exact bisection refinement of an isolating interval down to 2^-prec_bits,
// followed by continued-fraction reconstruction of a candidate rational root.
// The divisor bounds |p| <= |c0|, q <= |lead| from the rational root theorem
// prune the convergent scan; any surviving candidate is verified exactly.
std::optional<Rational> reconstruct_root(const Poly& p, mpq_class lo, mpq_class hi,
                                         const Integer& c0_bound, const Integer& lead_bound,
                                         long prec_bits) {
    mpq_class flo = poly_eval(p, lo);
    if (flo == 0) return Rational(lo.get_num(), lo.get_den());
    mpq_class fhi = poly_eval(p, hi);
    if (fhi == 0) return Rational(hi.get_num(), hi.get_den());
    int slo = sgn(flo);
    mpq_class width = hi - lo, limit;
    limit = 1;
    limit >>= static_cast<unsigned long>(prec_bits); // 2^-prec_bits
    while (width > limit) {
        mpq_class mid = (lo + hi) / 2;
        mpq_class fm = poly_eval(p, mid);
        if (fm == 0) return Rational(mid.get_num(), mid.get_den());
        if (sgn(fm) == slo)
            lo = mid;
        else
            hi = mid;
        width = hi - lo;
    }
    // continued fraction of the midpoint approximation
    mpq_class x = (lo + hi) / 2;
    Integer h0 = 1, h1, k0 = 0, k1; // convergent h/k recurrences
    mpq_class frac = x;
    Integer a = Integer(mpq_class(frac).get_num() / mpq_class(frac).get_den());
    if (frac < 0 && frac != a) a -= 1; // floor for negatives
    h1 = a;
    k1 = 1;
    while (true) {
        if (k1 != 0 && ::abs(h1) <= c0_bound && k1 <= lead_bound) {
            mpq_class cand(h1, k1);
            cand.canonicalize();
            if (poly_eval(p, cand) == 0 && cand >= lo && cand <= hi)
                return Rational(cand.get_num(), cand.get_den());
        }
        if (::abs(h1) > c0_bound && k1 > lead_bound) break;
        mpq_class rem = frac - a;
        if (rem == 0) break;
        frac = 1 / rem;
        a = Integer(mpq_class(frac).get_num() / mpq_class(frac).get_den());
        if (frac < 0 && frac != a) a -= 1;
        Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
    }
    return std::nullopt;
}

std::vector<Rational> roots_by_sturm(const Poly& prim, const Integer& c0, const Integer& lead) {
    std::vector<Rational> roots;
    Poly sf = prim;
    Poly g = poly_gcd(prim, poly_derivative(prim));
    if (poly_degree(g) >= 1) sf = poly_div_exact(prim, g); // squarefree part, same root set
    SturmChain chain(sf);

    // Cauchy bound: all real roots lie strictly inside (-B, B).
    int d = poly_degree(sf);
    mpq_class maxratio = 0;
    for (int i = 0; i < d; ++i) {
        mpq_class r = ::abs(sf[i] / sf[d]);
        if (r > maxratio) maxratio = r;
    }
    Integer bint = maxratio.get_num() / maxratio.get_den() + 2;
    mpq_class B(bint);

    long prec_bits = static_cast<long>(mpz_sizeinbase(c0.get_mpz_t(), 2)) +
                     static_cast<long>(mpz_sizeinbase(lead.get_mpz_t(), 2)) + 64;

    struct Interval {
        mpq_class lo, hi;
        int vlo, vhi;
    };
    std::vector<Interval> work{{-B, B, chain.variations(-B), chain.variations(B)}};
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        int count = iv.vlo - iv.vhi;
        if (count <= 0) continue;
        if (count == 1) {
            if (auto r = reconstruct_root(sf, iv.lo, iv.hi, c0, lead, prec_bits)) roots.push_back(*r);
            continue;
        }
        // split at a point that is not itself a root, so variation counts stay valid
        mpq_class span = iv.hi - iv.lo;
        for (int attempt = 0; attempt < 8; ++attempt) {
            mpq_class mid = iv.lo + span * mpq_class(2 + attempt, 5 + 2 * attempt);
            if (poly_eval(sf, mid) == 0) continue;
            int vm = chain.variations(mid);
            work.push_back({iv.lo, mid, iv.vlo, vm});
            work.push_back({mid, iv.hi, vm, iv.vhi});
            break;
        }
    }
    return roots;
}

} // namespace

std::vector<Rational> rational_roots_quartic(const std::array<Integer, 5>& coeffs) {
    Poly p;
    for (const auto& c : coeffs) p.emplace_back(c);
    poly_trim(p);
    std::vector<Rational> roots;
    int d = poly_degree(p);
    if (d <= 0) return roots; // constant (or zero) polynomial: no isolated roots reported

    // factor out x^k
    std::size_t shift = 0;
    while (shift < p.size() && p[shift] == 0) ++shift;
    if (shift > 0) {
        roots.push_back(Rational(0));
        p.erase(p.begin(), p.begin() + static_cast<long>(shift));
        d = poly_degree(p);
    }
    if (d >= 1) {
        // primitive integer form
        Integer content = 0;
        for (const auto& c : p) content = gcd(content, Integer(mpq_class(c).get_num()));
        std::vector<Integer> ic;
        for (const auto& c : p) ic.push_back(Integer(mpq_class(c).get_num()) / content);

        if (d == 1) {
            roots.push_back(Rational(-ic[0], ic[1]));
        } else if (d == 2) {
            Integer disc = ic[1] * ic[1] - 4 * ic[2] * ic[0];
            if (is_perfect_square(disc)) {
                Integer r = isqrt(disc);
                for (int s : {1, -1}) roots.push_back(Rational(-ic[1] + s * r, 2 * ic[2]));
            }
        } else {
            // degree 3 or 4: divisor enumeration when both ends factor cheaply
            constexpr std::size_t kDivisorCap = 20000;
            auto f0 = factor(ic[0], 2'000'000);
            auto fd = factor(ic[static_cast<std::size_t>(d)], 2'000'000);
            auto d0 = divisors(f0, kDivisorCap);
            auto dd = divisors(fd, kDivisorCap);
            bool enumerated = false;
            if (d0 && dd && d0->size() * dd->size() <= 400000) {
                enumerated = true;
                Poly prim;
                for (const auto& c : ic) prim.emplace_back(c);
                for (const Integer& q : *dd)
                    for (const Integer& pn : *d0) {
                        if (gcd(pn, q) != 1) continue;
                        for (int s : {1, -1}) {
                            Rational x(s * pn, q);
                            if (poly_eval(prim, x.raw()) == 0) roots.push_back(x);
                        }
                    }
            }
            if (!enumerated) {
                Poly prim;
                for (const auto& c : ic) prim.emplace_back(c);
                auto found = roots_by_sturm(prim, ::abs(ic[0]), ::abs(ic[static_cast<std::size_t>(d)]));
                roots.insert(roots.end(), found.begin(), found.end());
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace heronq
