#pragma once

// Integer helpers: primality, factorization, divisor enumeration, prime
// sieves, and exact rational-root extraction for small-degree integer
// polynomials.  Everything here is deterministic.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heronq/rational.hpp"

namespace heronq {

bool is_perfect_square(const Integer& n);
Integer isqrt(const Integer& n); // floor sqrt, n >= 0

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// Prime factorization of |n|.  `complete` is false when the rho budget ran
// out; in that case `primes` still multiplies (with `cofactor`) back to |n|,
// but `cofactor` > 1 is an unfactored composite.
struct Factorization {
    std::vector<std::pair<Integer, int>> primes; // (p, exponent), p ascending
    Integer cofactor = 1;
    bool complete = true;
};

Factorization factor(Integer n, std::uint64_t rho_budget = 8'000'000);

// All positive divisors of the factored integer, unordered, or nullopt when
// the count would exceed `cap` (guards against highly composite inputs).
std::optional<std::vector<Integer>> divisors(const Factorization& f, std::size_t cap);

// All rational roots of c[0] + c[1] x + ... + c[4] x^4 with integer
// coefficients (degree <= 4, trailing zero coefficients allowed).  Exact and
// complete.  Small trailing/leading coefficients take the classical
// divisor-enumeration route; otherwise an exact Sturm isolation plus
// continued-fraction reconstruction avoids factoring large smooth integers.
std::vector<Rational> rational_roots_quartic(const std::array<Integer, 5>& c);

// log |z| for arbitrarily large z (natural log); log 0 returns -inf.
double log_abs(const Integer& z);

} // namespace heronq
