#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heronq/curve.hpp"

namespace heronq {

// #E(F_p) including the point at infinity, by x-enumeration with a
// quadratic-residue table.  The curve is moved to its integral model first.
// Throws BadReduction for p = 2 or p dividing the integral discriminant.
// p must be an odd prime below 2^21 (the enumeration is O(p)).
std::uint64_t count_points_mod_p(const EllipticCurve& curve, std::uint64_t p);

// Primes p ≤ bound with bad reduction (always includes 2 when 2 ≤ bound).
std::vector<std::uint64_t> bad_primes_up_to(const EllipticCurve& curve, std::uint64_t bound);

// S(N,E) = Σ_{p ≤ N good odd prime} (1 − (p−1)/#E(F_p))·log p.
// Per-prime terms are computed in parallel; the fold is serial in ascending
// prime order, so the result is bit-identical to the serial reference.
double mestre_nagao_sum(const EllipticCurve& curve, std::uint64_t N);
double mestre_nagao_sum_serial(const EllipticCurve& curve, std::uint64_t N);

struct SieveThresholds {
    std::uint64_t n1 = 523;
    std::uint64_t n2 = 1979;
    double bound1 = 20.0;
    double bound2 = 28.0;
};

struct SieveReport {
    std::string curve_id;
    double s1 = 0.0;                // S(n1, E)
    std::optional<double> s2;       // S(n2, E); absent when short-circuited
    bool passed = false;            // s1 > bound1 and s2 > bound2
    std::vector<std::uint64_t> bad_primes; // bad primes ≤ n2
    std::optional<std::string> error;      // per-curve failure, stream continues
};

SieveReport sieve_one(const EllipticCurve& curve, const SieveThresholds& t = {});
std::vector<SieveReport> sieve(const std::vector<EllipticCurve>& curves, const SieveThresholds& t = {});

// Worker count: HERONQ_THREADS if set (min 1), else the OpenMP default, else 1.
int effective_threads();

} // namespace heronq
