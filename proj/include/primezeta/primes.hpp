#pragma once

#include <utility>
#include <vector>

namespace primezeta {

// Evaluation strategy for the closed-form prime indicator.
//  - literal:   iterates the full double product over m in [2, h1(u)] and
//               n in [2, h2(u, m)] with no short-circuiting.
//  - optimized: short-circuits on the first vanishing factor and restricts the
//               search to odd trial divisors 2m-1 <= floor(sqrt(u)); output is
//               identical to literal on every input (a tested invariant).
enum class IndicatorMode { literal, optimized };

// Per-(u, m, n) building blocks of the indicator.
struct AuxComponents {
    double delta;    // fractional part of u
    long long h1;    // outer product bound: 1 + floor(u / 2)
    long long h2;    // inner product bound: 1 + floor((u + 2m - 1) / (2(2m - 1)))
    int eta;         // sign comparison of |u| against (2m - 1)(2n - 1)
    int omega0;      // integrality-and-range gate, in {0, 1}
    int omega1;      // even-divisor gate at this m, in {0, 1}
    int omega2;      // odd-divisor gate at this (m, n), in {0, 1}
};

// sign(a - b) with sign(0) = 0.
int sign_compare(double a, double b);

// u - floor(u).
double fractional_part(double u);

// 1 + floor(u / 2).
long long outer_bound(double u);

// 1 + floor((u + 2m - 1) / (2(2m - 1))).
long long inner_bound(double u, long long m);

// All auxiliary components at (u, m, n). Requires u >= 0, m >= 2, n >= 2.
AuxComponents aux_components(double u, long long m, long long n);

// 1 if u is a prime integer; 0 for 0, 1, composites, and non-integers.
// Rejects u < 0 and u beyond exact-integer double range.
int discriminate(double u, IndicatorMode mode = IndicatorMode::optimized);

// u at primes, 0 everywhere else (u * indicator).
double generate(double u, IndicatorMode mode = IndicatorMode::optimized);

// Forward differences of the generator at integer u:
// first  = G(u+1) - G(u)
// second = G(u+2) - 2 G(u+1) + G(u)
std::pair<double, double>
discrete_derivatives(long long u, IndicatorMode mode = IndicatorMode::optimized);

// Number of prime integers j with u_in <= j <= u. Requires 0 <= u_in <= u.
long long count_primes(long long u, long long u_in,
                       IndicatorMode mode = IndicatorMode::optimized);

// The j-th prime (j >= 1), found by advancing the indicator over the integers.
long long nth_prime(long long j, IndicatorMode mode = IndicatorMode::optimized);

// Primes among {a, a + q, a + 2q, ...} not exceeding limit.
// Requires 2 <= a <= q and limit >= a.
std::vector<long long> progression_primes(long long a, long long q, long long limit,
                                          IndicatorMode mode = IndicatorMode::optimized);

// Independent primality check by trial division up to floor(sqrt(u)).
// Deliberately separate from the indicator; used as a test oracle.
int oracle_is_prime(long long u);

} // namespace primezeta
