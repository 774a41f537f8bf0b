#pragma once

#include <complex>

#include "primezeta/primes.hpp"

namespace primezeta {

// Which truncated evaluation a modulus refers to.
enum class ZetaKind { full, primes, composites, split_sum };

// Truncated alternating-series evaluation on the right half plane:
// 1/(1 - 2^(1-s)) * sum_{n=1}^{n_max} (-1)^(n-1) exp(-s ln n), s = sigma + i tau.
// Requires sigma > 0 and n_max >= 1. Throws PoleError when |1 - 2^(1-s)| <= 1e-9.
// The compensated flag switches the ascending summation to Kahan compensation
// (useful when tau is far above n_max and cancellation is severe).
std::complex<double> zeta_truncated(double sigma, double tau, long long n_max,
                                    bool compensated = false);

// Partial sums keeping only terms whose index is prime (respectively
// composite, which includes n = 1); surviving terms keep sign (-1)^(n-1) and
// both share the alternating-series prefactor. The sign exponent is evaluated
// as written, n*g - 1 with g the survival gate, which reduces to n - 1
// exactly on surviving terms.
std::complex<double> zeta_truncated_primes(double sigma, double tau, long long n_max,
                                           IndicatorMode mode = IndicatorMode::optimized);
std::complex<double> zeta_truncated_composites(double sigma, double tau, long long n_max,
                                               IndicatorMode mode = IndicatorMode::optimized);

// Sum of the prime and composite partial evaluations; an exact partition of
// the full sum up to floating-point regrouping.
std::complex<double> zeta_split_sum(double sigma, double tau, long long n_max,
                                    IndicatorMode mode = IndicatorMode::optimized);

// re^2 + im^2 of the selected evaluation.
double modulus_squared(double sigma, double tau, long long n_max,
                       ZetaKind which = ZetaKind::full);

// 1 / modulus_squared of the full evaluation; throws OverflowGuard when the
// squared modulus is below the 1e-300 floor.
double reciprocal_modulus_squared(double sigma, double tau, long long n_max);

} // namespace primezeta
