#pragma once

#include "primezeta/primes.hpp"

namespace primezeta {

// Ascending partial sum of n^(-sigma) for n = 1..n_terms. Requires sigma > 1.
double zeta_series_real(double sigma, long long n_terms);

// Product over the first h_primes primes of p^sigma / (p^sigma - 1), factors
// multiplied in ascending prime order. Requires sigma > 1, h_primes >= 1.
double euler_product_primes(double sigma, long long h_primes,
                            IndicatorMode mode = IndicatorMode::optimized);

// The same product reconstructed without a prime table: runs over every
// integer q = 2 .. nth_prime(h_primes); at indicator 1 the factor is
// G(q)^sigma / (G(q)^sigma - 1) with G the generator, at indicator 0 the
// factor is exactly 1. Bitwise equal to euler_product_primes by construction
// (a tested invariant). Requires sigma > 1, h_primes >= 1.
double euler_product_gated(double sigma, long long h_primes,
                           IndicatorMode mode = IndicatorMode::optimized);

} // namespace primezeta
