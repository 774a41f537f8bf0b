#pragma once

#include <vector>

#include "primezeta/primes.hpp"

namespace primezeta {

// Which explicit inequality bounds the prime-count deviation |C(x,2) - Li(x)|.
enum class PiBoundKind { schoenfeld_pi, trudgian };

// One sampled comparison of the prime-count deviation against an envelope.
struct BoundReport {
    long long x;
    double lhs;                // |C(x, 2) - Li(x)|
    double rhs;                // envelope value at x
    bool holds;                // lhs < rhs
    double margin;             // rhs - lhs
    PiBoundKind kind;
    bool sqrt_product_variant; // envelope used sqrt(x ln x) instead of sqrt(x) ln x
};

// Offset logarithmic integral: integral of dt/ln t from 2 to x, adaptive
// Simpson quadrature to the given absolute tolerance. Requires x >= 2.
double li_gauss(double x, double tolerance = 1e-8);

// First-order asymptotic x / ln x. Requires x > 1.
double li_asymptotic(double x);

// C(x, 2) / (x / ln x). Requires x >= 3.
double pnt_ratio(long long x, IndicatorMode mode = IndicatorMode::optimized);

// Envelope value at x for the selected bound.
//  - schoenfeld_pi: sqrt(x) ln(x) / (8 pi), or sqrt(x ln x) / (8 pi) with the
//    sqrt-product variant flag
//  - trudgian:      0.2795 x (ln x)^(-3/4) exp(-sqrt(ln x / 6.455))
double pi_bound_envelope(double x, PiBoundKind kind, bool sqrt_product_variant = false);

// Samples x = x_lo, x_lo + step, ... <= x_hi and reports the deviation of the
// exact prime count from li_gauss against the selected envelope. Rejects x_lo
// below the bound's validity threshold (2657 for schoenfeld_pi, 2 for trudgian).
std::vector<BoundReport> check_pi_bound(long long x_lo, long long x_hi, long long step,
                                        PiBoundKind kind,
                                        bool sqrt_product_variant = false,
                                        double li_tolerance = 1e-8,
                                        IndicatorMode mode = IndicatorMode::optimized);

} // namespace primezeta
