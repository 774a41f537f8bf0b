#pragma once

#include <vector>

#include "primezeta/primes.hpp"

namespace primezeta {

/// One row of a second Chebyshev function bound check.
struct PsiBoundReport {
    long long x = 0;      ///< integer argument checked
    double psi = 0.0;     ///< indicator-driven psi(x)
    double lhs = 0.0;     ///< |psi(x) - x|
    double rhs = 0.0;     ///< sqrt(x) * ln(x)^2 / (8 pi)
    bool holds = false;   ///< lhs < rhs (strict)
    double margin = 0.0;  ///< rhs - lhs
};

/// Second Chebyshev function: sum of ln p over prime powers p^k <= x.
/// Classic double loop -- for each prime q <= x, add ln q once per power of q
/// that fits under x. Requires x >= 2.
double psi_exact(double x, IndicatorMode mode = IndicatorMode::optimized);

/// Same quantity assembled through the prime indicator at every integer:
/// composites contribute a gated zero instead of being skipped, and the
/// power count comes from a logarithm ratio. Produces bitwise-identical
/// results to psi_exact because every floating-point contribution is the
/// same value added in the same order.
double psi_approx(double x, IndicatorMode mode = IndicatorMode::optimized);

/// Check |psi(x) - x| < sqrt(x) * ln(x)^2 / (8 pi) for integer x in
/// [x_lo, x_hi] with the given stride. The envelope is asymptotic: small
/// arguments violate it, so callers asserting `holds` should start around
/// x >= 74. Requires 2 <= x_lo <= x_hi and step >= 1.
std::vector<PsiBoundReport> check_psi_bound(long long x_lo, long long x_hi,
                                            long long step = 1,
                                            IndicatorMode mode = IndicatorMode::optimized);

} // namespace primezeta
