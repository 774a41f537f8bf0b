#include "primezeta/primes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace primezeta {

namespace {

constexpr double kMaxExactInteger = 9007199254740992.0; // 2^53

void require_nonnegative(double u) {
    if (!(u >= 0.0))
        throw std::invalid_argument("argument must be a non-negative real, got " +
                                    std::to_string(u));
    if (u > kMaxExactInteger)
        throw std::invalid_argument("argument exceeds exact integer range of double");
}

int square01(int s) { return s * s; } // maps {-1,0,1} to {0,1}

// Integrality-and-range gate: 0 at u = 0, u = 1 and non-integers, else 1.
int gate_omega0(double u) {
    const double au = std::fabs(u);
    return square01(sign_compare(au, 0.0)) * square01(sign_compare(au, 1.0)) *
           (1 - sign_compare(fractional_part(u), 0.0));
}

int discriminate_literal(double u) {
    const int omega0 = gate_omega0(u);
    // A zero gate forces the result to zero regardless of the double product,
    // so the loops are skipped only in that case (pure multiplication by zero).
    if (omega0 == 0) return 0;
    const double au = std::fabs(u);
    int product = 1;
    const long long h1 = outer_bound(u);
    for (long long m = 2; m <= h1; ++m) {
        const int omega1 = square01(sign_compare(au, 2.0 * static_cast<double>(m)));
        const long long h2 = inner_bound(u, m);
        for (long long n = 2; n <= h2; ++n) {
            const double odd_product =
                (2.0 * static_cast<double>(m) - 1.0) * (2.0 * static_cast<double>(n) - 1.0);
            const int omega2 = square01(sign_compare(au, odd_product));
            product *= omega1 * omega2;
        }
    }
    return omega0 * product;
}

int discriminate_optimized(double u) {
    if (fractional_part(u) != 0.0) return 0;
    const long long v = static_cast<long long>(u);
    if (v < 2) return 0;
    if (v == 2) return 1;
    if (v % 2 == 0) return 0;
    for (long long d = 3; d * d <= v; d += 2)
        if (v % d == 0) return 0;
    return 1;
}

} // namespace

int sign_compare(double a, double b) { return (a > b) - (a < b); }

double fractional_part(double u) { return u - std::floor(u); }

long long outer_bound(double u) {
    return 1 + static_cast<long long>(std::floor(u / 2.0));
}

long long inner_bound(double u, long long m) {
    const double dm = static_cast<double>(m);
    return 1 + static_cast<long long>(std::floor((u + 2.0 * dm - 1.0) /
                                                 (2.0 * (2.0 * dm - 1.0))));
}

AuxComponents aux_components(double u, long long m, long long n) {
    require_nonnegative(u);
    if (m < 2 || n < 2)
        throw std::invalid_argument("auxiliary components require m >= 2 and n >= 2");
    AuxComponents a{};
    a.delta = fractional_part(u);
    a.h1 = outer_bound(u);
    a.h2 = inner_bound(u, m);
    const double au = std::fabs(u);
    const double odd_product =
        (2.0 * static_cast<double>(m) - 1.0) * (2.0 * static_cast<double>(n) - 1.0);
    a.eta = sign_compare(au, odd_product);
    a.omega0 = gate_omega0(u);
    a.omega1 = square01(sign_compare(au, 2.0 * static_cast<double>(m)));
    a.omega2 = square01(a.eta);
    return a;
}

int discriminate(double u, IndicatorMode mode) {
    require_nonnegative(u);
    return mode == IndicatorMode::literal ? discriminate_literal(u)
                                          : discriminate_optimized(u);
}

double generate(double u, IndicatorMode mode) {
    return u * static_cast<double>(discriminate(u, mode));
}

std::pair<double, double> discrete_derivatives(long long u, IndicatorMode mode) {
    if (u < 0) throw std::invalid_argument("discrete derivatives require u >= 0");
    const double g0 = generate(static_cast<double>(u), mode);
    const double g1 = generate(static_cast<double>(u + 1), mode);
    const double g2 = generate(static_cast<double>(u + 2), mode);
    return {g1 - g0, g2 - 2.0 * g1 + g0};
}

long long count_primes(long long u, long long u_in, IndicatorMode mode) {
    if (u_in < 0 || u_in > u)
        throw std::invalid_argument("count requires 0 <= u_in <= u");
    long long total = 0;
    for (long long j = u_in; j <= u; ++j)
        total += discriminate(static_cast<double>(j), mode);
    return total;
}

long long nth_prime(long long j, IndicatorMode mode) {
    if (j < 1) throw std::invalid_argument("prime index must be >= 1");
    long long seen = 0;
    for (long long u = 2;; ++u) {
        if (discriminate(static_cast<double>(u), mode) == 1 && ++seen == j)
            return u;
    }
}

std::vector<long long> progression_primes(long long a, long long q, long long limit,
                                          IndicatorMode mode) {
    if (a < 2 || a > q)
        throw std::invalid_argument("progression requires 2 <= a <= q");
    if (limit < a)
        throw std::invalid_argument("progression requires limit >= a");
    std::vector<long long> out;
    for (long long x = a; x <= limit; x += q)
        if (discriminate(static_cast<double>(x), mode) == 1) out.push_back(x);
    return out;
}

int oracle_is_prime(long long u) {
    if (u < 2) return 0;
    for (long long d = 2; d * d <= u; ++d)
        if (u % d == 0) return 0;
    return 1;
}

} // namespace primezeta
