#include "primezeta/euler.hpp"

#include <cmath>
#include <stdexcept>

namespace primezeta {

namespace {

void require_convergent(double sigma) {
    if (!(sigma > 1.0))
        throw std::invalid_argument("real series/products require sigma > 1");
}

} // namespace

double zeta_series_real(double sigma, long long n_terms) {
    require_convergent(sigma);
    if (n_terms < 1) throw std::invalid_argument("series needs at least one term");
    double sum = 0.0;
    for (long long n = 1; n <= n_terms; ++n)
        sum += std::pow(static_cast<double>(n), -sigma);
    return sum;
}

double euler_product_primes(double sigma, long long h_primes, IndicatorMode mode) {
    require_convergent(sigma);
    if (h_primes < 1) throw std::invalid_argument("product needs at least one prime");
    double product = 1.0;
    long long found = 0;
    for (long long q = 2; found < h_primes; ++q) {
        if (discriminate(static_cast<double>(q), mode) == 1) {
            const double p_pow = std::pow(static_cast<double>(q), sigma);
            product *= p_pow / (p_pow - 1.0);
            ++found;
        }
    }
    return product;
}

double euler_product_gated(double sigma, long long h_primes, IndicatorMode mode) {
    require_convergent(sigma);
    if (h_primes < 1) throw std::invalid_argument("product needs at least one prime");
    const long long q_max = nth_prime(h_primes, mode);
    double product = 1.0;
    for (long long q = 2; q <= q_max; ++q) {
        const int lambda = discriminate(static_cast<double>(q), mode);
        if (lambda == 1) {
            const double g_pow = std::pow(generate(static_cast<double>(q), mode), sigma);
            product *= g_pow / (g_pow - 1.0);
        } else {
            product *= 1.0; // exact no-op at composites
        }
    }
    return product;
}

} // namespace primezeta
