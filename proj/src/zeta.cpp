#include "primezeta/zeta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "primezeta/errors.hpp"

namespace primezeta {

namespace {

constexpr double kPoleGuard = 1e-9;
constexpr double kReciprocalFloor = 1e-300;

std::complex<double> checked_prefactor_denominator(double sigma, double tau) {
    const std::complex<double> s(sigma, tau);
    const std::complex<double> denom =
        1.0 - std::exp((1.0 - s) * std::numbers::ln2);
    if (std::abs(denom) <= kPoleGuard)
        throw PoleError("prefactor 1/(1 - 2^(1-s)) has a pole at s = 1 and along "
                        "sigma = 1, tau = 2 pi k / ln 2; |denominator| <= 1e-9 at "
                        "sigma = " + std::to_string(sigma) +
                        ", tau = " + std::to_string(tau));
    return denom;
}

void require_strip(double sigma, long long n_max) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("evaluation requires sigma > 0, got " +
                                    std::to_string(sigma));
    if (n_max < 1)
        throw std::invalid_argument("truncation bound must be >= 1");
}

// Sign (-1)^e for an integer exponent that may be negative.
double alternating_sign(long long e) { return (e % 2 == 0) ? 1.0 : -1.0; }

struct KahanComplex {
    std::complex<double> sum{0.0, 0.0};
    double c_re = 0.0, c_im = 0.0;
    void add(const std::complex<double>& t) {
        const double yr = t.real() - c_re;
        const double tr = sum.real() + yr;
        c_re = (tr - sum.real()) - yr;
        const double yi = t.imag() - c_im;
        const double ti = sum.imag() + yi;
        c_im = (ti - sum.imag()) - yi;
        sum = {tr, ti};
    }
};

// Shared kernel: survival gate g(n) in {0,1} selects terms; gate_all keeps all.
enum class TermGate { all, primes, composites };

std::complex<double> truncated_sum(double sigma, double tau, long long n_max,
                                   TermGate gate, IndicatorMode mode,
                                   bool compensated) {
    require_strip(sigma, n_max);
    const std::complex<double> denom = checked_prefactor_denominator(sigma, tau);
    const std::complex<double> s(sigma, tau);
    std::complex<double> plain{0.0, 0.0};
    KahanComplex kahan;
    for (long long n = 1; n <= n_max; ++n) {
        long long g = 1;
        if (gate != TermGate::all) {
            const long long lambda = discriminate(static_cast<double>(n), mode);
            g = gate == TermGate::primes ? lambda : 1 - lambda;
        }
        const double sign = alternating_sign(n * g - 1);
        const std::complex<double> term =
            static_cast<double>(g) * sign *
            std::exp(-s * std::log(static_cast<double>(n)));
        if (compensated)
            kahan.add(term);
        else
            plain += term;
    }
    return (compensated ? kahan.sum : plain) / denom;
}

} // namespace

std::complex<double> zeta_truncated(double sigma, double tau, long long n_max,
                                    bool compensated) {
    return truncated_sum(sigma, tau, n_max, TermGate::all, IndicatorMode::optimized,
                         compensated);
}

std::complex<double> zeta_truncated_primes(double sigma, double tau, long long n_max,
                                           IndicatorMode mode) {
    return truncated_sum(sigma, tau, n_max, TermGate::primes, mode, false);
}

std::complex<double> zeta_truncated_composites(double sigma, double tau,
                                               long long n_max, IndicatorMode mode) {
    return truncated_sum(sigma, tau, n_max, TermGate::composites, mode, false);
}

std::complex<double> zeta_split_sum(double sigma, double tau, long long n_max,
                                    IndicatorMode mode) {
    return zeta_truncated_primes(sigma, tau, n_max, mode) +
           zeta_truncated_composites(sigma, tau, n_max, mode);
}

double modulus_squared(double sigma, double tau, long long n_max, ZetaKind which) {
    std::complex<double> z;
    switch (which) {
    case ZetaKind::full:       z = zeta_truncated(sigma, tau, n_max); break;
    case ZetaKind::primes:     z = zeta_truncated_primes(sigma, tau, n_max); break;
    case ZetaKind::composites: z = zeta_truncated_composites(sigma, tau, n_max); break;
    case ZetaKind::split_sum:  z = zeta_split_sum(sigma, tau, n_max); break;
    }
    return z.real() * z.real() + z.imag() * z.imag();
}

double reciprocal_modulus_squared(double sigma, double tau, long long n_max) {
    const double m2 = modulus_squared(sigma, tau, n_max, ZetaKind::full);
    if (m2 < kReciprocalFloor)
        throw OverflowGuard("squared modulus below the 1e-300 reciprocal floor at "
                            "sigma = " + std::to_string(sigma) +
                            ", tau = " + std::to_string(tau));
    return 1.0 / m2;
}

} // namespace primezeta
