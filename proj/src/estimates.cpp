#include "primezeta/estimates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace primezeta {

namespace {

double reciprocal_log(double t) { return 1.0 / std::log(t); }

double simpson(double a, double fa, double m, double fm, double b, double fb) {
    (void)m;
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(double a, double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = reciprocal_log(lm), frm = reciprocal_log(rm);
    const double left = simpson(a, fa, lm, flm, m, fm);
    const double right = simpson(m, fm, rm, frm, b, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

// Adaptive Simpson integral of 1/ln t over [a, b], absolute tolerance tol.
double integrate_reciprocal_log(double a, double b, double tol) {
    if (b <= a) return 0.0;
    const double fa = reciprocal_log(a), fb = reciprocal_log(b);
    const double m = 0.5 * (a + b), fm = reciprocal_log(m);
    const double whole = simpson(a, fa, m, fm, b, fb);
    return adaptive_step(a, fa, b, fb, m, fm, whole, tol, 48);
}

} // namespace

double li_gauss(double x, double tolerance) {
    if (!(x >= 2.0))
        throw std::invalid_argument("li_gauss requires x >= 2, got " + std::to_string(x));
    if (!(tolerance > 0.0))
        throw std::invalid_argument("li_gauss requires a positive tolerance");
    return integrate_reciprocal_log(2.0, x, tolerance);
}

double li_asymptotic(double x) {
    if (!(x > 1.0))
        throw std::invalid_argument("li_asymptotic requires x > 1, got " + std::to_string(x));
    return x / std::log(x);
}

double pnt_ratio(long long x, IndicatorMode mode) {
    if (x < 3) throw std::invalid_argument("pnt_ratio requires x >= 3");
    return static_cast<double>(count_primes(x, 2, mode)) /
           li_asymptotic(static_cast<double>(x));
}

double pi_bound_envelope(double x, PiBoundKind kind, bool sqrt_product_variant) {
    const double lx = std::log(x);
    if (kind == PiBoundKind::schoenfeld_pi) {
        const double inv8pi = 1.0 / (8.0 * std::numbers::pi);
        return sqrt_product_variant ? std::sqrt(x * lx) * inv8pi
                                    : std::sqrt(x) * lx * inv8pi;
    }
    return 0.2795 * x * std::pow(lx, -0.75) * std::exp(-std::sqrt(lx / 6.455));
}

std::vector<BoundReport> check_pi_bound(long long x_lo, long long x_hi, long long step,
                                        PiBoundKind kind, bool sqrt_product_variant,
                                        double li_tolerance, IndicatorMode mode) {
    const long long validity = kind == PiBoundKind::schoenfeld_pi ? 2657 : 2;
    if (x_lo < validity)
        throw std::invalid_argument("bound validity starts at x = " + std::to_string(validity));
    if (step < 1 || x_hi < x_lo)
        throw std::invalid_argument("bound check requires step >= 1 and x_hi >= x_lo");

    std::vector<BoundReport> out;
    long long pi_count = count_primes(x_lo, 2, mode);
    double li = li_gauss(static_cast<double>(x_lo), li_tolerance);
    long long prev = x_lo;
    for (long long x = x_lo; x <= x_hi; x += step) {
        if (x != prev) {
            for (long long j = prev + 1; j <= x; ++j)
                pi_count += discriminate(static_cast<double>(j), mode);
            // Running integral keeps per-segment quadrature cost flat; each
            // segment honors li_tolerance, so accumulated drift stays orders of
            // magnitude under the bound margins on the tested ranges.
            li += integrate_reciprocal_log(static_cast<double>(prev),
                                           static_cast<double>(x), li_tolerance);
            prev = x;
        }
        BoundReport r{};
        r.x = x;
        r.lhs = std::fabs(static_cast<double>(pi_count) - li);
        r.rhs = pi_bound_envelope(static_cast<double>(x), kind, sqrt_product_variant);
        r.holds = r.lhs < r.rhs;
        r.margin = r.rhs - r.lhs;
        r.kind = kind;
        r.sqrt_product_variant = sqrt_product_variant;
        out.push_back(r);
    }
    return out;
}

} // namespace primezeta
