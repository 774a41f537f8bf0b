#include "primezeta/action.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "primezeta/errors.hpp"
#include "primezeta/parallel.hpp"

namespace primezeta {

namespace {

constexpr double kActionCoeff = 0.375 * std::numbers::pi;          // 3 pi / 8
constexpr double kEnergyCoeff = 0.3125;                            // 5 / 16
constexpr double kProductCoeff = 15.0 * std::numbers::pi / 128.0;  // (5/16)(3 pi/8)
constexpr double kInf = std::numeric_limits<double>::infinity();

// Grid nodes are snapped to 1e-10 so decimal windows produce the decimal
// literals they name (0.1 + 2*0.1 reads back as 0.3).
double snap_node(double x) { return std::round(x * 1e10) / 1e10; }

long long grid_count(const GridWindow& w) {
    if (!(w.step > 0.0))
        throw std::invalid_argument("grid step must be positive");
    if (!(w.hi >= w.lo))
        throw std::invalid_argument("grid window requires hi >= lo");
    return std::llround((w.hi - w.lo) / w.step) + 1;
}

double grid_node(const GridWindow& w, long long k) {
    return snap_node(w.lo + static_cast<double>(k) * w.step);
}

double lagrangian(double t, double m2) {
    const double v = trajectory_velocity(t, m2);
    const double x = trajectory(t, m2);
    return 0.5 * (v * v - x * x);
}

double composite_simpson(double m2, double a, double b, long long intervals) {
    const double h = (b - a) / static_cast<double>(intervals);
    double sum = lagrangian(a, m2) + lagrangian(b, m2);
    for (long long k = 1; k < intervals; ++k) {
        const double w = (k % 2 == 1) ? 4.0 : 2.0;
        sum += w * lagrangian(a + static_cast<double>(k) * h, m2);
    }
    return sum * h / 3.0;
}

// Vertex offset (in grid-step units) of the parabola through three equally
// spaced samples with the middle one lowest. Falls back to the node when the
// curvature is non-positive or non-finite.
double parabolic_offset(double y0, double y1, double y2) {
    const double denom = y0 - 2.0 * y1 + y2;
    if (!std::isfinite(denom) || denom <= 0.0) return 0.0;
    const double offset = 0.5 * (y0 - y2) / denom;
    return std::clamp(offset, -1.0, 1.0);
}

ActionSample make_sample(double sigma, double tau, long long n_max) {
    const double m2 = modulus_squared(sigma, tau, n_max);
    ActionSample s{};
    s.sigma = sigma;
    s.tau = tau;
    s.action = kActionCoeff * m2 * m2;
    s.log_action = std::log(s.action);
    s.omega = tau - sigma;
    s.eta = tau + sigma;
    return s;
}

} // namespace

double trajectory(double t, double m2) {
    return std::cos(t) * (1.0 + m2 * std::sin(t));
}

double trajectory_velocity(double t, double m2) {
    return -std::sin(t) + m2 * std::cos(2.0 * t);
}

double action_numeric_m2(double m2, double t_i, double t_f, double quad_tol) {
    if (!(quad_tol > 0.0))
        throw std::invalid_argument("quadrature tolerance must be positive");
    const double coarse = composite_simpson(m2, t_i, t_f, 4096);
    const double fine = composite_simpson(m2, t_i, t_f, 8192);
    const double achieved = std::fabs(fine - coarse) / 15.0;
    if (achieved > quad_tol)
        throw QuadratureError("quadrature did not reach tolerance " +
                              std::to_string(quad_tol) +
                              "; achieved error estimate " + std::to_string(achieved));
    return fine;
}

double action_numeric(double sigma, double tau, long long n_max, double t_i,
                      double t_f, double quad_tol) {
    return action_numeric_m2(modulus_squared(sigma, tau, n_max), t_i, t_f, quad_tol);
}

double action_closed(double m2) { return kActionCoeff * m2 * m2; }

double action_closed_point(double sigma, double tau, long long n_max) {
    return action_closed(modulus_squared(sigma, tau, n_max));
}

double action_general(double m2, double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("generalized action requires sigma > 0");
    if (m2 < 0.0)
        throw std::invalid_argument("squared modulus cannot be negative");
    if (m2 == 0.0) return 0.0; // limit value of m2^(1/sigma)
    return kActionCoeff * std::pow(m2, 1.0 / sigma);
}

double action_general_point(double sigma, double tau, long long n_max) {
    return action_general(modulus_squared(sigma, tau, n_max), sigma);
}

double energy_gap(double m2, double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("energy gap requires sigma > 0");
    if (m2 < 0.0)
        throw std::invalid_argument("squared modulus cannot be negative");
    if (m2 == 0.0) return 0.0;
    return kEnergyCoeff * std::pow(m2, 1.0 / sigma);
}

double energy_gap_point(double sigma, double tau, long long n_max) {
    return energy_gap(modulus_squared(sigma, tau, n_max), sigma);
}

double energy_action_product(double sigma, double tau, long long n_max) {
    if (!(sigma > 0.0 && sigma < 1.0))
        throw std::invalid_argument("symmetric product requires 0 < sigma < 1");
    // Canonicalize through the upper abscissa: 1 - x is exact for any double
    // in [0.5, 1] (Sterbenz), so deriving lo from hi hands sigma and its
    // mirror the bit-identical (lo, hi) pair and the symmetry holds bitwise.
    const double mirror = 1.0 - sigma;
    const double hi = std::max(sigma, mirror);
    double lo = 1.0 - hi;
    if (lo <= 0.0) lo = std::min(sigma, mirror); // sigma within one ulp of 0 or 1
    const double m2_lo = modulus_squared(lo, tau, n_max);
    const double m2_hi = modulus_squared(hi, tau, n_max);
    const double p_lo = m2_lo == 0.0 ? 0.0 : std::pow(m2_lo, 1.0 / lo);
    const double p_hi = m2_hi == 0.0 ? 0.0 : std::pow(m2_hi, 1.0 / hi);
    return kProductCoeff * p_lo * p_hi;
}

OmegaEtaScan scan_omega_eta(GridWindow sigma_window, GridWindow tau_window,
                            long long n_max, double zoom_step,
                            double zoom_halfwidth, int threads) {
    if (!(zoom_step > 0.0) || !(zoom_halfwidth > 0.0))
        throw std::invalid_argument("zoom step and halfwidth must be positive");
    const long long ns = grid_count(sigma_window);
    const long long nt = grid_count(tau_window);

    OmegaEtaScan result{};
    result.n_max = n_max;
    result.coarse.resize(static_cast<size_t>(ns * nt));
    // tau-major layout so the argmin pass resolves ties toward the smallest
    // tau, then the smallest sigma.
    parallel_for_index(ns * nt, threads, [&](long long idx) {
        const long long it = idx / ns;
        const long long is = idx % ns;
        result.coarse[static_cast<size_t>(idx)] =
            make_sample(grid_node(sigma_window, is), grid_node(tau_window, it), n_max);
    });

    long long best = 0;
    for (long long idx = 1; idx < ns * nt; ++idx)
        if (result.coarse[static_cast<size_t>(idx)].log_action <
            result.coarse[static_cast<size_t>(best)].log_action)
            best = idx;
    const long long best_it = best / ns;
    if (best_it == 0 || best_it == nt - 1)
        throw NoMinimumError("coarse scan argmin sits on the tau window edge at tau = " +
                             std::to_string(result.coarse[static_cast<size_t>(best)].tau));
    result.sigma_coarse = result.coarse[static_cast<size_t>(best)].sigma;
    result.tau_coarse = result.coarse[static_cast<size_t>(best)].tau;
    result.eta_star = result.tau_coarse + result.sigma_coarse;

    const double omega_center = result.tau_coarse - result.sigma_coarse;
    const long long nz = std::llround(2.0 * zoom_halfwidth / zoom_step) + 1;
    result.zoom.resize(static_cast<size_t>(nz));
    std::vector<double> ys(static_cast<size_t>(nz), kInf);
    parallel_for_index(nz, threads, [&](long long k) {
        const double omega =
            (omega_center - zoom_halfwidth) + static_cast<double>(k) * zoom_step;
        const double sig = (result.eta_star - omega) / 2.0;
        double y = kInf;
        if (sig > 1e-9) {
            const double tau = (result.eta_star + omega) / 2.0;
            const double m2 = modulus_squared(sig, tau, n_max);
            y = std::log(kActionCoeff * m2 * m2);
        }
        ys[static_cast<size_t>(k)] = y;
        result.zoom[static_cast<size_t>(k)] = {omega, y};
    });

    long long zi = -1;
    for (long long k = 0; k < nz; ++k)
        if (std::isfinite(ys[static_cast<size_t>(k)]) &&
            (zi < 0 || ys[static_cast<size_t>(k)] < ys[static_cast<size_t>(zi)]))
            zi = k;
    if (zi <= 0 || zi >= nz - 1 ||
        !std::isfinite(ys[static_cast<size_t>(zi - 1)]) ||
        !std::isfinite(ys[static_cast<size_t>(zi + 1)]))
        throw NoMinimumError("zoom scan found no interior minimum along eta = " +
                             std::to_string(result.eta_star));
    const double offset = parabolic_offset(ys[static_cast<size_t>(zi - 1)],
                                           ys[static_cast<size_t>(zi)],
                                           ys[static_cast<size_t>(zi + 1)]);
    result.omega_star = result.zoom[static_cast<size_t>(zi)].first + offset * zoom_step;
    return result;
}

RootEstimate solve_root(double omega_star, double eta_star, long long n_max) {
    RootEstimate r{};
    r.sigma = (eta_star - omega_star) / 2.0;
    r.tau = (eta_star + omega_star) / 2.0;
    r.residual = std::sqrt(modulus_squared(r.sigma, r.tau, n_max));
    r.omega_star = omega_star;
    r.eta_star = eta_star;
    r.n_max = n_max;
    r.source = RootSource::omega_eta_scan;
    return r;
}

std::vector<SigmaArgmin> parametric_sigma_scan(const std::vector<double>& taus,
                                               GridWindow sigma_window,
                                               long long n_max,
                                               double zoom_step_divisor,
                                               int threads) {
    if (!(zoom_step_divisor > 0.0))
        throw std::invalid_argument("zoom step divisor must be positive");
    const long long ns = grid_count(sigma_window);
    if (ns < 1) throw NoMinimumError("empty sigma window");

    std::vector<SigmaArgmin> out;
    out.reserve(taus.size());
    for (const double tau : taus) {
        SigmaArgmin row{};
        row.tau = tau;
        row.coarse_curve.resize(static_cast<size_t>(ns));
        parallel_for_index(ns, threads, [&](long long k) {
            row.coarse_curve[static_cast<size_t>(k)] =
                make_sample(grid_node(sigma_window, k), tau, n_max);
        });
        long long best = 0;
        for (long long k = 1; k < ns; ++k)
            if (row.coarse_curve[static_cast<size_t>(k)].log_action <
                row.coarse_curve[static_cast<size_t>(best)].log_action)
                best = k;
        row.sigma_coarse = row.coarse_curve[static_cast<size_t>(best)].sigma;

        const double zoom_step = sigma_window.step / zoom_step_divisor;
        const GridWindow zoom{row.sigma_coarse - sigma_window.step,
                              row.sigma_coarse + sigma_window.step, zoom_step};
        const long long nz = grid_count(zoom);
        for (long long k = 0; k < nz; ++k) {
            const double sig = grid_node(zoom, k);
            if (sig <= 1e-12) continue; // clip at the strip boundary only
            row.zoom_curve.push_back(make_sample(sig, tau, n_max));
        }
        if (row.zoom_curve.empty())
            throw NoMinimumError("sigma zoom window contains no valid node");
        size_t zbest = 0;
        for (size_t k = 1; k < row.zoom_curve.size(); ++k)
            if (row.zoom_curve[k].log_action < row.zoom_curve[zbest].log_action)
                zbest = k;
        row.sigma_zoom = row.zoom_curve[zbest].sigma;
        row.residual = std::sqrt(modulus_squared(row.sigma_zoom, tau, n_max));
        row.root_like = row.residual <= kRootResidualThreshold;
        out.push_back(std::move(row));
    }
    return out;
}

ProductScan product_tau_scan(double sigma, GridWindow tau_window, long long n_max,
                             int threads) {
    const long long nt = grid_count(tau_window);
    ProductScan scan{};
    scan.samples.resize(static_cast<size_t>(nt));
    parallel_for_index(nt, threads, [&](long long k) {
        const double tau = grid_node(tau_window, k);
        const double value = energy_action_product(sigma, tau, n_max);
        ActionSample s{};
        s.sigma = sigma;
        s.tau = tau;
        s.action = value; // the symmetric product, not the closed-form action
        s.log_action = std::log(value);
        s.omega = tau - sigma;
        s.eta = tau + sigma;
        scan.samples[static_cast<size_t>(k)] = s;
    });
    for (long long k = 1; k + 1 < nt; ++k) {
        const double prev = scan.samples[static_cast<size_t>(k - 1)].action;
        const double here = scan.samples[static_cast<size_t>(k)].action;
        const double next = scan.samples[static_cast<size_t>(k + 1)].action;
        if (here < prev && here < next) {
            scan.minima_tau.push_back(scan.samples[static_cast<size_t>(k)].tau);
            scan.minima_value.push_back(here);
        }
    }
    return scan;
}

LogLogScan loglog_scan(double sigma, double tau_lo, double tau_hi,
                       long long n_points, long long n_max) {
    if (n_points < 2)
        throw std::invalid_argument("log-log scan needs at least two samples");
    if (!(tau_hi > tau_lo))
        throw std::invalid_argument("log-log scan requires tau_hi > tau_lo");
    LogLogScan scan{};
    const double step = (tau_hi - tau_lo) / static_cast<double>(n_points - 1);
    for (long long j = 0; j < n_points; ++j) {
        const double tau = tau_lo + static_cast<double>(j) * step;
        const double m2 = modulus_squared(sigma, tau, n_max);
        if (m2 <= 0.0) continue; // log undefined; cannot happen off exact zeros
        scan.tau.push_back(tau);
        scan.log_m.push_back(0.5 * std::log(m2));
        scan.log_action.push_back(std::log(action_general(m2, sigma)));
    }
    const size_t n = scan.log_m.size();
    if (n < 2) throw NoMinimumError("log-log scan collected fewer than two samples");
    double sx = 0, sy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += scan.log_action[i];
        sy += scan.log_m[i];
    }
    const double mx = sx / static_cast<double>(n), my = sy / static_cast<double>(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) {
        const double dx = scan.log_action[i] - mx, dy = scan.log_m[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    scan.fit.slope = sxy / sxx;
    scan.fit.intercept = my - scan.fit.slope * mx;
    scan.fit.r2 = (sxy * sxy) / (sxx * syy);
    return scan;
}

FineScanResult fine_tau_scan(double sigma, double tau_center, double halfwidth,
                             double step, long long n_max) {
    if (!(step > 0.0) || !(halfwidth > 0.0))
        throw std::invalid_argument("fine scan requires positive step and halfwidth");
    const long long n = std::llround(2.0 * halfwidth / step) + 1;
    std::vector<double> ys(static_cast<size_t>(n));
    for (long long k = 0; k < n; ++k) {
        const double tau = (tau_center - halfwidth) + static_cast<double>(k) * step;
        ys[static_cast<size_t>(k)] = std::log(modulus_squared(sigma, tau, n_max));
    }
    long long best = 0;
    for (long long k = 1; k < n; ++k)
        if (ys[static_cast<size_t>(k)] < ys[static_cast<size_t>(best)]) best = k;
    if (best == 0 || best == n - 1)
        throw NoMinimumError("fine scan argmin sits on the window edge");
    const double offset = parabolic_offset(ys[static_cast<size_t>(best - 1)],
                                           ys[static_cast<size_t>(best)],
                                           ys[static_cast<size_t>(best + 1)]);
    FineScanResult r{};
    r.tau_min = (tau_center - halfwidth) + (static_cast<double>(best) + offset) * step;
    r.residual = std::sqrt(modulus_squared(sigma, r.tau_min, n_max));
    return r;
}

} // namespace primezeta
