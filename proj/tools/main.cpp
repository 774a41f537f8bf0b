// Command-line front end: every library operation is reachable through a
// subcommand that prints a short summary and (for range operations) writes a
// CSV with a documented header. Numbers serialize with 17 significant digits
// so identical configurations re-emit byte-identical files.
#include <cmath>
#include <complex>
#include <numbers>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "primezeta/action.hpp"
#include "primezeta/chebyshev.hpp"
#include "primezeta/errors.hpp"
#include "primezeta/estimates.hpp"
#include "primezeta/euler.hpp"
#include "primezeta/parallel.hpp"
#include "primezeta/random_table.hpp"
#include "primezeta/zeta.hpp"
#include "support.hpp"

namespace {

using namespace primezeta;
using pzcli::CsvTable;
using pzcli::fmt17;
using pzcli::Series;

struct RunConfig {
    long long n_max = 100;
    double sigma_step = 0.1;
    double tau_step = 0.1;
    double zoom_step = 0.001;
    double quad_tol = 1e-8;
    IndicatorMode mode = IndicatorMode::optimized;
    bool sqrt_product_variant = false;
    std::uint64_t seed = 12345;
    std::string output_dir = ".";
    int threads = 1;
    bool plot = false;
};

double snap10(double v) { return std::round(v * 1e10) / 1e10; }

// Inclusive snapped sample points lo, lo+step, ..., hi.
std::vector<double> sample_points(double lo, double hi, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    if (!(hi >= lo)) throw std::invalid_argument("range requires hi >= lo");
    const long long n = std::llround((hi - lo) / step) + 1;
    std::vector<double> xs(static_cast<size_t>(n));
    for (long long k = 0; k < n; ++k)
        xs[static_cast<size_t>(k)] = snap10(lo + static_cast<double>(k) * step);
    return xs;
}

void maybe_plot(const RunConfig& cfg, const std::string& stem, const std::string& title,
                const std::vector<double>& x, const std::vector<Series>& series) {
    if (!cfg.plot) return;
    const auto path = pzcli::write_svg(cfg.output_dir, stem + ".svg", title, x, series);
    std::cout << "plot:  " << path.string() << "\n";
}

void report_csv(const std::filesystem::path& path, size_t rows) {
    std::cout << "wrote " << path.string() << " (" << rows << " rows)\n";
}

// ---------------------------------------------------------------- primes ---

void run_primes_check_single(const RunConfig& cfg, double u) {
    const int lam = discriminate(u, cfg.mode);
    std::cout << "indicator(" << fmt17(u) << ") = " << lam
              << "  generator = " << fmt17(generate(u, cfg.mode)) << "\n";
}

void run_primes_check_range(const RunConfig& cfg, long long from, long long to) {
    if (from < 0 || to < from) throw std::invalid_argument("requires 0 <= from <= to");
    CsvTable t;
    t.header = "u,indicator,generator,gen_diff1,gen_diff2";
    std::vector<double> xs, lam, gen;
    for (long long u = from; u <= to; ++u) {
        const double ud = static_cast<double>(u);
        const int l = discriminate(ud, cfg.mode);
        const double g = generate(ud, cfg.mode);
        const auto [d1, d2] = discrete_derivatives(u, cfg.mode);
        t.rows.push_back(fmt17(ud) + "," + std::to_string(l) + "," + fmt17(g) + "," +
                         fmt17(d1) + "," + fmt17(d2));
        xs.push_back(ud);
        lam.push_back(static_cast<double>(l));
        gen.push_back(g);
    }
    const auto path = pzcli::write_csv(cfg.output_dir, "primes_check.csv", t);
    report_csv(path, t.rows.size());
    maybe_plot(cfg, "primes_check", "prime indicator and generator", xs,
               {{"indicator", lam}, {"generator", gen}});
}

void run_primes_list(const RunConfig& cfg, long long from, long long to,
                     long long residue, long long modulus, bool progression) {
    std::vector<long long> primes;
    if (progression) {
        primes = progression_primes(residue, modulus, to, cfg.mode);
    } else {
        if (from < 0 || to < from) throw std::invalid_argument("requires 0 <= from <= to");
        for (long long u = from; u <= to; ++u)
            if (discriminate(static_cast<double>(u), cfg.mode) == 1) primes.push_back(u);
    }
    CsvTable t;
    t.header = "index,prime";
    std::vector<double> xs, ys;
    for (size_t i = 0; i < primes.size(); ++i) {
        t.rows.push_back(std::to_string(i + 1) + "," + std::to_string(primes[i]));
        xs.push_back(static_cast<double>(i + 1));
        ys.push_back(static_cast<double>(primes[i]));
    }
    const auto path = pzcli::write_csv(cfg.output_dir, "primes_list.csv", t);
    std::cout << primes.size() << " primes\n";
    report_csv(path, t.rows.size());
    maybe_plot(cfg, "primes_list", "primes by index", xs, {{"prime", ys}});
}

void run_primes_count(const RunConfig& cfg, long long from, long long to) {
    std::cout << count_primes(to, from, cfg.mode) << "\n";
}

// ------------------------------------------------------------- estimates ---

void run_estimates_li(const RunConfig& cfg, long long x_lo, long long x_hi,
                      long long step, double li_tol) {
    if (x_lo < 2 || x_hi < x_lo || step < 1)
        throw std::invalid_argument("requires 2 <= x-lo <= x-hi and step >= 1");
    CsvTable t;
    t.header = "x,prime_count,li,li_asymptotic,ratio_li,ratio_asymptotic";
    std::vector<double> xs, cs, lis, asym;
    long long count = 0;
    long long next = x_lo;
    for (long long u = 2; u <= x_hi; ++u) {
        if (discriminate(static_cast<double>(u), cfg.mode) == 1) ++count;
        while (next == u) {
            const double xd = static_cast<double>(u);
            const double li = li_gauss(xd, li_tol);
            const double la = li_asymptotic(xd);
            const double cd = static_cast<double>(count);
            t.rows.push_back(std::to_string(u) + "," + std::to_string(count) + "," +
                             fmt17(li) + "," + fmt17(la) + "," + fmt17(cd / li) + "," +
                             fmt17(cd / la));
            xs.push_back(xd);
            cs.push_back(cd);
            lis.push_back(li);
            asym.push_back(la);
            next = (next + step <= x_hi) ? next + step : x_hi + 1;
        }
    }
    const auto path = pzcli::write_csv(cfg.output_dir, "estimates_li.csv", t);
    report_csv(path, t.rows.size());
    maybe_plot(cfg, "estimates_li", "prime count vs logarithmic-integral estimates", xs,
               {{"prime_count", cs}, {"li", lis}, {"li_asymptotic", asym}});
}

void run_estimates_bound(const RunConfig& cfg, long long x_lo, long long x_hi,
                         long long step, PiBoundKind kind, double li_tol) {
    const auto rows =
        check_pi_bound(x_lo, x_hi, step, kind, cfg.sqrt_product_variant, li_tol, cfg.mode);
    CsvTable t;
    t.header = "x,lhs,rhs,holds,margin,kind,sqrt_product_variant";
    std::vector<double> xs, lhs, rhs;
    size_t held = 0;
    const std::string kind_name =
        kind == PiBoundKind::schoenfeld_pi ? "schoenfeld" : "trudgian";
    for (const auto& r : rows) {
        t.rows.push_back(std::to_string(r.x) + "," + fmt17(r.lhs) + "," + fmt17(r.rhs) +
                         "," + (r.holds ? "1" : "0") + "," + fmt17(r.margin) + "," +
                         kind_name + "," + (r.sqrt_product_variant ? "1" : "0"));
        xs.push_back(static_cast<double>(r.x));
        lhs.push_back(r.lhs);
        rhs.push_back(r.rhs);
        if (r.holds) ++held;
    }
    const auto path = pzcli::write_csv(cfg.output_dir, "estimates_bound.csv", t);
    std::cout << held << "/" << rows.size() << " samples satisfy the bound\n";
    report_csv(path, t.rows.size());
    maybe_plot(cfg, "estimates_bound", "prime-count deviation vs envelope", xs,
               {{"lhs", lhs}, {"rhs", rhs}});
}

// ----------------------------------------------------------------- euler ---

void run_euler(const RunConfig& cfg, double sigma, long long h_lo, long long h_hi,
               long long h_step, long long series_terms) {
    if (h_lo < 1 || h_hi < h_lo || h_step < 1)
        throw std::invalid_argument("requires 1 <= h-lo <= h-hi and h-step >= 1");
    const double reference = zeta_series_real(sigma, series_terms);
    CsvTable t;
    t.header = "h,prime_product,gated_product,series_reference,product_minus_series";
    std::vector<double> xs, prod;
    double last_gated = 0.0;
    for (long long h = h_lo; h <= h_hi; h += h_step) {
        const double p = euler_product_primes(sigma, h, cfg.mode);
        const double g = euler_product_gated(sigma, h, cfg.mode);
        t.rows.push_back(std::to_string(h) + "," + fmt17(p) + "," + fmt17(g) + "," +
                         fmt17(reference) + "," + fmt17(p - reference));
        xs.push_back(static_cast<double>(h));
        prod.push_back(p);
        last_gated = g;
    }
    const auto path = pzcli::write_csv(cfg.output_dir, "euler_products.csv", t);
    std::cout << "gated product at h = " << h_hi << ": " << fmt17(last_gated) << "\n";
    report_csv(path, t.rows.size());
    maybe_plot(cfg, "euler_products", "truncated product convergence", xs,
               {{"prime_product", prod},
                {"series_reference", std::vector<double>(xs.size(), reference)}});
}

void run_euler_sigma(const RunConfig& cfg, double sigma_lo, double sigma_hi,
                     long long h, long long series_terms) {
    if (!(sigma_lo > 1.0) || sigma_hi < sigma_lo)
        throw std::invalid_argument("requires 1 < sigma-lo <= sigma-hi");
    const auto sigmas = sample_points(sigma_lo, sigma_hi, cfg.sigma_step);
    CsvTable t;
    t.header = "sigma,prime_product,gated_product,series_reference,relative_error";
    std::vector<double> prod, rel;
    for (const double sigma : sigmas) {
        const double p = euler_product_primes(sigma, h, cfg.mode);
        const double g = euler_product_gated(sigma, h, cfg.mode);
        const double reference = zeta_series_real(sigma, series_terms);
        const double r = (reference - p) / reference;
        t.rows.push_back(fmt17(sigma) + "," + fmt17(p) + "," + fmt17(g) + "," +
                         fmt17(reference) + "," + fmt17(r));
        prod.push_back(p);
        rel.push_back(r);
    }
    const auto path = pzcli::write_csv(cfg.output_dir, "euler_products_sigma.csv", t);
    report_csv(path, t.rows.size());
    maybe_plot(cfg, "euler_products_sigma", "truncated product vs exponent", sigmas,
               {{"prime_product", prod}, {"relative_error", rel}});
}

// ------------------------------------------------------------------ zeta ---

std::complex<double> eval_kind(const RunConfig& cfg, double sigma, double tau,
                               ZetaKind kind, bool compensated) {
    switch (kind) {
        case ZetaKind::primes:
            return zeta_truncated_primes(sigma, tau, cfg.n_max, cfg.mode);
        case ZetaKind::composites:
            return zeta_truncated_composites(sigma, tau, cfg.n_max, cfg.mode);
        case ZetaKind::split_sum:
            return zeta_split_sum(sigma, tau, cfg.n_max, cfg.mode);
        case ZetaKind::full:
        default:
            return zeta_truncated(sigma, tau, cfg.n_max, compensated);
    }
}

void run_zeta_eval(const RunConfig& cfg, double sigma, double tau, ZetaKind kind,
                   bool compensated) {
    const std::complex<double> z = eval_kind(cfg, sigma, tau, kind, compensated);
    const double msq = z.real() * z.real() + z.imag() * z.imag();
    std::cout << "value = " << fmt17(z.real()) << " + i*" << fmt17(z.imag())
              << "  modulus_sq = " << fmt17(msq) << "\n";
    CsvTable t;
    t.header = "sigma,tau,re,im,modulus_sq";
    t.rows.push_back(fmt17(sigma) + "," + fmt17(tau) + "," + fmt17(z.real()) + "," +
                     fmt17(z.imag()) + "," + fmt17(msq));
    const auto path = pzcli::write_csv(cfg.output_dir, "zeta_eval.csv", t);
    report_csv(path, t.rows.size());
}

void run_zeta_scan(const RunConfig& cfg, double sigma, double tau_lo, double tau_hi,
                   ZetaKind kind, const std::string& component, bool compensated) {
    if (component == "recip" && kind != ZetaKind::full)
        throw std::invalid_argument("--component recip requires --kind full");
    const auto taus = sample_points(tau_lo, tau_hi, cfg.tau_step);
    std::vector<double> values(taus.size());
    parallel_for_index(static_cast<long long>(taus.size()), cfg.threads, [&](long long k) {
        const double tau = taus[static_cast<size_t>(k)];
        double v;
        if (component == "recip") {
            v = reciprocal_modulus_squared(sigma, tau, cfg.n_max);
        } else {
            const std::complex<double> z = eval_kind(cfg, sigma, tau, kind, compensated);
            if (component == "re") v = z.real();
            else if (component == "im") v = z.imag();
            else v = z.real() * z.real() + z.imag() * z.imag();
        }
        values[static_cast<size_t>(k)] = v;
    });
    CsvTable t;
    t.header = "sigma,tau,omega,eta,value";
    for (size_t i = 0; i < taus.size(); ++i)
        t.rows.push_back(fmt17(sigma) + "," + fmt17(taus[i]) + "," +
                         fmt17(taus[i] - sigma) + "," + fmt17(taus[i] + sigma) + "," +
                         fmt17(values[i]));
    const auto path = pzcli::write_csv(cfg.output_dir, "zeta_scan.csv", t);
    report_csv(path, t.rows.size());
    maybe_plot(cfg, "zeta_scan", "truncated zeta scan (" + component + ")", taus,
               {{component, values}});
}

// ---------------------------------------------------------------- action ---

void emit_samples_csv(const RunConfig& cfg, const std::string& name,
                      const std::vector<ActionSample>& samples, bool log_value) {
    CsvTable t;
    t.header = "sigma,tau,omega,eta,value";
    for (const auto& s : samples)
        t.rows.push_back(fmt17(s.sigma) + "," + fmt17(s.tau) + "," + fmt17(s.omega) +
                         "," + fmt17(s.eta) + "," +
                         fmt17(log_value ? s.log_action : s.action));
    const auto path = pzcli::write_csv(cfg.output_dir, name, t);
    report_csv(path, t.rows.size());
}

void run_action_scan(const RunConfig& cfg, double sigma_lo, double sigma_hi,
                     double tau_lo, double tau_hi) {
    const auto scan = scan_omega_eta({sigma_lo, sigma_hi, cfg.sigma_step},
                                     {tau_lo, tau_hi, cfg.tau_step}, cfg.n_max,
                                     cfg.zoom_step, 0.5, cfg.threads);
    emit_samples_csv(cfg, "action_scan_coarse.csv", scan.coarse, true);
    CsvTable t;
    t.header = "sigma,tau,omega,eta,value";
    std::vector<double> xs, ys;
    for (const auto& [omega, v] : scan.zoom) {
        const double sig = (scan.eta_star - omega) / 2.0;
        const double tau = (scan.eta_star + omega) / 2.0;
        t.rows.push_back(fmt17(sig) + "," + fmt17(tau) + "," + fmt17(omega) + "," +
                         fmt17(scan.eta_star) + "," + fmt17(v));
        xs.push_back(omega);
        ys.push_back(v);
    }
    const auto path = pzcli::write_csv(cfg.output_dir, "action_scan_zoom.csv", t);
    report_csv(path, t.rows.size());
    std::cout << "coarse argmin: sigma = " << fmt17(scan.sigma_coarse)
              << ", tau = " << fmt17(scan.tau_coarse) << "\n"
              << "eta* = " << fmt17(scan.eta_star)
              << "  omega* = " << fmt17(scan.omega_star) << "\n";
    maybe_plot(cfg, "action_scan_zoom", "log action along the eta* line", xs,
               {{"log_action", ys}});
}

void run_action_roots(const RunConfig& cfg, double tau_center, double window,
                      double sigma_lo, double sigma_hi) {
    if (!(window > 0.0)) throw std::invalid_argument("window must be positive");
    const auto scan = scan_omega_eta(
        {sigma_lo, sigma_hi, cfg.sigma_step},
        {tau_center - window / 2.0, tau_center + window / 2.0, cfg.tau_step}, cfg.n_max,
        cfg.zoom_step, 0.5, cfg.threads);
    const RootEstimate root = solve_root(scan.omega_star, scan.eta_star, cfg.n_max);
    std::cout << "root: sigma = " << fmt17(root.sigma) << ", tau = " << fmt17(root.tau)
              << ", residual = " << fmt17(root.residual) << "\n"
              << "from omega* = " << fmt17(root.omega_star)
              << ", eta* = " << fmt17(root.eta_star) << "\n";
    CsvTable t;
    t.header = "sigma,tau,residual,omega_star,eta_star,n_max";
    t.rows.push_back(fmt17(root.sigma) + "," + fmt17(root.tau) + "," +
                     fmt17(root.residual) + "," + fmt17(root.omega_star) + "," +
                     fmt17(root.eta_star) + "," + std::to_string(root.n_max));
    const auto path = pzcli::write_csv(cfg.output_dir, "action_roots.csv", t);
    report_csv(path, t.rows.size());
}

void run_action_parametric(const RunConfig& cfg, const std::vector<double>& taus,
                           double sigma_lo, double sigma_hi, double zoom_divisor) {
    const auto rows = parametric_sigma_scan(taus, {sigma_lo, sigma_hi, cfg.sigma_step},
                                            cfg.n_max, zoom_divisor, cfg.threads);
    CsvTable t;
    t.header = "tau,sigma_coarse,sigma_zoom,residual,root_like";
    CsvTable curves;
    curves.header = "sigma,tau,omega,eta,value";
    for (const auto& r : rows) {
        t.rows.push_back(fmt17(r.tau) + "," + fmt17(r.sigma_coarse) + "," +
                         fmt17(r.sigma_zoom) + "," + fmt17(r.residual) + "," +
                         (r.root_like ? "1" : "0"));
        for (const auto& s : r.coarse_curve)
            curves.rows.push_back(fmt17(s.sigma) + "," + fmt17(s.tau) + "," +
                                  fmt17(s.omega) + "," + fmt17(s.eta) + "," +
                                  fmt17(s.log_action));
        std::cout << "tau = " << fmt17(r.tau) << ": argmin sigma = " << fmt17(r.sigma_zoom)
                  << ", residual = " << fmt17(r.residual)
                  << (r.root_like ? " (root-like)" : " (non-root)") << "\n";
    }
    const auto path = pzcli::write_csv(cfg.output_dir, "action_parametric.csv", t);
    report_csv(path, t.rows.size());
    const auto cpath =
        pzcli::write_csv(cfg.output_dir, "action_parametric_curves.csv", curves);
    report_csv(cpath, curves.rows.size());
}

void run_action_loglog(const RunConfig& cfg, double sigma, double tau_lo, double tau_hi,
                       long long samples) {
    const auto scan = loglog_scan(sigma, tau_lo, tau_hi, samples, cfg.n_max);
    CsvTable t;
    t.header = "tau,log_modulus,log_action";
    for (size_t i = 0; i < scan.tau.size(); ++i)
        t.rows.push_back(fmt17(scan.tau[i]) + "," + fmt17(scan.log_m[i]) + "," +
                         fmt17(scan.log_action[i]));
    const auto path = pzcli::write_csv(cfg.output_dir, "action_loglog.csv", t);
    std::cout << "slope = " << fmt17(scan.fit.slope)
              << "  intercept = " << fmt17(scan.fit.intercept)
              << "  r2 = " << fmt17(scan.fit.r2) << "\n";
    report_csv(path, t.rows.size());
    maybe_plot(cfg, "action_loglog", "log modulus vs log action", scan.log_action,
               {{"log_modulus", scan.log_m}});
}

void run_action_ratio(const RunConfig& cfg, double tau, double sigma_lo,
                      double sigma_hi) {
    const auto sigmas = sample_points(sigma_lo, sigma_hi, cfg.sigma_step);
    CsvTable t;
    t.header = "sigma,action,energy_gap,ratio,ratio_mirror,product,product_mirror";
    std::vector<double> ratios, mirrors;
    for (const double sigma : sigmas) {
        const double act = action_general_point(sigma, tau, cfg.n_max);
        const double gap = energy_gap_point(sigma, tau, cfg.n_max);
        const double mirror = 1.0 - sigma;
        const double act_m = action_general_point(mirror, tau, cfg.n_max);
        const double gap_m = energy_gap_point(mirror, tau, cfg.n_max);
        // 0/0 at an exact zero of the modulus prints as nan; the constant
        // ratio is only defined where the modulus is positive
        const double ratio = gap / act;
        const double ratio_m = gap_m / act_m;
        const double product = energy_action_product(sigma, tau, cfg.n_max);
        const double product_m = energy_action_product(mirror, tau, cfg.n_max);
        t.rows.push_back(fmt17(sigma) + "," + fmt17(act) + "," + fmt17(gap) + "," +
                         fmt17(ratio) + "," + fmt17(ratio_m) + "," + fmt17(product) +
                         "," + fmt17(product_m));
        ratios.push_back(ratio);
        mirrors.push_back(ratio_m);
    }
    const auto path = pzcli::write_csv(cfg.output_dir, "action_ratio.csv", t);
    std::cout << "constant reference 5/(6*pi) = "
              << fmt17(5.0 / (6.0 * std::numbers::pi)) << "\n";
    report_csv(path, t.rows.size());
    maybe_plot(cfg, "action_ratio", "gap-to-action ratio at both abscissae", sigmas,
               {{"ratio", ratios}, {"ratio_mirror", mirrors}});
}

void run_f_scan(const RunConfig& cfg, double sigma, double tau_lo, double tau_hi) {
    const auto scan =
        product_tau_scan(sigma, {tau_lo, tau_hi, cfg.tau_step}, cfg.n_max, cfg.threads);
    emit_samples_csv(cfg, "f_scan.csv", scan.samples, false);
    for (size_t i = 0; i < scan.minima_tau.size(); ++i)
        std::cout << "minimum at tau = " << fmt17(scan.minima_tau[i])
                  << "  value = " << fmt17(scan.minima_value[i]) << "\n";
    if (scan.minima_tau.empty()) std::cout << "no interior minima\n";
    if (cfg.plot) {
        std::vector<double> xs, ys;
        for (const auto& s : scan.samples) {
            xs.push_back(s.tau);
            ys.push_back(s.action);
        }
        maybe_plot(cfg, "f_scan", "symmetric energy-action product", xs,
                   {{"product", ys}});
    }
}

// ------------------------------------------------------------- chebyshev ---

void run_chebyshev_eval_single(const RunConfig& cfg, double x) {
    const double ex = psi_exact(x, cfg.mode);
    const double ap = psi_approx(x, cfg.mode);
    std::cout << "psi_exact = " << fmt17(ex) << "  psi_approx = " << fmt17(ap) << "\n";
}

void run_chebyshev_eval_range(const RunConfig& cfg, double x_lo, double x_hi,
                              double step) {
    if (!(step > 0.0) || x_lo < 2.0 || x_hi < x_lo)
        throw std::invalid_argument("requires 2 <= x-lo <= x-hi and step > 0");
    CsvTable t;
    t.header = "x,psi_exact,psi_approx,rel_diff";
    const long long n = std::llround(std::floor((x_hi - x_lo) / step + 1e-9)) + 1;
    std::vector<double> xs, ys;
    for (long long k = 0; k < n; ++k) {
        const double x = x_lo + static_cast<double>(k) * step;
        const double ex = psi_exact(x, cfg.mode);
        const double ap = psi_approx(x, cfg.mode);
        const double rel = ex == 0.0 ? 0.0 : std::fabs(ap - ex) / ex;
        t.rows.push_back(fmt17(x) + "," + fmt17(ex) + "," + fmt17(ap) + "," + fmt17(rel));
        xs.push_back(x);
        ys.push_back(ex);
    }
    const auto path = pzcli::write_csv(cfg.output_dir, "chebyshev_eval.csv", t);
    report_csv(path, t.rows.size());
    maybe_plot(cfg, "chebyshev_eval", "second Chebyshev function", xs, {{"psi", ys}});
}

void run_chebyshev_bound(const RunConfig& cfg, long long x_lo, long long x_hi,
                         long long step) {
    const auto rows = check_psi_bound(x_lo, x_hi, step, cfg.mode);
    CsvTable t;
    t.header = "x,psi,lhs,rhs,holds,margin";
    std::vector<double> xs, lhs, rhs;
    size_t held = 0;
    for (const auto& r : rows) {
        t.rows.push_back(std::to_string(r.x) + "," + fmt17(r.psi) + "," + fmt17(r.lhs) +
                         "," + fmt17(r.rhs) + "," + (r.holds ? "1" : "0") + "," +
                         fmt17(r.margin));
        xs.push_back(static_cast<double>(r.x));
        lhs.push_back(r.lhs);
        rhs.push_back(r.rhs);
        if (r.holds) ++held;
    }
    const auto path = pzcli::write_csv(cfg.output_dir, "chebyshev_bound.csv", t);
    std::cout << held << "/" << rows.size() << " samples satisfy the bound\n";
    report_csv(path, t.rows.size());
    maybe_plot(cfg, "chebyshev_bound", "psi deviation vs envelope", xs,
               {{"lhs", lhs}, {"rhs", rhs}});
}

// ----------------------------------------------------------------- table ---

void run_table(const RunConfig& cfg, int sets) {
    const auto rows = generate_table(cfg.seed, sets, cfg.mode);
    CsvTable t;
    t.header = "set_index,row_index,k_param,u,psi_u";
    for (const auto& r : rows)
        t.rows.push_back(std::to_string(r.set_index) + "," + std::to_string(r.row_index) +
                         "," + std::to_string(r.k_param) + "," + std::to_string(r.u) +
                         "," + fmt17(r.generated));
    const auto path = pzcli::write_csv(cfg.output_dir, "random_table.csv", t);
    report_csv(path, t.rows.size());
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    CLI::App app{"closed-form prime functions, truncated zeta scans, and "
                 "action-minimum root finding"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "flat key=value option file");

    const std::map<std::string, IndicatorMode> mode_map{
        {"literal", IndicatorMode::literal}, {"optimized", IndicatorMode::optimized}};
    const std::map<std::string, bool> variant_map{{"default", false},
                                                  {"sqrt-product", true}};
    const std::map<std::string, ZetaKind> kind_map{{"full", ZetaKind::full},
                                                   {"primes", ZetaKind::primes},
                                                   {"composites", ZetaKind::composites},
                                                   {"split", ZetaKind::split_sum}};
    const std::map<std::string, PiBoundKind> pi_kind_map{
        {"schoenfeld", PiBoundKind::schoenfeld_pi}, {"trudgian", PiBoundKind::trudgian}};

    app.add_option("--n-max,--n_max", cfg.n_max, "truncation length for series sums")
        ->check(CLI::Range(static_cast<long long>(2), static_cast<long long>(1) << 40))
        ->capture_default_str();
    app.add_option("--sigma-step,--sigma_step", cfg.sigma_step, "coarse sigma grid step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tau-step,--tau_step", cfg.tau_step, "coarse tau grid step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--zoom-step,--zoom_step", cfg.zoom_step, "zoom stage grid step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--quad-tol,--quad_tol", cfg.quad_tol, "quadrature error tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--mode", cfg.mode, "prime indicator evaluation strategy")
        ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case))
        ->default_str("optimized");
    app.add_option("--bound-variant,--bound_variant", cfg.sqrt_product_variant,
                   "envelope reading: default | sqrt-product")
        ->transform(CLI::CheckedTransformer(variant_map, CLI::ignore_case))
        ->default_str("default");
    app.add_option("--seed", cfg.seed, "random table seed")->capture_default_str();
    app.add_option("--output-dir,--output_dir", cfg.output_dir,
                   "directory for CSV/SVG outputs")
        ->envname("PZ_OUTPUT_DIR")
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "worker threads for grid evaluations")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    app.add_flag("--plot", cfg.plot, "also write a static SVG plot per CSV");

    // primes ----------------------------------------------------------------
    auto* primes = app.add_subcommand("primes", "closed-form prime indicator tools");
    primes->require_subcommand(1);
    primes->fallthrough();

    double chk_u = 0;
    long long chk_from = 0, chk_to = 0;
    auto* check = primes->add_subcommand("check", "evaluate the indicator");
    check->fallthrough();
    auto* opt_u = check->add_option("--u", chk_u, "single argument");
    auto* opt_cf = check->add_option("--from", chk_from, "range start (integer)");
    auto* opt_ct = check->add_option("--to", chk_to, "range end (integer)");
    check->callback([&, opt_u, opt_cf, opt_ct] {
        if (opt_u->count()) run_primes_check_single(cfg, chk_u);
        else if (opt_cf->count() && opt_ct->count())
            run_primes_check_range(cfg, chk_from, chk_to);
        else throw CLI::RequiredError("--u or --from/--to");
    });

    long long lst_from = 2, lst_to = 0, lst_res = 0, lst_mod = 0;
    auto* list = primes->add_subcommand("list", "enumerate primes");
    list->fallthrough();
    list->add_option("--from", lst_from, "range start")->capture_default_str();
    list->add_option("--to", lst_to, "range end")->required();
    auto* opt_res = list->add_option("--residue", lst_res, "progression start a");
    auto* opt_mod = list->add_option("--modulus", lst_mod, "progression stride q");
    opt_res->needs(opt_mod);
    opt_mod->needs(opt_res);
    list->callback([&, opt_res] {
        run_primes_list(cfg, lst_from, lst_to, lst_res, lst_mod, opt_res->count() > 0);
    });

    long long cnt_from = 2, cnt_to = 0;
    auto* count = primes->add_subcommand("count", "count primes in a range");
    count->fallthrough();
    count->add_option("--from", cnt_from, "range start")->capture_default_str();
    count->add_option("--to", cnt_to, "range end")->required();
    count->callback([&] { run_primes_count(cfg, cnt_from, cnt_to); });

    // estimates ---------------------------------------------------------------
    std::string est_what = "li";
    long long est_lo = -1, est_hi = -1, est_step = 1;
    double est_li_tol = 1e-8;
    PiBoundKind est_kind = PiBoundKind::schoenfeld_pi;
    auto* estimates =
        app.add_subcommand("estimates", "prime-count estimates and deviation bounds");
    estimates->fallthrough();
    estimates->add_option("--what", est_what, "li | bound")
        ->check(CLI::IsMember({"li", "bound"}))
        ->capture_default_str();
    estimates->add_option("--x-lo", est_lo, "range start (default: 2 for li, 2657 for bound)");
    estimates->add_option("--x-hi", est_hi, "range end (default: 1000 for li, 3000 for bound)");
    estimates->add_option("--step", est_step, "sample stride")->capture_default_str();
    estimates->add_option("--li-tol", est_li_tol, "quadrature tolerance for li")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    estimates->add_option("--kind", est_kind, "bound family: schoenfeld | trudgian")
        ->transform(CLI::CheckedTransformer(pi_kind_map, CLI::ignore_case))
        ->default_str("schoenfeld");
    estimates->callback([&] {
        if (est_what == "bound") {
            const long long lo = est_lo < 0 ? 2657 : est_lo;
            const long long hi = est_hi < 0 ? 3000 : est_hi;
            run_estimates_bound(cfg, lo, hi, est_step, est_kind, est_li_tol);
        } else {
            const long long lo = est_lo < 0 ? 2 : est_lo;
            const long long hi = est_hi < 0 ? 1000 : est_hi;
            run_estimates_li(cfg, lo, hi, est_step, est_li_tol);
        }
    });

    // euler -------------------------------------------------------------------
    double eul_sigma = 2.0, eul_sigma_hi = 0.0;
    long long eul_h_lo = 1, eul_h_hi = 100, eul_h_step = 1, eul_terms = 100000;
    auto* euler = app.add_subcommand("euler", "truncated product over primes");
    euler->fallthrough();
    euler->add_option("--sigma", eul_sigma, "real exponent, > 1 (sweep start with --sigma-hi)")
        ->capture_default_str();
    auto* opt_eul_shi = euler->add_option(
        "--sigma-hi", eul_sigma_hi, "sweep sigma up to this value at fixed h = h-hi");
    euler->add_option("--h-lo", eul_h_lo, "first prime count")->capture_default_str();
    euler->add_option("--h-hi", eul_h_hi, "last prime count")->capture_default_str();
    euler->add_option("--h-step", eul_h_step, "prime count stride")->capture_default_str();
    euler->add_option("--series-terms", eul_terms, "reference series length")
        ->capture_default_str();
    euler->callback([&, opt_eul_shi] {
        if (opt_eul_shi->count())
            run_euler_sigma(cfg, eul_sigma, eul_sigma_hi, eul_h_hi, eul_terms);
        else
            run_euler(cfg, eul_sigma, eul_h_lo, eul_h_hi, eul_h_step, eul_terms);
    });

    // zeta ----------------------------------------------------------------------
    auto* zeta = app.add_subcommand("zeta", "truncated alternating-series evaluation");
    zeta->require_subcommand(1);
    zeta->fallthrough();

    double ze_sigma = 0, ze_tau = 0;
    ZetaKind ze_kind = ZetaKind::full;
    bool ze_comp = false;
    auto* zeval = zeta->add_subcommand("eval", "single point");
    zeval->fallthrough();
    zeval->add_option("--sigma", ze_sigma, "real part")->required();
    zeval->add_option("--tau", ze_tau, "imaginary part")->required();
    zeval->add_option("--kind", ze_kind, "full | primes | composites | split")
        ->transform(CLI::CheckedTransformer(kind_map, CLI::ignore_case))
        ->default_str("full");
    zeval->add_flag("--compensated", ze_comp, "Kahan-compensated accumulation");
    zeval->callback([&] { run_zeta_eval(cfg, ze_sigma, ze_tau, ze_kind, ze_comp); });

    double zs_sigma = 0.5, zs_tau_lo = 0, zs_tau_hi = 0;
    ZetaKind zs_kind = ZetaKind::full;
    std::string zs_component = "msq";
    bool zs_comp = false;
    auto* zscan = zeta->add_subcommand("scan", "tau sweep at fixed sigma");
    zscan->fallthrough();
    zscan->add_option("--sigma", zs_sigma, "real part")->capture_default_str();
    zscan->add_option("--tau-lo", zs_tau_lo, "sweep start")->required();
    zscan->add_option("--tau-hi", zs_tau_hi, "sweep end")->required();
    zscan->add_option("--kind", zs_kind, "full | primes | composites | split")
        ->transform(CLI::CheckedTransformer(kind_map, CLI::ignore_case))
        ->default_str("full");
    zscan->add_option("--component", zs_component,
                      "value column: re | im | msq | recip (recip needs --kind full)")
        ->check(CLI::IsMember({"re", "im", "msq", "recip"}))
        ->capture_default_str();
    zscan->add_flag("--compensated", zs_comp, "Kahan-compensated accumulation");
    zscan->callback([&] {
        run_zeta_scan(cfg, zs_sigma, zs_tau_lo, zs_tau_hi, zs_kind, zs_component, zs_comp);
    });

    // action ----------------------------------------------------------------------
    auto* action = app.add_subcommand("action", "action-minimum scans and root recovery");
    action->require_subcommand(1);
    action->fallthrough();

    double as_slo = 0.1, as_shi = 0.9, as_tlo = 0, as_thi = 0;
    auto* ascan = action->add_subcommand("scan", "coarse grid plus anti-diagonal zoom");
    ascan->fallthrough();
    ascan->add_option("--sigma-lo", as_slo, "sigma window start")->capture_default_str();
    ascan->add_option("--sigma-hi", as_shi, "sigma window end")->capture_default_str();
    ascan->add_option("--tau-lo", as_tlo, "tau window start")->required();
    ascan->add_option("--tau-hi", as_thi, "tau window end")->required();
    ascan->callback([&] { run_action_scan(cfg, as_slo, as_shi, as_tlo, as_thi); });

    double ar_center = 0, ar_window = 3.0, ar_slo = 0.1, ar_shi = 0.9;
    auto* aroots = action->add_subcommand("roots", "recover a zero candidate");
    aroots->fallthrough();
    aroots->add_option("--tau-center", ar_center, "window center")->required();
    aroots->add_option("--window", ar_window, "full tau window width")
        ->capture_default_str();
    aroots->add_option("--sigma-lo", ar_slo, "sigma window start")->capture_default_str();
    aroots->add_option("--sigma-hi", ar_shi, "sigma window end")->capture_default_str();
    aroots->callback([&] { run_action_roots(cfg, ar_center, ar_window, ar_slo, ar_shi); });

    std::vector<double> ap_taus;
    double ap_slo = 0.1, ap_shi = 0.9, ap_div = 10.0;
    auto* aparam = action->add_subcommand("parametric", "sigma argmin per tau");
    aparam->fallthrough();
    aparam->add_option("--tau", ap_taus, "tau values (repeatable)")->required();
    aparam->add_option("--sigma-lo", ap_slo, "sigma window start")->capture_default_str();
    aparam->add_option("--sigma-hi", ap_shi, "sigma window end")->capture_default_str();
    aparam->add_option("--zoom-divisor", ap_div, "zoom step = coarse step / divisor")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    aparam->callback(
        [&] { run_action_parametric(cfg, ap_taus, ap_slo, ap_shi, ap_div); });

    double al_sigma = 0.5, al_tlo = 10.0, al_thi = 45.0;
    long long al_samples = 50;
    auto* aloglog = action->add_subcommand("loglog", "modulus-action power-law fit");
    aloglog->fallthrough();
    aloglog->add_option("--sigma", al_sigma, "fixed sigma")->capture_default_str();
    aloglog->add_option("--tau-lo", al_tlo, "sweep start")->capture_default_str();
    aloglog->add_option("--tau-hi", al_thi, "sweep end")->capture_default_str();
    aloglog->add_option("--samples", al_samples, "sample count")->capture_default_str();
    aloglog->callback(
        [&] { run_action_loglog(cfg, al_sigma, al_tlo, al_thi, al_samples); });

    double arr_tau = 0, arr_slo = 0.1, arr_shi = 0.9;
    auto* aratio =
        action->add_subcommand("ratio", "gap-to-action ratio and symmetric product per sigma");
    aratio->fallthrough();
    aratio->add_option("--tau", arr_tau, "imaginary ordinate")->required();
    aratio->add_option("--sigma-lo", arr_slo, "sweep start")->capture_default_str();
    aratio->add_option("--sigma-hi", arr_shi, "sweep end")->capture_default_str();
    aratio->callback([&] { run_action_ratio(cfg, arr_tau, arr_slo, arr_shi); });

    // f-scan ------------------------------------------------------------------
    double fs_sigma = 0.5, fs_tlo = 0, fs_thi = 0;
    auto* fscan =
        app.add_subcommand("f-scan", "symmetric energy-action product tau sweep");
    fscan->fallthrough();
    fscan->add_option("--sigma", fs_sigma, "strip coordinate in (0, 1)")
        ->capture_default_str();
    fscan->add_option("--tau-lo", fs_tlo, "sweep start")->required();
    fscan->add_option("--tau-hi", fs_thi, "sweep end")->required();
    fscan->callback([&] { run_f_scan(cfg, fs_sigma, fs_tlo, fs_thi); });

    // chebyshev ----------------------------------------------------------------
    auto* chebyshev = app.add_subcommand("chebyshev", "second Chebyshev function");
    chebyshev->require_subcommand(1);
    chebyshev->fallthrough();

    double ch_x = 0, ch_lo = 2, ch_hi = 0, ch_step = 1;
    auto* cheval = chebyshev->add_subcommand("eval", "psi by both constructions");
    cheval->fallthrough();
    auto* opt_chx = cheval->add_option("--x", ch_x, "single argument");
    cheval->add_option("--x-lo", ch_lo, "range start")->capture_default_str();
    auto* opt_chh = cheval->add_option("--x-hi", ch_hi, "range end");
    cheval->add_option("--step", ch_step, "sample stride")->capture_default_str();
    cheval->callback([&, opt_chx, opt_chh] {
        if (opt_chx->count()) run_chebyshev_eval_single(cfg, ch_x);
        else if (opt_chh->count()) run_chebyshev_eval_range(cfg, ch_lo, ch_hi, ch_step);
        else throw CLI::RequiredError("--x or --x-hi");
    });

    long long cb_lo = 74, cb_hi = 400, cb_step = 1;
    auto* chbound = chebyshev->add_subcommand("bound", "deviation envelope check");
    chbound->fallthrough();
    chbound->add_option("--x-lo", cb_lo, "range start")->capture_default_str();
    chbound->add_option("--x-hi", cb_hi, "range end")->capture_default_str();
    chbound->add_option("--step", cb_step, "sample stride")->capture_default_str();
    chbound->callback([&] { run_chebyshev_bound(cfg, cb_lo, cb_hi, cb_step); });

    // table -------------------------------------------------------------------
    int tbl_sets = 4;
    auto* table = app.add_subcommand("table", "seeded odd-probe classification table");
    table->fallthrough();
    table->add_option("--sets", tbl_sets, "number of 16-row sets")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    table->callback([&] { run_table(cfg, tbl_sets); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const PoleError& e) {
        std::cerr << "numerical guard: " << e.what() << "\n";
        return 3;
    } catch (const OverflowGuard& e) {
        std::cerr << "numerical guard: " << e.what() << "\n";
        return 3;
    } catch (const NoMinimumError& e) {
        std::cerr << "numerical guard: " << e.what() << "\n";
        return 3;
    } catch (const QuadratureError& e) {
        std::cerr << "numerical guard: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
