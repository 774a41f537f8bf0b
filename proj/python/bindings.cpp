// Python bindings for the closed-form prime / zeta toolkit. Thin pass-through
// wrappers: all numerics live in the C++ core; exceptions surface as the
// nearest built-in Python types.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "primezeta/action.hpp"
#include "primezeta/chebyshev.hpp"
#include "primezeta/errors.hpp"
#include "primezeta/estimates.hpp"
#include "primezeta/euler.hpp"
#include "primezeta/primes.hpp"
#include "primezeta/random_table.hpp"
#include "primezeta/zeta.hpp"

namespace py = pybind11;
using namespace primezeta;

namespace {

IndicatorMode parse_mode(const std::string& name) {
    if (name == "literal") return IndicatorMode::literal;
    if (name == "optimized") return IndicatorMode::optimized;
    throw std::invalid_argument("mode must be 'literal' or 'optimized', got '" + name + "'");
}

ZetaKind parse_kind(const std::string& name) {
    if (name == "full") return ZetaKind::full;
    if (name == "primes") return ZetaKind::primes;
    if (name == "composites") return ZetaKind::composites;
    if (name == "split") return ZetaKind::split_sum;
    throw std::invalid_argument("kind must be one of full/primes/composites/split, got '" +
                                name + "'");
}

PiBoundKind parse_bound(const std::string& name) {
    if (name == "schoenfeld") return PiBoundKind::schoenfeld_pi;
    if (name == "trudgian") return PiBoundKind::trudgian;
    throw std::invalid_argument("bound kind must be 'schoenfeld' or 'trudgian', got '" +
                                name + "'");
}

} // namespace

PYBIND11_MODULE(_primezeta, m) {
    m.doc() = "Closed-form prime indicator, truncated zeta evaluations, and "
              "action-based zero localization";

    py::register_exception<PoleError>(m, "PoleError", PyExc_ArithmeticError);
    py::register_exception<OverflowGuard>(m, "OverflowGuard", PyExc_OverflowError);
    py::register_exception<NoMinimumError>(m, "NoMinimumError", PyExc_RuntimeError);
    py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);

    // prime indicator and derived counting helpers
    m.def(
        "discriminate",
        [](double u, const std::string& mode) { return discriminate(u, parse_mode(mode)); },
        py::arg("u"), py::arg("mode") = "optimized",
        "1 if u is a prime integer, else 0");
    m.def(
        "generate",
        [](double u, const std::string& mode) { return generate(u, parse_mode(mode)); },
        py::arg("u"), py::arg("mode") = "optimized",
        "u at primes, 0 elsewhere");
    m.def(
        "count_primes",
        [](long long u, long long u_in, const std::string& mode) {
            return count_primes(u, u_in, parse_mode(mode));
        },
        py::arg("u"), py::arg("u_in") = 2, py::arg("mode") = "optimized",
        "number of primes in [u_in, u]");
    m.def(
        "nth_prime",
        [](long long j, const std::string& mode) { return nth_prime(j, parse_mode(mode)); },
        py::arg("j"), py::arg("mode") = "optimized");
    m.def(
        "progression_primes",
        [](long long a, long long q, long long limit, const std::string& mode) {
            return progression_primes(a, q, limit, parse_mode(mode));
        },
        py::arg("a"), py::arg("q"), py::arg("limit"), py::arg("mode") = "optimized",
        "primes in the arithmetic progression a, a+q, ... up to limit");

    // logarithmic-integral estimates and explicit deviation bounds
    m.def("li_gauss", &li_gauss, py::arg("x"), py::arg("tolerance") = 1e-8);
    m.def("li_asymptotic", &li_asymptotic, py::arg("x"));
    m.def(
        "pnt_ratio",
        [](long long x, const std::string& mode) { return pnt_ratio(x, parse_mode(mode)); },
        py::arg("x"), py::arg("mode") = "optimized");
    m.def(
        "pi_bound_envelope",
        [](double x, const std::string& kind, bool sqrt_product_variant) {
            return pi_bound_envelope(x, parse_bound(kind), sqrt_product_variant);
        },
        py::arg("x"), py::arg("kind"), py::arg("sqrt_product_variant") = false);
    m.def(
        "check_pi_bound",
        [](long long x_lo, long long x_hi, long long step, const std::string& kind,
           bool sqrt_product_variant) {
            std::vector<py::dict> rows;
            for (const auto& r :
                 check_pi_bound(x_lo, x_hi, step, parse_bound(kind), sqrt_product_variant)) {
                py::dict d;
                d["x"] = r.x;
                d["lhs"] = r.lhs;
                d["rhs"] = r.rhs;
                d["holds"] = r.holds;
                d["margin"] = r.margin;
                rows.push_back(std::move(d));
            }
            return rows;
        },
        py::arg("x_lo"), py::arg("x_hi"), py::arg("step") = 1,
        py::arg("kind") = "schoenfeld", py::arg("sqrt_product_variant") = false,
        "per-x comparison of |C(x,2) - Li(x)| against the selected envelope");

    // truncated Euler products
    m.def("zeta_series_real", &zeta_series_real, py::arg("sigma"), py::arg("n_terms"));
    m.def(
        "euler_product_primes",
        [](double sigma, long long h_primes, const std::string& mode) {
            return euler_product_primes(sigma, h_primes, parse_mode(mode));
        },
        py::arg("sigma"), py::arg("h_primes"), py::arg("mode") = "optimized");
    m.def(
        "euler_product_gated",
        [](double sigma, long long h_primes, const std::string& mode) {
            return euler_product_gated(sigma, h_primes, parse_mode(mode));
        },
        py::arg("sigma"), py::arg("h_primes"), py::arg("mode") = "optimized");

    // truncated zeta on the strip
    m.def("zeta_truncated", &zeta_truncated, py::arg("sigma"), py::arg("tau"),
          py::arg("n_max"), py::arg("compensated") = false);
    m.def(
        "zeta_truncated_primes",
        [](double sigma, double tau, long long n_max, const std::string& mode) {
            return zeta_truncated_primes(sigma, tau, n_max, parse_mode(mode));
        },
        py::arg("sigma"), py::arg("tau"), py::arg("n_max"), py::arg("mode") = "optimized");
    m.def(
        "zeta_truncated_composites",
        [](double sigma, double tau, long long n_max, const std::string& mode) {
            return zeta_truncated_composites(sigma, tau, n_max, parse_mode(mode));
        },
        py::arg("sigma"), py::arg("tau"), py::arg("n_max"), py::arg("mode") = "optimized");
    m.def(
        "zeta_split_sum",
        [](double sigma, double tau, long long n_max, const std::string& mode) {
            return zeta_split_sum(sigma, tau, n_max, parse_mode(mode));
        },
        py::arg("sigma"), py::arg("tau"), py::arg("n_max"), py::arg("mode") = "optimized");
    m.def(
        "modulus_squared",
        [](double sigma, double tau, long long n_max, const std::string& kind) {
            return modulus_squared(sigma, tau, n_max, parse_kind(kind));
        },
        py::arg("sigma"), py::arg("tau"), py::arg("n_max"), py::arg("kind") = "full");
    m.def("reciprocal_modulus_squared", &reciprocal_modulus_squared, py::arg("sigma"),
          py::arg("tau"), py::arg("n_max"));

    // action functional and root localization
    m.def("action_numeric", &action_numeric, py::arg("sigma"), py::arg("tau"),
          py::arg("n_max"), py::arg("t_i"), py::arg("t_f"), py::arg("quad_tol") = 1e-8);
    m.def("action_closed", &action_closed, py::arg("m2"));
    m.def("action_closed_point", &action_closed_point, py::arg("sigma"), py::arg("tau"),
          py::arg("n_max"));
    m.def("action_general", &action_general, py::arg("m2"), py::arg("sigma"));
    m.def("energy_gap", &energy_gap, py::arg("m2"), py::arg("sigma"));
    m.def("energy_action_product", &energy_action_product, py::arg("sigma"), py::arg("tau"),
          py::arg("n_max"));
    m.def(
        "scan_omega_eta",
        [](double sigma_lo, double sigma_hi, double sigma_step, double tau_lo,
           double tau_hi, double tau_step, long long n_max, double zoom_step,
           double zoom_halfwidth, int threads) {
            const auto scan = scan_omega_eta({sigma_lo, sigma_hi, sigma_step},
                                             {tau_lo, tau_hi, tau_step}, n_max, zoom_step,
                                             zoom_halfwidth, threads);
            const auto root = solve_root(scan.omega_star, scan.eta_star, n_max);
            py::dict d;
            d["sigma_coarse"] = scan.sigma_coarse;
            d["tau_coarse"] = scan.tau_coarse;
            d["omega_star"] = scan.omega_star;
            d["eta_star"] = scan.eta_star;
            d["sigma"] = root.sigma;
            d["tau"] = root.tau;
            d["residual"] = root.residual;
            return d;
        },
        py::arg("sigma_lo"), py::arg("sigma_hi"), py::arg("sigma_step"), py::arg("tau_lo"),
        py::arg("tau_hi"), py::arg("tau_step"), py::arg("n_max"),
        py::arg("zoom_step") = 1e-3, py::arg("zoom_halfwidth") = 0.5,
        py::arg("threads") = 1,
        "two-stage rotated-coordinate scan; returns the refined root candidate");
    m.def(
        "parametric_sigma_scan",
        [](const std::vector<double>& taus, double sigma_lo, double sigma_hi,
           double sigma_step, long long n_max, double zoom_step_divisor, int threads) {
            std::vector<py::dict> rows;
            for (const auto& r : parametric_sigma_scan(
                     taus, {sigma_lo, sigma_hi, sigma_step}, n_max, zoom_step_divisor,
                     threads)) {
                py::dict d;
                d["tau"] = r.tau;
                d["sigma_coarse"] = r.sigma_coarse;
                d["sigma_zoom"] = r.sigma_zoom;
                d["residual"] = r.residual;
                d["root_like"] = r.root_like;
                rows.push_back(std::move(d));
            }
            return rows;
        },
        py::arg("taus"), py::arg("sigma_lo") = 0.1, py::arg("sigma_hi") = 0.9,
        py::arg("sigma_step") = 0.1, py::arg("n_max") = 100,
        py::arg("zoom_step_divisor") = 10.0, py::arg("threads") = 1);
    m.def(
        "product_tau_scan",
        [](double sigma, double tau_lo, double tau_hi, double tau_step, long long n_max,
           int threads) {
            const auto scan =
                product_tau_scan(sigma, {tau_lo, tau_hi, tau_step}, n_max, threads);
            py::dict d;
            d["minima_tau"] = scan.minima_tau;
            d["minima_value"] = scan.minima_value;
            return d;
        },
        py::arg("sigma"), py::arg("tau_lo"), py::arg("tau_hi"), py::arg("tau_step"),
        py::arg("n_max"), py::arg("threads") = 1);
    m.def(
        "loglog_scan",
        [](double sigma, double tau_lo, double tau_hi, long long n_points,
           long long n_max) {
            const auto scan = loglog_scan(sigma, tau_lo, tau_hi, n_points, n_max);
            py::dict d;
            d["slope"] = scan.fit.slope;
            d["intercept"] = scan.fit.intercept;
            d["r2"] = scan.fit.r2;
            return d;
        },
        py::arg("sigma"), py::arg("tau_lo"), py::arg("tau_hi"), py::arg("n_points"),
        py::arg("n_max"));
    m.def(
        "fine_tau_scan",
        [](double sigma, double tau_center, double halfwidth, double step,
           long long n_max) {
            const auto r = fine_tau_scan(sigma, tau_center, halfwidth, step, n_max);
            py::dict d;
            d["tau_min"] = r.tau_min;
            d["residual"] = r.residual;
            return d;
        },
        py::arg("sigma"), py::arg("tau_center"), py::arg("halfwidth"), py::arg("step"),
        py::arg("n_max"));

    // Chebyshev second function
    m.def(
        "psi_exact",
        [](double x, const std::string& mode) { return psi_exact(x, parse_mode(mode)); },
        py::arg("x"), py::arg("mode") = "optimized");
    m.def(
        "psi_approx",
        [](double x, const std::string& mode) { return psi_approx(x, parse_mode(mode)); },
        py::arg("x"), py::arg("mode") = "optimized");
    m.def(
        "check_psi_bound",
        [](long long x_lo, long long x_hi, long long step, const std::string& mode) {
            std::vector<py::dict> rows;
            for (const auto& r : check_psi_bound(x_lo, x_hi, step, parse_mode(mode))) {
                py::dict d;
                d["x"] = r.x;
                d["psi"] = r.psi;
                d["lhs"] = r.lhs;
                d["rhs"] = r.rhs;
                d["holds"] = r.holds;
                d["margin"] = r.margin;
                rows.push_back(std::move(d));
            }
            return rows;
        },
        py::arg("x_lo"), py::arg("x_hi"), py::arg("step") = 1,
        py::arg("mode") = "optimized");

    // seeded random odd-walk table
    m.def(
        "generate_table",
        [](std::uint64_t seed, int sets, const std::string& mode) {
            std::vector<py::dict> rows;
            for (const auto& r : generate_table(seed, sets, parse_mode(mode))) {
                py::dict d;
                d["set_index"] = r.set_index;
                d["row_index"] = r.row_index;
                d["k_param"] = r.k_param;
                d["u"] = r.u;
                d["generated"] = r.generated;
                rows.push_back(std::move(d));
            }
            return rows;
        },
        py::arg("seed"), py::arg("sets") = 1, py::arg("mode") = "optimized");
}
