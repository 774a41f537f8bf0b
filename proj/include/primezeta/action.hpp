#pragma once

#include <vector>

#include "primezeta/zeta.hpp"

namespace primezeta {

// One evaluated grid point of an action scan. omega and eta are the rotated
// scan coordinates tau - sigma and tau + sigma. For the symmetric-product
// scan the action field carries the product value instead.
struct ActionSample {
    double sigma;
    double tau;
    double action;     // closed-form action at the point, >= 0
    double log_action; // natural log of the action
    double omega;      // tau - sigma
    double eta;        // tau + sigma
};

// Inclusive 1-D grid description; nodes are lo + k*step.
struct GridWindow {
    double lo;
    double hi;
    double step;
};

enum class RootSource { omega_eta_scan, f_tau_scan, parametric_sigma };

// A zero-candidate location recovered from scan minima.
struct RootEstimate {
    double sigma;
    double tau;
    double residual;   // modulus of the truncated evaluation at (sigma, tau)
    double omega_star; // scan coordinates that produced the estimate
    double eta_star;
    long long n_max;
    RootSource source;
};

// Result of the two-stage rotated-coordinate scan.
struct OmegaEtaScan {
    std::vector<ActionSample> coarse;               // rectangular grid samples
    double sigma_coarse;                            // coarse argmin node
    double tau_coarse;
    double eta_star;                                // tau_coarse + sigma_coarse
    std::vector<std::pair<double, double>> zoom;    // (omega, log action) on eta = eta_star
    double omega_star;                              // refined zoom minimum
    long long n_max;
};

// Per-tau result of the sigma-argmin scan.
struct SigmaArgmin {
    double tau;
    double sigma_coarse;              // argmin node on the coarse grid
    double sigma_zoom;                // argmin node on the 10x finer zoom grid
    double residual;                  // modulus at (sigma_zoom, tau)
    bool root_like;                   // residual below the reporting threshold
    std::vector<ActionSample> coarse_curve;
    std::vector<ActionSample> zoom_curve;
};

// Scan of the symmetric product along tau at fixed sigma; minima are raw
// interior grid nodes (no sub-grid refinement).
struct ProductScan {
    std::vector<ActionSample> samples;
    std::vector<double> minima_tau;
    std::vector<double> minima_value;
};

struct LineFit {
    double slope;
    double intercept;
    double r2;
};

// Log-log relation between modulus and generalized action at fixed sigma.
struct LogLogScan {
    std::vector<double> tau;
    std::vector<double> log_m;      // log of the (non-squared) modulus
    std::vector<double> log_action; // log of the generalized action
    LineFit fit;
};

// Result of the fine 1-D minimum search used to cross-check recovered roots.
struct FineScanResult {
    double tau_min;
    double residual;
};

// Residual threshold below which a scan minimum is labeled root-like in
// reports. A reporting label only; nothing numerical depends on it.
inline constexpr double kRootResidualThreshold = 0.05;

// Perturbed-oscillator trajectory x(t) = cos t (1 + m2 sin t) and its exact
// time derivative -sin t + m2 cos 2t, with m2 the squared modulus.
double trajectory(double t, double m2);
double trajectory_velocity(double t, double m2);

// Composite-Simpson quadrature (4096 panels, checked against 8192) of the
// Lagrangian (v^2 - x^2)/2 over [t_i, t_f]. Throws QuadratureError when the
// two refinements disagree beyond quad_tol.
double action_numeric_m2(double m2, double t_i, double t_f, double quad_tol = 1e-8);
double action_numeric(double sigma, double tau, long long n_max,
                      double t_i, double t_f, double quad_tol = 1e-8);

// Closed forms: (3/8) pi m2^2 over one period, and the generalized
// (3/8) pi m2^(1/sigma) = (3/8) pi M^(2/sigma). m2 = 0 maps to 0.
double action_closed(double m2);
double action_closed_point(double sigma, double tau, long long n_max);
double action_general(double m2, double sigma);
double action_general_point(double sigma, double tau, long long n_max);

// Energy gap above the ground level: (5/16) m2^(1/sigma) = (5/16) M^(2/sigma).
double energy_gap(double m2, double sigma);
double energy_gap_point(double sigma, double tau, long long n_max);

// Product of the energy gap at the mirrored abscissa 1 - sigma with the
// generalized action at sigma. Symmetric under sigma -> 1 - sigma: the
// abscissa pair is canonicalized through the upper value, whose reflection
// 1 - hi is exact in floating point, so mirrored calls share bit-identical
// arithmetic and the symmetry holds exactly. Requires 0 < sigma < 1.
double energy_action_product(double sigma, double tau, long long n_max);

// Two-stage root localization:
//  1. rectangular (sigma, tau) grid; global argmin of the log action (nodes
//     snapped to 1e-10; ties resolve to the smallest tau, then sigma); the
//     eta reading is taken at grid resolution: eta* = tau_c + sigma_c.
//  2. 1-D re-scan along the fixed anti-diagonal eta = eta*, omega within
//     +/- zoom_halfwidth of tau_c - sigma_c at zoom_step, with a three-point
//     parabolic vertex on the log action -> omega*.
// Throws NoMinimumError when the coarse argmin sits on the tau-window edge or
// the zoom argmin sits on the zoom edge. Nodes with sigma <= 1e-9 are skipped.
OmegaEtaScan scan_omega_eta(GridWindow sigma_window, GridWindow tau_window,
                            long long n_max, double zoom_step = 1e-3,
                            double zoom_halfwidth = 0.5, int threads = 1);

// sigma = (eta* - omega*)/2, tau = (eta* + omega*)/2, residual recomputed
// from the truncated evaluation at that point.
RootEstimate solve_root(double omega_star, double eta_star, long long n_max);

// Per-tau argmin of the action over a sigma grid (edges allowed; root quality
// is reported through the residual), then a raw-node argmin on a 10x finer
// grid within one coarse step of the coarse argmin.
std::vector<SigmaArgmin> parametric_sigma_scan(const std::vector<double>& taus,
                                               GridWindow sigma_window,
                                               long long n_max,
                                               double zoom_step_divisor = 10.0,
                                               int threads = 1);

// Symmetric-product scan along tau at fixed sigma; reports strict interior
// local minima at grid resolution.
ProductScan product_tau_scan(double sigma, GridWindow tau_window, long long n_max,
                             int threads = 1);

// Least-squares line through (log action, log modulus) pairs sampled at
// n_points tau values; the slope equals sigma/2 up to floating-point noise.
LogLogScan loglog_scan(double sigma, double tau_lo, double tau_hi,
                       long long n_points, long long n_max);

// Fine 1-D minimum of the log squared modulus in tau at fixed sigma
// (step-resolution grid plus parabolic vertex); used as the root cross-check.
FineScanResult fine_tau_scan(double sigma, double tau_center, double halfwidth,
                             double step, long long n_max);

} // namespace primezeta
