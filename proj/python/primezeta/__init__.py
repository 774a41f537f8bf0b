"""Closed-form prime indicator, truncated zeta evaluations on the critical
strip, action-based zero localization, and explicit prime-count bounds.

Everything numeric is computed by the C++ core; this package is a thin
re-export of the compiled module.
"""

from ._primezeta import (  # noqa: F401
    NoMinimumError,
    OverflowGuard,
    PoleError,
    QuadratureError,
    action_closed,
    action_closed_point,
    action_general,
    action_numeric,
    check_pi_bound,
    check_psi_bound,
    count_primes,
    discriminate,
    energy_action_product,
    energy_gap,
    euler_product_gated,
    euler_product_primes,
    fine_tau_scan,
    generate,
    generate_table,
    li_asymptotic,
    li_gauss,
    loglog_scan,
    modulus_squared,
    nth_prime,
    parametric_sigma_scan,
    pi_bound_envelope,
    pnt_ratio,
    product_tau_scan,
    progression_primes,
    psi_approx,
    psi_exact,
    reciprocal_modulus_squared,
    scan_omega_eta,
    zeta_series_real,
    zeta_split_sum,
    zeta_truncated,
    zeta_truncated_composites,
    zeta_truncated_primes,
)

__all__ = [
    "NoMinimumError",
    "OverflowGuard",
    "PoleError",
    "QuadratureError",
    "action_closed",
    "action_closed_point",
    "action_general",
    "action_numeric",
    "check_pi_bound",
    "check_psi_bound",
    "count_primes",
    "discriminate",
    "energy_action_product",
    "energy_gap",
    "euler_product_gated",
    "euler_product_primes",
    "fine_tau_scan",
    "generate",
    "generate_table",
    "li_asymptotic",
    "li_gauss",
    "loglog_scan",
    "modulus_squared",
    "nth_prime",
    "parametric_sigma_scan",
    "pi_bound_envelope",
    "pnt_ratio",
    "product_tau_scan",
    "progression_primes",
    "psi_approx",
    "psi_exact",
    "reciprocal_modulus_squared",
    "scan_omega_eta",
    "zeta_series_real",
    "zeta_split_sum",
    "zeta_truncated",
    "zeta_truncated_composites",
    "zeta_truncated_primes",
]

__version__ = "1.0.0"
