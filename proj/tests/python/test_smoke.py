"""Smoke tests for the Python bindings: one touch per exposed area, pinned
against values the C++ suites verify in depth."""

import math

import pytest

import primezeta as pz


def test_indicator_and_generator():
    assert pz.discriminate(7) == 1
    assert pz.discriminate(8) == 0
    assert pz.discriminate(7, mode="literal") == 1
    assert pz.generate(7) == 7.0
    assert pz.generate(8) == 0.0
    with pytest.raises(ValueError):
        pz.discriminate(7, mode="bogus")
    with pytest.raises(Exception):
        pz.discriminate(-1)


def test_counting():
    assert pz.count_primes(1000) == 168
    assert pz.count_primes(100, u_in=2) == 25
    assert pz.nth_prime(25) == 97
    assert pz.progression_primes(3, 4, 30) == [3, 7, 11, 19, 23]


def test_estimates():
    assert pz.li_gauss(100.0) == pytest.approx(29.0810, abs=5e-3)
    assert pz.li_asymptotic(math.e) == pytest.approx(math.e, abs=1e-12)
    rows = pz.check_pi_bound(2657, 2700, step=1, kind="schoenfeld")
    assert len(rows) == 44
    assert all(r["holds"] for r in rows)


def test_euler_product():
    assert pz.euler_product_gated(2.0, 100) == pz.euler_product_primes(2.0, 100)
    assert pz.euler_product_gated(2.0, 100) == pytest.approx(
        1.644515221724293, abs=1e-12
    )


def test_zeta():
    z = pz.zeta_truncated(2.0, 0.0, 10000)
    assert z.real == pytest.approx(math.pi**2 / 6.0, abs=1e-6)
    assert z.imag == 0.0
    full = pz.zeta_truncated(0.5, 21.022, 100)
    split = pz.zeta_split_sum(0.5, 21.022, 100)
    assert abs(full - split) < 1e-13
    assert pz.modulus_squared(0.5, 14.134725, 100) == pytest.approx(
        0.0210638**2, abs=1e-7
    )
    with pytest.raises(ArithmeticError):
        pz.zeta_truncated(1.0, 0.0, 100)


def test_action_scan():
    d = pz.scan_omega_eta(0.1, 0.9, 0.1, 31.4, 34.4, 0.1, 100)
    assert d["sigma"] == pytest.approx(0.497, abs=0.005)
    assert d["tau"] == pytest.approx(32.903, abs=0.01)
    assert d["residual"] < 0.05
    rows = pz.parametric_sigma_scan([25.01], n_max=100)
    assert rows[0]["sigma_zoom"] == pytest.approx(0.5, abs=1e-12)
    assert rows[0]["root_like"]
    with pytest.raises(RuntimeError):
        pz.scan_omega_eta(0.1, 0.9, 0.1, 33.6, 34.4, 0.1, 100)


def test_action_forms():
    m2 = pz.modulus_squared(0.3, 17.0, 100)
    ratio = pz.energy_gap(m2, 0.3) / pz.action_general(m2, 0.3)
    assert ratio == pytest.approx(5.0 / (6.0 * math.pi), abs=1e-14)
    a = pz.action_numeric(0.5, 25.0, 100, 0.0, 2.0 * math.pi)
    assert a == pytest.approx(pz.action_closed_point(0.5, 25.0, 100), abs=1e-9)


def test_chebyshev():
    assert pz.psi_approx(100.0) == pytest.approx(94.0453112293574, abs=1e-10)
    assert pz.psi_approx(1000.0) == pz.psi_exact(1000.0)
    rows = pz.check_psi_bound(74, 100)
    assert all(r["holds"] for r in rows)


def test_random_table():
    rows = pz.generate_table(20240817, sets=2)
    assert len(rows) == 32
    assert all(r["u"] % 2 == 1 for r in rows)
    assert rows == pz.generate_table(20240817, sets=2)
