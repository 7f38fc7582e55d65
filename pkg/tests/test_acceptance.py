"""Acceptance suite: every criterion at its stated tolerance, one printed
pass/fail line per criterion (run with -s to see them during the run).
"""

import math
import time

import numpy as np
import pytest

from squeezed_qsl import verification
from squeezed_qsl.cli import main
from squeezed_qsl.dephasing_model import _rate_profile, qsl_dephasing, gamma_rate
from squeezed_qsl.quadrature import find_root
from squeezed_qsl.reservoirs import OhmicSpectrum, SqueezedEnvironment
from squeezed_qsl.scan import read_scan_csv


def report(name: str, ok: bool, detail: str) -> None:
    print(f"[acceptance] {name}: {'PASS' if ok else 'FAIL'} ({detail})", flush=True)


@pytest.fixture(scope="session")
def preset_csv(tmp_path_factory):
    paths = {}

    def build(name: str, tag: str = "run1"):
        key = (name, tag)
        if key not in paths:
            out = tmp_path_factory.mktemp("presets") / f"{name}-{tag}.csv"
            assert main(["scan", "--preset", name, "--out", str(out)]) == 0
            paths[key] = out
        return paths[key]

    return build


def grid_from_csv(path, column):
    header, columns, rows = read_scan_csv(path)
    n0 = int(header["axis0_count"])
    n1 = int(header["axis1_count"])
    idx = columns.index(column)
    values = [row[idx] for row in rows]
    if column in ("sign_at_tau", "sign_min_interval", "tight_norm"):
        data = np.array(values).reshape(n0, n1)
    else:
        data = np.array([float(v) for v in values]).reshape(n0, n1)
    return header, data


def test_norm_chain_exactness():
    start = time.perf_counter()
    result = verification.check_norm_chain(n=1000)
    elapsed = time.perf_counter() - start
    ok = result.passed and elapsed < 1.0
    report(
        "norm-chain-exactness",
        ok,
        f"max rel dev {result.max_deviation:.3e} <= 1e-14, {elapsed:.2f}s < 1s",
    )
    assert result.max_deviation <= 1e-14
    assert elapsed < 1.0


def test_jc_closed_form_vs_master_equation_oracle():
    start = time.perf_counter()
    result = verification.check_jc_oracle(step=1e-4)
    elapsed = time.perf_counter() - start
    ok = result.passed and elapsed < 120.0
    report(
        "jc-closed-form-vs-ode-oracle",
        ok,
        f"max element dev {result.max_deviation:.3e} <= 1e-7, {elapsed:.1f}s < 120s",
    )
    assert result.max_deviation <= 1e-7
    assert elapsed < 120.0


def test_jc_derivative_formulas():
    start = time.perf_counter()
    result = verification.check_jc_derivatives(h=1e-5)
    elapsed = time.perf_counter() - start
    ok = result.passed and elapsed < 10.0
    report(
        "jc-derivative-formulas",
        ok,
        f"max dev {result.max_deviation:.3e} <= 1e-7, {elapsed:.1f}s < 10s",
    )
    assert result.max_deviation <= 1e-7
    assert elapsed < 10.0


def test_fig1a_structure(preset_csv):
    start = time.perf_counter()
    path = preset_csv("fig1a")
    elapsed = time.perf_counter() - start
    header, grid = grid_from_csv(path, "ratio")
    assert header["axis0_name"] == "theta" and header["axis1_name"] == "gamma0"
    n = grid.shape[0]
    mirror = np.array([grid[(n - j) % n, :] for j in range(n)])
    sym_dev = float(np.abs(grid - mirror).max())
    max_at_zero = bool((grid[0, :] >= grid.max(axis=0) - 1e-12).all())
    ok = sym_dev <= 1e-10 and max_at_zero and elapsed < 60.0
    report(
        "fig1a-structure",
        ok,
        f"theta-mirror dev {sym_dev:.3e} <= 1e-10, max at theta=0: {max_at_zero}, "
        f"{elapsed:.1f}s < 60s",
    )
    assert sym_dev <= 1e-10
    assert max_at_zero
    assert elapsed < 60.0
    assert ((grid > 0.0) & (grid <= 1.0 + 1e-12)).all()


def test_fig1b_structure(preset_csv):
    start = time.perf_counter()
    path = preset_csv("fig1b")
    elapsed = time.perf_counter() - start
    header, grid = grid_from_csv(path, "ratio")
    assert header["axis0_name"] == "r" and header["axis1_name"] == "gamma0"
    assert ((grid > 0.0) & (grid <= 1.0 + 1e-12)).all()
    min_step_r = float(np.diff(grid, axis=0).min())
    min_step_g = float(np.diff(grid, axis=1).min())
    ok = min_step_r >= -1e-10 and min_step_g >= -1e-10 and elapsed < 60.0
    report(
        "fig1b-structure",
        ok,
        f"min increment along r {min_step_r:.3e}, along gamma0 {min_step_g:.3e} "
        f"(>= -1e-10), {elapsed:.1f}s < 60s",
    )
    assert min_step_r >= -1e-10
    assert min_step_g >= -1e-10
    assert elapsed < 60.0


def test_dephasing_analytic_vs_quadrature():
    start = time.perf_counter()
    result = verification.check_dephasing_oracle()
    elapsed = time.perf_counter() - start
    ok = result.passed and elapsed < 30.0
    report(
        "dephasing-analytic-vs-quadrature",
        ok,
        f"max rel dev {result.max_deviation:.3e} <= 1e-8, {elapsed:.1f}s < 30s",
    )
    assert result.max_deviation <= 1e-8
    assert elapsed < 30.0


def test_dephasing_rate_consistency():
    start = time.perf_counter()
    rate_result = verification.check_dephasing_rate(h=1e-5)
    imag_result = verification.check_imag_residuals()
    elapsed = time.perf_counter() - start
    ok = rate_result.passed and imag_result.passed and elapsed < 10.0
    report(
        "dephasing-rate-consistency",
        ok,
        f"max fd dev {rate_result.max_deviation:.3e} <= 1e-6, "
        f"imag residual {imag_result.max_deviation:.3e} <= 1e-10, {elapsed:.1f}s < 10s",
    )
    assert rate_result.max_deviation <= 1e-6
    assert imag_result.max_deviation <= 1e-10
    assert elapsed < 10.0


def test_saturation_law():
    start = time.perf_counter()
    tau = 3.0
    # ratio == 1 exactly where the rate never dips negative, < 1 otherwise
    sample_points = [
        (0.0, 0.0, 0.5),
        (0.0, 0.0, 1.0),
        (0.0, 0.0, 2.0),
        (0.5, 0.5 * math.pi, 3.0),
        (1.0, math.pi, 2.0),
        (1.0, 1.25 * math.pi, 2.0),
        (1.0, 0.0, 3.5),
    ]
    worst_saturated = 0.0
    revival_ratios = []
    for r, theta, s in sample_points:
        env = SqueezedEnvironment(r, theta)
        spec = OhmicSpectrum(1.0, s)
        rates = _rate_profile(np.linspace(0.0, tau, 2001), env, spec)
        ratio = qsl_dephasing(tau, env, spec).ratio
        if rates[1:].min() >= 0.0:
            worst_saturated = max(worst_saturated, abs(ratio - 1.0))
        else:
            revival_ratios.append(ratio)

    # vacuum boundary: bisection on the rate at t = tau in the s direction
    s_star = find_root(
        lambda s: gamma_rate(tau, SqueezedEnvironment(0.0), OhmicSpectrum(1.0, s)),
        2.0,
        3.0,
    )
    below = [qsl_dephasing(tau, SqueezedEnvironment(0.0), OhmicSpectrum(1.0, s)).ratio
             for s in (1.5, 2.4, s_star - 0.01)]
    above = [qsl_dephasing(tau, SqueezedEnvironment(0.0), OhmicSpectrum(1.0, s)).ratio
             for s in (s_star + 0.05, 3.0, 4.0)]
    elapsed = time.perf_counter() - start
    ok = (
        worst_saturated <= 1e-8
        and revival_ratios
        and all(v < 1.0 - 1e-8 for v in revival_ratios)
        and 2.510 <= s_star <= 2.520
        and all(abs(v - 1.0) <= 1e-8 for v in below)
        and all(v < 1.0 - 1e-8 for v in above)
        and elapsed < 30.0
    )
    report(
        "dephasing-saturation-law",
        ok,
        f"saturated dev {worst_saturated:.3e} <= 1e-8, revivals < 1: "
        f"{[f'{v:.6f}' for v in revival_ratios]}, s* = {s_star:.4f} in [2.510, 2.520], "
        f"{elapsed:.1f}s < 30s",
    )
    assert worst_saturated <= 1e-8
    assert revival_ratios and all(v < 1.0 - 1e-8 for v in revival_ratios)
    assert 2.510 <= s_star <= 2.520
    assert all(abs(v - 1.0) <= 1e-8 for v in below)
    assert all(v < 1.0 - 1e-8 for v in above)
    assert elapsed < 30.0


def test_fig2_structure(preset_csv):
    start = time.perf_counter()
    path = preset_csv("fig2")
    elapsed = time.perf_counter() - start
    header, signs = grid_from_csv(path, "sign_at_tau")
    assert header["axis0_name"] == "s"
    s_values = np.linspace(
        float(header["axis0_min"]), float(header["axis0_max"]), int(header["axis0_count"])
    )
    has_positive = bool((signs == "positive").any())
    negative_rows = np.where((signs == "negative").any(axis=1))[0]
    min_negative_s = float(s_values[negative_rows].min()) if negative_rows.size else math.inf
    ok = has_positive and min_negative_s < 2.5 and elapsed < 60.0
    report(
        "fig2-structure",
        ok,
        f"both signs present: {has_positive and negative_rows.size > 0}, "
        f"negative cells reach s = {min_negative_s:.4f} < 2.5, {elapsed:.1f}s < 60s",
    )
    assert has_positive
    assert negative_rows.size > 0
    assert min_negative_s < 2.5
    assert elapsed < 60.0

    _, ratios = grid_from_csv(path, "ratio")
    assert ((ratios > 0.0) & (ratios <= 1.0 + 1e-12)).all()


def test_preset_determinism(preset_csv):
    identical = {}
    for name in ("fig1a", "fig1b", "fig2"):
        first = preset_csv(name)
        second = preset_csv(name, "run2")
        identical[name] = first.read_bytes() == second.read_bytes()
    ok = all(identical.values())
    report(
        "preset-determinism",
        ok,
        "byte-identical reruns: " + ", ".join(f"{k}={v}" for k, v in identical.items()),
    )
    assert ok
