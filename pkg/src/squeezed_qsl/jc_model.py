"""Damped Jaynes-Cummings qubit in a squeezed reservoir (Lorentzian spectrum).

Closed-form state and generator for the maximal coherent initial state
(|0> + |1>)/sqrt(2), plus the operator-norm speed-limit bound.  All times
are in units of the inverse qubit frequency.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .qsl_bound import QslResult, unified_bound
from .quadrature import QuadratureSettings, integrate
from .qubit_linalg import HermitianGenerator, QubitState, fidelity
from .reservoirs import LorentzianSpectrum, SqueezedEnvironment

__all__ = [
    "INITIAL_STATE",
    "alpha",
    "vartheta",
    "evolve_jc",
    "generator_jc",
    "qsl_jc",
]

INITIAL_STATE = QubitState(rho11=0.5, rho10=0.5 + 0.0j)


def _check_time(t: float) -> float:
    t = float(t)
    if not (t >= 0.0 and math.isfinite(t)):
        raise ValueError(f"time must be finite and >= 0, got {t!r}")
    return t


def alpha(t: float, spec: LorentzianSpectrum) -> float:
    """Memory-integrated coupling rate (gamma0/2)(1 - exp(-lam t)).

    Monotonically increasing from 0 towards gamma0/2.
    """
    t = _check_time(t)
    return -0.5 * spec.gamma0 * math.expm1(-spec.lam * t)


def vartheta(t: float, spec: LorentzianSpectrum) -> float:
    """Time integral of alpha over [0, t]; its derivative is alpha(t)."""
    t = _check_time(t)
    return 0.5 * spec.gamma0 * (t + math.expm1(-spec.lam * t) / spec.lam)


def evolve_jc(
    t: float, env: SqueezedEnvironment, spec: LorentzianSpectrum
) -> QubitState:
    """State at time t, starting from the maximal coherent state."""
    t = _check_time(t)
    theta_t = vartheta(t, spec)
    c2r = math.cosh(2.0 * env.r)
    rho11 = 0.5 * (1.0 + math.expm1(-2.0 * theta_t * c2r) / c2r)
    phase = cmath.exp(1j * env.theta)
    rho10 = 0.25 * (
        math.exp(-math.exp(2.0 * env.r) * theta_t) * (1.0 + phase)
        + math.exp(-math.exp(-2.0 * env.r) * theta_t) * (1.0 - phase)
    )
    return QubitState(rho11=rho11, rho10=rho10)


def generator_jc(
    t: float, env: SqueezedEnvironment, spec: LorentzianSpectrum
) -> HermitianGenerator:
    """Time derivative of evolve_jc at time t (traceless Hermitian)."""
    t = _check_time(t)
    a_t = alpha(t, spec)
    theta_t = vartheta(t, spec)
    d11 = -math.exp(-2.0 * math.cosh(2.0 * env.r) * theta_t) * a_t
    phase = cmath.exp(1j * env.theta)
    d10 = 0.25 * a_t * (
        math.exp(-2.0 * env.r - math.exp(-2.0 * env.r) * theta_t) * (phase - 1.0)
        - math.exp(2.0 * env.r - math.exp(2.0 * env.r) * theta_t) * (phase + 1.0)
    )
    return HermitianGenerator(d11=d11, d10=d10)


def _generator_norm_profile(
    t: np.ndarray, env: SqueezedEnvironment, spec: LorentzianSpectrum
) -> np.ndarray:
    """Vectorized operator norm of the generator, sqrt(d11^2 + |d10|^2)."""
    a_t = -0.5 * spec.gamma0 * np.expm1(-spec.lam * t)
    theta_t = 0.5 * spec.gamma0 * (t + np.expm1(-spec.lam * t) / spec.lam)
    d11 = -np.exp(-2.0 * math.cosh(2.0 * env.r) * theta_t) * a_t
    phase = cmath.exp(1j * env.theta)
    d10 = 0.25 * a_t * (
        np.exp(-2.0 * env.r - math.exp(-2.0 * env.r) * theta_t) * (phase - 1.0)
        - np.exp(2.0 * env.r - math.exp(2.0 * env.r) * theta_t) * (phase + 1.0)
    )
    return np.sqrt(d11 * d11 + np.abs(d10) ** 2)


def qsl_jc(
    tau: float,
    env: SqueezedEnvironment,
    spec: LorentzianSpectrum,
    settings: QuadratureSettings | None = None,
) -> QslResult:
    """Speed-limit time for driving time tau.

    Numerator is sin^2 of the Bures angle between the initial and evolved
    state; the denominator averages the generator's operator norm over
    [0, tau] by adaptive quadrature (the integrand is smooth and positive).
    """
    tau = float(tau)
    if tau <= 0.0:
        raise ValueError(f"tau must be > 0, got {tau!r}")
    settings = settings or QuadratureSettings()
    numerator = 1.0 - fidelity(INITIAL_STATE, evolve_jc(tau, env, spec))
    outcome = integrate(
        lambda t: _generator_norm_profile(t, env, spec), 0.0, tau, settings
    ).require_converged("generator-norm time integral")
    return unified_bound(numerator, outcome.value, tau, outcome.error_estimate)
