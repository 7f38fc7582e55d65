"""Pure-dephasing qubit in a squeezed reservoir with an Ohmic-family spectrum.

The dephasing factor has a closed form in terms of principal-branch complex
powers (1 +/- i t)^(1-s), (1 +/- 2 i t)^(1-s); the conjugate-pair structure
makes it real.  The prefactor Gamma(s-1) has a removable singularity at
s = 1, so a window around it is routed through the frequency-domain
quadrature instead.  All times are in units of 1/omega_c.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .qsl_bound import QslResult, unified_bound
from .quadrature import (
    QuadratureOutcome,
    QuadratureSettings,
    find_root,
    integrate,
    integrate_panels,
)
from .qubit_linalg import QubitState
from .reservoirs import OhmicSpectrum, SqueezedEnvironment

__all__ = [
    "EPS_POLE",
    "TOL_SIGN",
    "DephasingTrajectory",
    "SignRegionMaps",
    "spectral_density",
    "gamma_analytic",
    "gamma_quadrature",
    "gamma_rate",
    "evolve_dephasing",
    "dephasing_trajectory",
    "qsl_dephasing",
    "rate_sign_summary",
    "sign_region",
]

# Half-width of the removable-singularity window around s = 1 that is
# evaluated by quadrature instead of the closed form.
EPS_POLE = 1e-3
# |rate| below this is classified as a sign boundary.
TOL_SIGN = 1e-12
# Residual imaginary part allowed after the conjugate pairs combine.
_IMAG_TOL = 1e-10
# Sample count used to bracket rate sign changes on [0, tau].
_RATE_SCAN_SAMPLES = 257


def _check_time(t: float) -> float:
    t = float(t)
    if not (t >= 0.0 and math.isfinite(t)):
        raise ValueError(f"time must be finite and >= 0, got {t!r}")
    return t


def _require_real(z: complex, what: str) -> float:
    if abs(z.imag) > _IMAG_TOL * (1.0 + abs(z.real)):
        raise ArithmeticError(
            f"{what}: imaginary residual {z.imag:.3e} exceeds tolerance"
        )
    return z.real


def spectral_density(omega, spec: OhmicSpectrum):
    """Ohmic-family spectral density with exponential cutoff (vectorized)."""
    omega = np.asarray(omega, dtype=float)
    return (
        spec.eta
        * omega**spec.s
        / spec.omega_c ** (spec.s - 1.0)
        * np.exp(-omega / spec.omega_c)
    )


def _gamma_closed(t: float, env: SqueezedEnvironment, spec: OhmicSpectrum) -> complex:
    """Closed-form dephasing factor before taking the real part."""
    u = spec.omega_c * t
    w = 1.0 - spec.s
    zp = (1.0 + 1j * u) ** w
    zm = (1.0 - 1j * u) ** w
    z2p = (1.0 + 2j * u) ** w
    z2m = (1.0 - 2j * u) ** w
    c2r = math.cosh(2.0 * env.r)
    s2r = math.sinh(2.0 * env.r)
    phase = cmath.exp(1j * env.theta)
    return (
        0.25
        * spec.eta
        * math.gamma(spec.s - 1.0)
        * (
            2.0 * c2r * (2.0 - zp - zm)
            + s2r / phase * (1.0 - 2.0 * zm + z2m)
            + s2r * phase * (1.0 - 2.0 * zp + z2p)
        )
    )


def _rate_closed(t: float, env: SqueezedEnvironment, spec: OhmicSpectrum) -> complex:
    """Closed-form dephasing rate before taking the real part."""
    u = spec.omega_c * t
    w = -spec.s
    zp = (1.0 + 1j * u) ** w
    zm = (1.0 - 1j * u) ** w
    z2p = (1.0 + 2j * u) ** w
    z2m = (1.0 - 2j * u) ** w
    c2r = math.cosh(2.0 * env.r)
    s2r = math.sinh(2.0 * env.r)
    phase = cmath.exp(1j * env.theta)
    return (
        0.5j
        * spec.eta
        * spec.omega_c
        * math.gamma(spec.s)
        * (
            c2r * (zp - zm)
            + s2r / phase * (z2m - zm)
            + s2r * phase * (zp - z2p)
        )
    )


def gamma_quadrature(
    t: float,
    env: SqueezedEnvironment,
    spec: OhmicSpectrum,
    settings: QuadratureSettings | None = None,
) -> float:
    """Dephasing factor from its frequency-integral definition.

    The integrand oscillates with period 2*pi/t in omega, so the truncated
    range is pre-split at half-period boundaries before the adaptive engine
    runs.  Serves as the oracle for the closed form and as the production
    path inside the pole window.
    """
    return _gamma_quadrature_outcome(t, env, spec, settings).value


def _gamma_quadrature_outcome(
    t: float,
    env: SqueezedEnvironment,
    spec: OhmicSpectrum,
    settings: QuadratureSettings | None = None,
) -> QuadratureOutcome:
    t = _check_time(t)
    settings = settings or QuadratureSettings()
    # Exponential cutoff makes the tail beyond omega_max analytically
    # negligible (< 1e-12 of the integral for every s in range).
    omega_max = spec.omega_c * max(50.0, 40.0 + 10.0 * spec.s)
    if t == 0.0:
        return QuadratureOutcome(0.0, 0.0, 0, True)
    half_period = math.pi / t
    n_panels = max(1, math.ceil(omega_max / half_period))
    edges = np.linspace(0.0, n_panels * half_period, n_panels + 1)
    c2r = math.cosh(2.0 * env.r)
    s2r = math.sinh(2.0 * env.r)

    def integrand(omega: np.ndarray) -> np.ndarray:
        squeeze = c2r - np.cos(omega * t - env.theta) * s2r
        lobe = 2.0 * np.sin(0.5 * omega * t) ** 2
        return spectral_density(omega, spec) * lobe / omega**2 * squeeze

    return integrate_panels(integrand, edges, settings).require_converged(
        "dephasing-factor frequency integral"
    )


def gamma_analytic(
    t: float,
    env: SqueezedEnvironment,
    spec: OhmicSpectrum,
    settings: QuadratureSettings | None = None,
) -> float:
    """Dephasing factor; closed form, or quadrature inside the pole window."""
    t = _check_time(t)
    if abs(spec.s - 1.0) < EPS_POLE:
        return gamma_quadrature(t, env, spec, settings)
    value = _require_real(_gamma_closed(t, env, spec), "dephasing factor")
    if value < -_IMAG_TOL * spec.eta:
        raise ArithmeticError(f"dephasing factor came out negative: {value!r}")
    return max(0.0, value)


def _gamma_with_error(
    t: float,
    env: SqueezedEnvironment,
    spec: OhmicSpectrum,
    settings: QuadratureSettings | None,
) -> tuple[float, float]:
    if abs(spec.s - 1.0) < EPS_POLE:
        outcome = _gamma_quadrature_outcome(t, env, spec, settings)
        return outcome.value, outcome.error_estimate
    return gamma_analytic(t, env, spec), 0.0


def gamma_rate(t: float, env: SqueezedEnvironment, spec: OhmicSpectrum) -> float:
    """Dephasing rate (time derivative of the dephasing factor).

    Negative values mark coherence revivals; those are what open the
    speed-up region of the bound.
    """
    t = _check_time(t)
    return _require_real(_rate_closed(t, env, spec), "dephasing rate")


def _rate_profile(
    t: np.ndarray, env: SqueezedEnvironment, spec: OhmicSpectrum
) -> np.ndarray:
    """Vectorized dephasing rate on an array of times."""
    u = spec.omega_c * np.asarray(t, dtype=float)
    w = -spec.s
    zp = (1.0 + 1j * u) ** w
    zm = (1.0 - 1j * u) ** w
    z2p = (1.0 + 2j * u) ** w
    z2m = (1.0 - 2j * u) ** w
    c2r = math.cosh(2.0 * env.r)
    s2r = math.sinh(2.0 * env.r)
    phase = cmath.exp(1j * env.theta)
    z = (
        0.5j
        * spec.eta
        * spec.omega_c
        * math.gamma(spec.s)
        * (c2r * (zp - zm) + s2r / phase * (z2m - zm) + s2r * phase * (zp - z2p))
    )
    bad = np.abs(z.imag) > _IMAG_TOL * (1.0 + np.abs(z.real))
    if np.any(bad):
        raise ArithmeticError("dephasing rate: imaginary residual exceeds tolerance")
    return z.real


def _gamma_profile(
    t: np.ndarray,
    env: SqueezedEnvironment,
    spec: OhmicSpectrum,
    settings: QuadratureSettings | None = None,
) -> np.ndarray:
    """Vectorized dephasing factor (quadrature per point inside the pole window)."""
    t = np.asarray(t, dtype=float)
    if abs(spec.s - 1.0) < EPS_POLE:
        return np.array([gamma_quadrature(ti, env, spec, settings) for ti in t])
    u = spec.omega_c * t
    w = 1.0 - spec.s
    zp = (1.0 + 1j * u) ** w
    zm = (1.0 - 1j * u) ** w
    z2p = (1.0 + 2j * u) ** w
    z2m = (1.0 - 2j * u) ** w
    c2r = math.cosh(2.0 * env.r)
    s2r = math.sinh(2.0 * env.r)
    phase = cmath.exp(1j * env.theta)
    z = (
        0.25
        * spec.eta
        * math.gamma(spec.s - 1.0)
        * (
            2.0 * c2r * (2.0 - zp - zm)
            + s2r / phase * (1.0 - 2.0 * zm + z2m)
            + s2r * phase * (1.0 - 2.0 * zp + z2p)
        )
    )
    bad = np.abs(z.imag) > _IMAG_TOL * (1.0 + np.abs(z.real))
    if np.any(bad):
        raise ArithmeticError("dephasing factor: imaginary residual exceeds tolerance")
    return np.maximum(z.real, 0.0)


@dataclass(frozen=True)
class DephasingTrajectory:
    """Dephasing factor and rate at a single time."""

    t: float
    gamma: float
    gamma_rate: float


def dephasing_trajectory(
    t: float,
    env: SqueezedEnvironment,
    spec: OhmicSpectrum,
    settings: QuadratureSettings | None = None,
) -> DephasingTrajectory:
    return DephasingTrajectory(
        t=float(t),
        gamma=gamma_analytic(t, env, spec, settings),
        gamma_rate=gamma_rate(t, env, spec),
    )


def evolve_dephasing(
    t: float,
    env: SqueezedEnvironment,
    spec: OhmicSpectrum,
    settings: QuadratureSettings | None = None,
) -> QubitState:
    """State at time t: populations frozen, coherence damped by exp(-gamma)."""
    g = gamma_analytic(t, env, spec, settings)
    return QubitState(rho11=0.5, rho10=0.5 * math.exp(-g))


def _rate_sign_changes(
    tau: float, env: SqueezedEnvironment, spec: OhmicSpectrum
) -> list[float]:
    """Interior zeros of the rate on (0, tau), bracketed on a dense sample."""
    ts = np.linspace(0.0, tau, _RATE_SCAN_SAMPLES)
    rates = _rate_profile(ts, env, spec)
    roots: list[float] = []
    for i in range(1, len(ts) - 1):
        a, b = rates[i], rates[i + 1]
        if a == 0.0:
            roots.append(float(ts[i]))
        elif a * b < 0.0:
            roots.append(
                find_root(
                    lambda x: gamma_rate(x, env, spec),
                    float(ts[i]),
                    float(ts[i + 1]),
                    tol=1e-13 * max(1.0, tau),
                )
            )
    return roots


def qsl_dephasing(
    tau: float,
    env: SqueezedEnvironment,
    spec: OhmicSpectrum,
    settings: QuadratureSettings | None = None,
) -> QslResult:
    """Speed-limit time for driving time tau.

    The generator's operator norm is |rate| exp(-gamma) / 2, which has kinks
    where the rate changes sign; the integral is therefore taken piecewise
    between rate zeros.  When the rate is non-negative on all of [0, tau]
    the integral telescopes to the numerator and the ratio is exactly 1.
    """
    tau = float(tau)
    if tau <= 0.0:
        raise ValueError(f"tau must be > 0, got {tau!r}")
    settings = settings or QuadratureSettings()
    gamma_tau, gamma_err = _gamma_with_error(tau, env, spec, settings)
    numerator = -0.5 * math.expm1(-gamma_tau)

    edges = [0.0, *_rate_sign_changes(tau, env, spec), tau]
    piece_settings = QuadratureSettings(
        abs_tol=settings.abs_tol / (len(edges) - 1),
        rel_tol=settings.rel_tol,
        max_subdivisions=settings.max_subdivisions,
    )

    def integrand(t: np.ndarray) -> np.ndarray:
        return (
            0.5
            * np.abs(_rate_profile(t, env, spec))
            * np.exp(-_gamma_profile(t, env, spec, settings))
        )

    total = 0.0
    quad_error = gamma_err
    for a, b in zip(edges[:-1], edges[1:]):
        outcome = integrate(integrand, a, b, piece_settings).require_converged(
            "generator-norm time integral"
        )
        total += outcome.value
        quad_error += outcome.error_estimate
    return unified_bound(numerator, total, tau, quad_error)


def _classify(value: float) -> int:
    if abs(value) <= TOL_SIGN:
        return 0
    return 1 if value > 0.0 else -1


def rate_sign_summary(
    tau: float, env: SqueezedEnvironment, spec: OhmicSpectrum
) -> tuple[int, int]:
    """Sign of the rate at t = tau and of its minimum over (0, tau].

    Returns +1 / -1 / 0 (boundary) codes.  t = 0 is excluded from the
    minimum because the rate vanishes there identically.
    """
    ts = np.linspace(0.0, tau, _RATE_SCAN_SAMPLES)
    rates = _rate_profile(ts, env, spec)
    return _classify(float(rates[-1])), _classify(float(rates[1:].min()))


@dataclass(frozen=True)
class SignRegionMaps:
    """Sign maps of the dephasing rate over an (s, theta) grid.

    Codes: +1 positive, -1 negative, 0 boundary.  sign_at_end is the sign
    at t = tau; sign_min_interval flags whether the rate dips negative
    anywhere on (0, tau].
    """

    s_values: np.ndarray
    theta_values: np.ndarray
    sign_at_end: np.ndarray
    sign_min_interval: np.ndarray


def sign_region(
    env_r: float,
    tau: float,
    s_grid,
    theta_grid,
    eta: float = 1.0,
    omega_c: float = 1.0,
) -> SignRegionMaps:
    """Evaluate both rate-sign maps on the outer product of the two grids."""
    s_values = np.asarray(s_grid, dtype=float)
    theta_values = np.asarray(theta_grid, dtype=float)
    if s_values.size == 0 or theta_values.size == 0:
        raise ValueError("grids must be non-empty")
    if tau <= 0.0:
        raise ValueError(f"tau must be > 0, got {tau!r}")
    at_end = np.empty((s_values.size, theta_values.size), dtype=np.int8)
    min_interval = np.empty_like(at_end)
    for i, s in enumerate(s_values):
        spec = OhmicSpectrum(eta=eta, s=float(s), omega_c=omega_c)
        for j, theta in enumerate(theta_values):
            env = SqueezedEnvironment(r=env_r, theta=float(theta))
            at_end[i, j], min_interval[i, j] = rate_sign_summary(tau, env, spec)
    return SignRegionMaps(
        s_values=s_values,
        theta_values=theta_values,
        sign_at_end=at_end,
        sign_min_interval=min_interval,
    )
