"""Brute-force validators: fixed-step RK4 master-equation propagation and
central finite differences.  Test/verification surface only, never the
production path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .qubit_linalg import QubitState
from .reservoirs import LorentzianSpectrum, SqueezedEnvironment

__all__ = [
    "OdeSettings",
    "TraceDriftError",
    "propagate_master_equation",
    "propagate_checkpoints",
    "finite_difference",
]

_TRACE_ABORT = 1e-8


@dataclass(frozen=True)
class OdeSettings:
    """Fixed-step 4th-order Runge-Kutta step size."""

    step: float = 1e-4

    def __post_init__(self) -> None:
        if not (self.step > 0.0 and math.isfinite(self.step)):
            raise ValueError(f"step must be > 0, got {self.step!r}")


class TraceDriftError(RuntimeError):
    """Trace left 1 beyond tolerance; indicates an equation-transcription bug."""


def _propagate(
    times: Sequence[float],
    env: SqueezedEnvironment,
    spec: LorentzianSpectrum,
    step: float,
) -> list[QubitState]:
    """RK4 on the element equations of the squeezed-reservoir master equation.

    State vector is (rho11, rho00, Re rho10, Im rho10): rho00 is integrated
    redundantly as a trace check, and the coherence must be propagated as
    two coupled real equations because the pair-correlation terms couple
    rho10 to its conjugate.
    """
    n_eff = env.photon_number
    pair = env.pair_correlation
    mr2, mi2 = 2.0 * pair.real, 2.0 * pair.imag
    c_dn = 2.0 * (n_eff + 1.0)  # downward rate coefficient, times alpha
    c_up = 2.0 * n_eff
    c_coh = 2.0 * n_eff + 1.0
    half_g = 0.5 * spec.gamma0
    lam = spec.lam
    exp = math.exp

    def rhs(t: float, p1: float, p0: float, x: float, y: float):
        al = half_g * (1.0 - exp(-lam * t))
        flow = c_up * al * p0 - c_dn * al * p1
        dx = al * ((mr2 - c_coh) * x + mi2 * y)
        dy = al * (mi2 * x - (mr2 + c_coh) * y)
        return flow, -flow, dx, dy

    p1, p0, x, y = 0.5, 0.5, 0.5, 0.0
    t = 0.0
    states: list[QubitState] = []
    for target in times:
        seg = target - t
        if seg < 0.0:
            raise ValueError("checkpoint times must be non-decreasing")
        n_steps = max(1, round(seg / step)) if seg > 0.0 else 0
        h = seg / n_steps if n_steps else 0.0
        for _ in range(n_steps):
            k1 = rhs(t, p1, p0, x, y)
            k2 = rhs(
                t + 0.5 * h,
                p1 + 0.5 * h * k1[0],
                p0 + 0.5 * h * k1[1],
                x + 0.5 * h * k1[2],
                y + 0.5 * h * k1[3],
            )
            k3 = rhs(
                t + 0.5 * h,
                p1 + 0.5 * h * k2[0],
                p0 + 0.5 * h * k2[1],
                x + 0.5 * h * k2[2],
                y + 0.5 * h * k2[3],
            )
            k4 = rhs(
                t + h,
                p1 + h * k3[0],
                p0 + h * k3[1],
                x + h * k3[2],
                y + h * k3[3],
            )
            sixth = h / 6.0
            p1 += sixth * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0])
            p0 += sixth * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])
            x += sixth * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2])
            y += sixth * (k1[3] + 2.0 * k2[3] + 2.0 * k3[3] + k4[3])
            t += h
        t = target
        drift = abs(p1 + p0 - 1.0)
        if drift > _TRACE_ABORT:
            raise TraceDriftError(
                f"trace drift {drift:.3e} at t={t!r} exceeds {_TRACE_ABORT:g}"
            )
        states.append(QubitState(rho11=p1, rho10=complex(x, y)))
    return states


def propagate_master_equation(
    t_end: float,
    env: SqueezedEnvironment,
    spec: LorentzianSpectrum,
    settings: OdeSettings | None = None,
) -> QubitState:
    """State at t_end from RK4 propagation of the master equation."""
    t_end = float(t_end)
    if not (t_end >= 0.0 and math.isfinite(t_end)):
        raise ValueError(f"t_end must be finite and >= 0, got {t_end!r}")
    settings = settings or OdeSettings()
    return _propagate([t_end], env, spec, settings.step)[0]


def propagate_checkpoints(
    times: Sequence[float],
    env: SqueezedEnvironment,
    spec: LorentzianSpectrum,
    settings: OdeSettings | None = None,
) -> list[QubitState]:
    """States at each checkpoint of a single propagation run."""
    times = [float(t) for t in times]
    if not times or times[0] < 0.0:
        raise ValueError("need at least one non-negative checkpoint")
    settings = settings or OdeSettings()
    return _propagate(times, env, spec, settings.step)


def finite_difference(f: Callable[[float], float], x: float, h: float) -> float:
    """Central difference (f(x+h) - f(x-h)) / (2h)."""
    if not h > 0.0:
        raise ValueError(f"h must be > 0, got {h!r}")
    return (f(x + h) - f(x - h)) / (2.0 * h)
