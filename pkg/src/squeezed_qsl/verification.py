"""Oracle-comparison suites behind the `verify` CLI subcommand.

Each check compares a production path against an independent path on a
fixed grid and reports the worst deviation against its documented
tolerance.  The acceptance tests run the same functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import dephasing_model, jc_model, oracles
from .quadrature import QuadratureSettings
from .qubit_linalg import HermitianGenerator, eigenvalues_2x2_hermitian, norms
from .reservoirs import LorentzianSpectrum, OhmicSpectrum, SqueezedEnvironment

__all__ = ["CheckResult", "SUITES", "run_verify"]

JC_GRID_R = (0.0, 0.4, 0.8)
JC_GRID_THETA = (0.0, 1.2, math.pi, 5.0)
JC_GRID_GAMMA0 = (0.1, 1.0, 5.0, 10.0)
JC_LAMBDA = 1.0
JC_CHECKPOINTS = tuple(0.5 * k for k in range(1, 11))  # (0.5, ..., 5.0)

DEPHASING_GRID_S = (0.5, 1.5, 2.0, 2.5, 3.0, 4.0, 0.999, 1.001)
DEPHASING_GRID_R = (0.0, 0.5, 1.0)
DEPHASING_GRID_THETA = (0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi)
DEPHASING_GRID_T = (0.5, 1.0, 3.0, 5.0)
DEPHASING_ETA = 1.0


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance


def _jc_grid():
    for r in JC_GRID_R:
        for theta in JC_GRID_THETA:
            env = SqueezedEnvironment(r=r, theta=theta)
            for gamma0 in JC_GRID_GAMMA0:
                yield env, LorentzianSpectrum(gamma0=gamma0, lam=JC_LAMBDA)


def _dephasing_grid():
    for s in DEPHASING_GRID_S:
        spec = OhmicSpectrum(eta=DEPHASING_ETA, s=s)
        for r in DEPHASING_GRID_R:
            for theta in DEPHASING_GRID_THETA:
                yield SqueezedEnvironment(r=r, theta=theta), spec


def check_norm_chain(n: int = 1000, seed: int = 20240801) -> CheckResult:
    """Norm triple vs an explicit eigensolver on random generators."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n):
        d11 = float(rng.normal(scale=2.0))
        d10 = complex(rng.normal(scale=2.0), rng.normal(scale=2.0))
        got = norms(HermitianGenerator(d11=d11, d10=d10))
        lam1, lam2 = eigenvalues_2x2_hermitian(d11, -d11, d10)
        want = (
            max(abs(lam1), abs(lam2)),
            math.sqrt(lam1 * lam1 + lam2 * lam2),
            abs(lam1) + abs(lam2),
        )
        for g, w in zip(got, want):
            if w > 0.0:
                worst = max(worst, abs(g - w) / w)
    return CheckResult("norm-chain-vs-eigensolver", worst, 1e-14)


def check_jc_oracle(step: float = 1e-4) -> CheckResult:
    """Closed-form state vs RK4 master-equation propagation."""
    settings = oracles.OdeSettings(step=step)
    worst = 0.0
    for env, spec in _jc_grid():
        propagated = oracles.propagate_checkpoints(JC_CHECKPOINTS, env, spec, settings)
        for t, state in zip(JC_CHECKPOINTS, propagated):
            closed = jc_model.evolve_jc(t, env, spec)
            worst = max(
                worst,
                abs(closed.rho11 - state.rho11),
                abs(closed.rho10 - state.rho10),
            )
    return CheckResult("jc-closed-form-vs-rk4", worst, 1e-7)


def check_jc_derivatives(h: float = 1e-5) -> CheckResult:
    """Generator elements vs central finite differences of the state."""
    worst = 0.0
    for env, spec in _jc_grid():
        for t in JC_CHECKPOINTS:
            gen = jc_model.generator_jc(t, env, spec)
            fd11 = oracles.finite_difference(
                lambda x: jc_model.evolve_jc(x, env, spec).rho11, t, h
            )
            fd_re = oracles.finite_difference(
                lambda x: jc_model.evolve_jc(x, env, spec).rho10.real, t, h
            )
            fd_im = oracles.finite_difference(
                lambda x: jc_model.evolve_jc(x, env, spec).rho10.imag, t, h
            )
            worst = max(
                worst,
                abs(gen.d11 - fd11),
                abs(gen.d10.real - fd_re),
                abs(gen.d10.imag - fd_im),
            )
    return CheckResult("jc-generator-vs-finite-difference", worst, 1e-7)


def check_dephasing_oracle() -> CheckResult:
    """Closed-form dephasing factor vs frequency-domain quadrature."""
    worst = 0.0
    for env, spec in _dephasing_grid():
        for t in DEPHASING_GRID_T:
            analytic = dephasing_model.gamma_analytic(t, env, spec)
            reference = dephasing_model.gamma_quadrature(t, env, spec)
            worst = max(worst, abs(analytic - reference) / abs(reference))
    return CheckResult("dephasing-analytic-vs-quadrature", worst, 1e-8)


def check_dephasing_rate(h: float = 1e-5) -> CheckResult:
    """Rate formula vs finite difference of the dephasing factor.

    Inside the pole window the factor comes from quadrature, so tight
    tolerances are needed there for the difference quotient to be clean.
    """
    tight = QuadratureSettings(abs_tol=1e-13, rel_tol=1e-12)
    worst = 0.0
    for env, spec in _dephasing_grid():
        for t in DEPHASING_GRID_T:
            rate = dephasing_model.gamma_rate(t, env, spec)
            fd = oracles.finite_difference(
                lambda x: dephasing_model.gamma_analytic(x, env, spec, tight), t, h
            )
            worst = max(worst, abs(rate - fd))
    return CheckResult("dephasing-rate-vs-finite-difference", worst, 1e-6)


def check_imag_residuals() -> CheckResult:
    """Imaginary residue of both closed forms after conjugate pairing."""
    worst = 0.0
    for env, spec in _dephasing_grid():
        for t in DEPHASING_GRID_T:
            zr = dephasing_model._rate_closed(t, env, spec)
            worst = max(worst, abs(zr.imag) / (1.0 + abs(zr.real)))
            if abs(spec.s - 1.0) >= dephasing_model.EPS_POLE:
                zg = dephasing_model._gamma_closed(t, env, spec)
                worst = max(worst, abs(zg.imag) / (1.0 + abs(zg.real)))
    return CheckResult("dephasing-imaginary-residual", worst, 1e-10)


SUITES = {
    "norms": (check_norm_chain,),
    "jc-oracle": (check_jc_oracle,),
    "dephasing-oracle": (check_dephasing_oracle,),
    "derivatives": (check_jc_derivatives, check_dephasing_rate, check_imag_residuals),
}


def run_verify(suite: str) -> list[CheckResult]:
    """Run one named suite of oracle comparisons."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    return [check() for check in SUITES[suite]]
