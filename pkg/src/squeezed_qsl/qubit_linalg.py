"""Exact 2x2 Hermitian algebra for qubit density matrices.

A state stores only the excited population and the upper coherence; the
remaining entries follow from unit trace and Hermiticity, so those two
invariants hold by construction and only positivity needs checking.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

# Closed-form trajectories can dip a rounding error below zero determinant;
# determinants in [-TOL_PSD, 0] are clamped to 0, anything lower is rejected.
TOL_PSD = 1e-12

_SQRT2 = math.sqrt(2.0)


class PositivityError(ValueError):
    """Density matrix violates positive semidefiniteness beyond TOL_PSD."""


@dataclass(frozen=True)
class QubitState:
    """Density matrix [[rho11, rho10], [conj(rho10), 1 - rho11]].

    rho11 is the excited-level population, rho10 the coherence between
    excited and ground level.
    """

    rho11: float
    rho10: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "rho11", float(self.rho11))
        object.__setattr__(self, "rho10", complex(self.rho10))
        if not (math.isfinite(self.rho11) and cmath.isfinite(self.rho10)):
            raise ValueError("density matrix entries must be finite")
        if self.determinant < -TOL_PSD:
            raise PositivityError(
                f"state (rho11={self.rho11!r}, rho10={self.rho10!r}) has "
                f"determinant {self.determinant:.3e} < -{TOL_PSD:g}"
            )

    @property
    def rho00(self) -> float:
        return 1.0 - self.rho11

    @property
    def rho01(self) -> complex:
        return self.rho10.conjugate()

    @property
    def determinant(self) -> float:
        return self.rho11 * (1.0 - self.rho11) - abs(self.rho10) ** 2

    def as_matrix(self):
        """Full 2x2 complex ndarray, excited level first."""
        import numpy as np

        return np.array(
            [[self.rho11, self.rho10], [self.rho01, self.rho00]], dtype=complex
        )


@dataclass(frozen=True)
class HermitianGenerator:
    """Traceless Hermitian time derivative of a QubitState.

    Represents [[d11, d10], [conj(d10), -d11]], units 1/time.
    """

    d11: float
    d10: complex

    def as_matrix(self):
        import numpy as np

        return np.array(
            [[self.d11, self.d10], [self.d10.conjugate(), -self.d11]], dtype=complex
        )


class MatrixNorms(NamedTuple):
    op: float
    hs: float
    tr: float


def _clamped_det(state: QubitState) -> float:
    det = state.determinant
    if det < -TOL_PSD:
        raise PositivityError(f"determinant {det:.3e} below -{TOL_PSD:g}")
    return max(det, 0.0)


def fidelity(a: QubitState, b: QubitState) -> float:
    """Uhlmann fidelity via the 2x2 closed form tr(ab) + 2 sqrt(det a det b)."""
    det_a = _clamped_det(a)
    det_b = _clamped_det(b)
    if a == b:
        # exactly 1 for identical entries; the closed form only reaches
        # 1 - O(eps), which arccos would amplify to a ~1e-8 spurious angle
        return 1.0
    overlap = (
        a.rho11 * b.rho11
        + a.rho00 * b.rho00
        + 2.0 * (a.rho10 * b.rho10.conjugate()).real
    )
    f = overlap + 2.0 * math.sqrt(det_a * det_b)
    return min(1.0, max(0.0, f))


def bures_angle(a: QubitState, b: QubitState) -> float:
    """Bures angle arccos(sqrt F), a metric distance in [0, pi/2]."""
    return math.acos(math.sqrt(fidelity(a, b)))


def norms(g: HermitianGenerator) -> MatrixNorms:
    """Operator, Hilbert-Schmidt and trace norm of a traceless generator.

    The eigenvalues are +/- m with m = sqrt(d11^2 + |d10|^2), so the three
    norms are exactly m, sqrt(2) m and 2 m.
    """
    m = math.hypot(g.d11, abs(g.d10))
    return MatrixNorms(op=m, hs=_SQRT2 * m, tr=2.0 * m)


def eigenvalues_2x2_hermitian(
    m11: float, m22: float, m12: complex
) -> tuple[float, float]:
    """Eigenvalues of [[m11, m12], [conj(m12), m22]], largest first."""
    mean = 0.5 * (m11 + m22)
    radius = math.hypot(0.5 * (m11 - m22), abs(m12))
    return mean + radius, mean - radius
