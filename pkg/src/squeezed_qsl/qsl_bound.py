"""Unified speed-limit bound assembled from a path-averaged generator norm.

The bound takes the largest of the three norm variants (operator,
Hilbert-Schmidt, trace).  For traceless 2x2 generators the norms stand in
exact ratio 1 : sqrt(2) : 2, so the operator-norm variant always wins; all
three are still evaluated and the winner recorded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# The bound is exact mathematics (tau_qsl <= tau); overshoot beyond roundoff
# signals a bug rather than a tight bound, so it is an error.
_OVERSHOOT_TOL = 1e-6

_NORM_SCALES = (("op", 1.0), ("hs", math.sqrt(2.0)), ("tr", 2.0))


@dataclass(frozen=True)
class QslResult:
    """Speed-limit time for a driving time tau.

    ratio = tau_qsl / tau lies in (0, 1]; tight_norm names the norm variant
    that attained the max; quad_error is the error estimate of the
    generator-norm time integral (plus the numerator's, where it is itself
    computed by quadrature).
    """

    tau: float
    tau_qsl: float
    ratio: float
    tight_norm: str
    quad_error: float


def unified_bound(
    numerator: float, op_norm_integral: float, tau: float, quad_error: float
) -> QslResult:
    """Assemble a QslResult from sin^2 of the Bures angle and the op-norm integral.

    op_norm_integral is int_0^tau ||d rho/dt||_op dt; the hs and tr variants
    follow from the exact norm ratios of traceless 2x2 generators.
    """
    if tau <= 0.0:
        raise ValueError(f"tau must be > 0, got {tau!r}")
    if op_norm_integral <= 0.0:
        raise ValueError("generator-norm integral must be positive")
    candidates = {
        name: numerator * tau / (scale * op_norm_integral)
        for name, scale in _NORM_SCALES
    }
    tight_norm = max(candidates, key=candidates.__getitem__)
    tau_qsl = candidates[tight_norm]
    ratio = tau_qsl / tau
    if ratio > 1.0 + _OVERSHOOT_TOL:
        raise ArithmeticError(
            f"speed-limit ratio {ratio!r} exceeds 1 beyond roundoff tolerance"
        )
    if ratio <= 0.0:
        raise ArithmeticError(f"speed-limit ratio must be positive, got {ratio!r}")
    if ratio > 1.0:
        ratio = 1.0
        tau_qsl = tau
    return QslResult(
        tau=tau,
        tau_qsl=tau_qsl,
        ratio=ratio,
        tight_norm=tight_norm,
        quad_error=quad_error,
    )
