"""Parameter records for the squeezed reservoir and its coupling spectra."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SqueezedEnvironment:
    """Squeezed vacuum reservoir with magnitude r >= 0 and phase theta.

    theta is normalized into [0, 2*pi). The derived effective photon number
    is sinh(r)^2 and the pair correlation -cosh(r) sinh(r) e^{i theta},
    which satisfy |M|^2 = N (N + 1).
    """

    r: float
    theta: float = 0.0

    def __post_init__(self) -> None:
        r = float(self.r)
        theta = float(self.theta)
        if not (math.isfinite(r) and math.isfinite(theta)):
            raise ValueError("environment parameters must be finite")
        if r < 0.0:
            raise ValueError(f"squeezing magnitude must be >= 0, got {r!r}")
        object.__setattr__(self, "r", r)
        theta %= _TWO_PI
        # a tiny negative input rounds the modulo up to exactly 2*pi
        object.__setattr__(self, "theta", 0.0 if theta >= _TWO_PI else theta)

    @property
    def photon_number(self) -> float:
        return math.sinh(self.r) ** 2

    @property
    def pair_correlation(self) -> complex:
        return -math.cosh(self.r) * math.sinh(self.r) * cmath.exp(1j * self.theta)


@dataclass(frozen=True)
class LorentzianSpectrum:
    """Lorentzian coupling spectrum centred on the qubit frequency.

    gamma0 sets the coupling strength, lam the spectral width; both in units
    of the qubit frequency, which fixes the unit system and is 1 throughout.
    """

    gamma0: float
    lam: float = 1.0

    def __post_init__(self) -> None:
        if not (self.gamma0 > 0.0 and math.isfinite(self.gamma0)):
            raise ValueError(f"gamma0 must be > 0, got {self.gamma0!r}")
        if not (self.lam > 0.0 and math.isfinite(self.lam)):
            raise ValueError(f"lam must be > 0, got {self.lam!r}")


@dataclass(frozen=True)
class OhmicSpectrum:
    """Ohmic-family spectral density eta * omega^s / omega_c^(s-1) * exp(-omega/omega_c).

    omega_c defaults to 1 and is the time unit for the dephasing model; it
    is exposed for completeness but not swept anywhere.
    """

    eta: float
    s: float
    omega_c: float = 1.0

    def __post_init__(self) -> None:
        if not (self.eta > 0.0 and math.isfinite(self.eta)):
            raise ValueError(f"eta must be > 0, got {self.eta!r}")
        if not (self.s > 0.0 and math.isfinite(self.s)):
            raise ValueError(f"s must be > 0, got {self.s!r}")
        if not (self.omega_c > 0.0 and math.isfinite(self.omega_c)):
            raise ValueError(f"omega_c must be > 0, got {self.omega_c!r}")

    @property
    def ohmicity(self) -> str:
        if self.s < 1.0:
            return "sub-ohmic"
        if self.s == 1.0:
            return "ohmic"
        return "super-ohmic"
