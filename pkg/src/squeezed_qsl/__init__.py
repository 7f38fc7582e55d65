"""Speed-limit times for a single qubit in a squeezed reservoir.

Two exactly solvable models: damped Jaynes-Cummings decay with a Lorentzian
coupling spectrum and pure dephasing with an Ohmic-family spectrum.  Closed
forms carry the production load; independent numerical oracles (RK4
master-equation propagation, frequency-domain quadrature, finite
differences) back every formula.
"""

from .dephasing_model import (
    DephasingTrajectory,
    SignRegionMaps,
    dephasing_trajectory,
    evolve_dephasing,
    gamma_analytic,
    gamma_quadrature,
    gamma_rate,
    qsl_dephasing,
    sign_region,
    spectral_density,
)
from .jc_model import INITIAL_STATE, alpha, evolve_jc, generator_jc, qsl_jc, vartheta
from .qsl_bound import QslResult, unified_bound
from .quadrature import (
    QuadratureError,
    QuadratureNotConverged,
    QuadratureOutcome,
    QuadratureSettings,
    find_root,
    integrate,
    integrate_panels,
)
from .qubit_linalg import (
    HermitianGenerator,
    MatrixNorms,
    PositivityError,
    QubitState,
    bures_angle,
    eigenvalues_2x2_hermitian,
    fidelity,
    norms,
)
from .reservoirs import LorentzianSpectrum, OhmicSpectrum, SqueezedEnvironment

__version__ = "0.1.0"

__all__ = [
    "DephasingTrajectory",
    "HermitianGenerator",
    "INITIAL_STATE",
    "LorentzianSpectrum",
    "MatrixNorms",
    "OhmicSpectrum",
    "PositivityError",
    "QslResult",
    "QuadratureError",
    "QuadratureNotConverged",
    "QuadratureOutcome",
    "QuadratureSettings",
    "QubitState",
    "SignRegionMaps",
    "SqueezedEnvironment",
    "alpha",
    "bures_angle",
    "dephasing_trajectory",
    "eigenvalues_2x2_hermitian",
    "evolve_dephasing",
    "evolve_jc",
    "fidelity",
    "find_root",
    "gamma_analytic",
    "gamma_quadrature",
    "gamma_rate",
    "generator_jc",
    "integrate",
    "integrate_panels",
    "norms",
    "qsl_dephasing",
    "qsl_jc",
    "sign_region",
    "spectral_density",
    "unified_bound",
    "vartheta",
]
