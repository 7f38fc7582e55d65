"""Shared strategies and independent oracle helpers for the test suite."""

from __future__ import annotations

import math

import numpy as np
from hypothesis import strategies as st

from squeezed_qsl.qubit_linalg import HermitianGenerator, QubitState


def make_state(rho11: float, coherence_fraction: float, phase: float) -> QubitState:
    """Valid state with |rho10| = fraction of the positivity-allowed maximum."""
    radius = math.sqrt(max(rho11 * (1.0 - rho11), 0.0))
    rho10 = coherence_fraction * radius * complex(math.cos(phase), math.sin(phase))
    return QubitState(rho11=rho11, rho10=rho10)


def random_state(rng: np.random.Generator) -> QubitState:
    return make_state(
        rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0), rng.uniform(0.0, 2.0 * math.pi)
    )


def fidelity_eigen(a: QubitState, b: QubitState) -> float:
    """Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2 by eigendecomposition."""
    ma, mb = a.as_matrix(), b.as_matrix()
    w, v = np.linalg.eigh(ma)
    root_a = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    inner = root_a @ mb @ root_a
    eigs = np.linalg.eigvalsh(inner)
    return float(np.sum(np.sqrt(np.clip(eigs, 0.0, None))) ** 2)


qubit_states = st.builds(
    make_state,
    rho11=st.floats(min_value=0.0, max_value=1.0),
    coherence_fraction=st.floats(min_value=0.0, max_value=1.0),
    phase=st.floats(min_value=0.0, max_value=2.0 * math.pi),
)

_component = st.floats(min_value=-100.0, max_value=100.0, allow_subnormal=False)

hermitian_generators = st.builds(
    lambda d11, re, im: HermitianGenerator(d11=d11, d10=complex(re, im)),
    d11=_component,
    re=_component,
    im=_component,
)
