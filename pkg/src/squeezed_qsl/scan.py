"""Parameter-grid sweeps with deterministic CSV output.

A scan fixes some model parameters and sweeps up to two axes; every grid
point is an independent pure computation, so points can be fanned out to a
worker pool while rows are always written in grid order.  Output is a CSV
with a '#'-prefixed header block echoing the full configuration, then a
column-name row; floats are printed with 17 significant digits so reruns
are byte-identical.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence, TextIO

import numpy as np

from . import dephasing_model
from .jc_model import qsl_jc
from .quadrature import QuadratureNotConverged, QuadratureSettings
from .reservoirs import LorentzianSpectrum, OhmicSpectrum, SqueezedEnvironment

__all__ = [
    "SweepAxis",
    "ScanConfig",
    "ScanRecord",
    "MODEL_PARAMETERS",
    "PRESETS",
    "preset_config",
    "load_config",
    "run_scan",
    "run_scan_parallel",
    "write_scan_csv",
    "read_scan_csv",
]

MODEL_PARAMETERS = {
    "jc": ("r", "theta", "gamma0", "lambda", "tau"),
    "dephasing": ("r", "theta", "eta", "s", "tau"),
}

_SIGN_WORDS = {1: "positive", -1: "negative", 0: "boundary"}

_BASE_COLUMNS = ("tau_qsl", "ratio", "tight_norm", "quad_error", "converged")
_DEPHASING_EXTRA_COLUMNS = (
    "gamma_tau",
    "gamma_rate_tau",
    "sign_at_tau",
    "sign_min_interval",
)


@dataclass(frozen=True)
class SweepAxis:
    name: str
    minimum: float
    maximum: float
    count: int
    spacing: str = "linear"

    def __post_init__(self) -> None:
        if self.count < 2:
            raise ValueError(f"axis {self.name!r}: count must be >= 2")
        if not self.minimum < self.maximum:
            raise ValueError(f"axis {self.name!r}: need min < max")
        if self.spacing not in ("linear", "log"):
            raise ValueError(f"axis {self.name!r}: spacing must be linear or log")
        if self.spacing == "log" and self.minimum <= 0.0:
            raise ValueError(f"axis {self.name!r}: log spacing needs min > 0")

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.minimum, self.maximum, self.count)
        return np.linspace(self.minimum, self.maximum, self.count)


@dataclass(frozen=True)
class ScanConfig:
    model: str
    fixed: dict[str, float]
    axes: tuple[SweepAxis, ...]
    abs_tol: float = 1e-10
    rel_tol: float = 1e-9
    max_subdivisions: int = 2000

    def __post_init__(self) -> None:
        if self.model not in MODEL_PARAMETERS:
            raise ValueError(f"unknown model {self.model!r}")
        if not 1 <= len(self.axes) <= 2:
            raise ValueError("need one or two sweep axes")
        allowed = set(MODEL_PARAMETERS[self.model])
        axis_names = [axis.name for axis in self.axes]
        if len(set(axis_names)) != len(axis_names):
            raise ValueError("sweep axes must be distinct parameters")
        for name in axis_names:
            if name not in allowed:
                raise ValueError(f"axis {name!r} not a {self.model} parameter")
            if name in self.fixed:
                raise ValueError(f"parameter {name!r} both fixed and swept")
        for name in self.fixed:
            if name not in allowed:
                raise ValueError(f"fixed parameter {name!r} unknown for {self.model}")
        missing = allowed - set(self.fixed) - set(axis_names)
        if missing:
            raise ValueError(f"parameters {sorted(missing)} neither fixed nor swept")

    @property
    def quadrature(self) -> QuadratureSettings:
        return QuadratureSettings(
            abs_tol=self.abs_tol,
            rel_tol=self.rel_tol,
            max_subdivisions=self.max_subdivisions,
        )

    def grid(self) -> Iterator[dict[str, float]]:
        """Grid points in row-major order (first axis outermost)."""
        axis_values = [axis.values() for axis in self.axes]
        if len(self.axes) == 1:
            for v in axis_values[0]:
                yield {**self.fixed, self.axes[0].name: float(v)}
        else:
            for v0 in axis_values[0]:
                for v1 in axis_values[1]:
                    yield {
                        **self.fixed,
                        self.axes[0].name: float(v0),
                        self.axes[1].name: float(v1),
                    }

    def n_points(self) -> int:
        return math.prod(axis.count for axis in self.axes)

    def echo_items(self) -> list[tuple[str, str]]:
        """Key=value pairs for the CSV header block, sorted by key."""
        items: dict[str, str] = {"model": self.model}
        for name, value in self.fixed.items():
            items[name] = _fmt(value)
        for i, axis in enumerate(self.axes):
            prefix = f"axis{i}"
            items[f"{prefix}_name"] = axis.name
            items[f"{prefix}_min"] = _fmt(axis.minimum)
            items[f"{prefix}_max"] = _fmt(axis.maximum)
            items[f"{prefix}_count"] = str(axis.count)
            items[f"{prefix}_spacing"] = axis.spacing
        items["abs_tol"] = _fmt(self.abs_tol)
        items["rel_tol"] = _fmt(self.rel_tol)
        items["max_subdivisions"] = str(self.max_subdivisions)
        return sorted(items.items())

    def columns(self) -> tuple[str, ...]:
        params = MODEL_PARAMETERS[self.model]
        extra = _DEPHASING_EXTRA_COLUMNS if self.model == "dephasing" else ()
        return params + _BASE_COLUMNS + extra


@dataclass(frozen=True)
class ScanRecord:
    params: dict[str, float]
    tau_qsl: float
    ratio: float
    tight_norm: str
    quad_error: float
    converged: bool
    extras: dict[str, object] = field(default_factory=dict)


def _fmt(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def evaluate_point(
    model: str, params: dict[str, float], quadrature: QuadratureSettings
) -> ScanRecord:
    """Evaluate one grid point; quadrature non-convergence yields a NaN row."""
    env = SqueezedEnvironment(r=params["r"], theta=params["theta"])
    tau = params["tau"]
    if model == "jc":
        spec = LorentzianSpectrum(gamma0=params["gamma0"], lam=params["lambda"])
        try:
            result = qsl_jc(tau, env, spec, quadrature)
        except QuadratureNotConverged:
            return ScanRecord(params, math.nan, math.nan, "op", math.nan, False)
        return ScanRecord(
            params,
            result.tau_qsl,
            result.ratio,
            result.tight_norm,
            result.quad_error,
            True,
        )
    spec = OhmicSpectrum(eta=params["eta"], s=params["s"])
    sign_tau, sign_min = dephasing_model.rate_sign_summary(tau, env, spec)
    extras = {
        "gamma_tau": dephasing_model.gamma_analytic(tau, env, spec, quadrature),
        "gamma_rate_tau": dephasing_model.gamma_rate(tau, env, spec),
        "sign_at_tau": _SIGN_WORDS[sign_tau],
        "sign_min_interval": _SIGN_WORDS[sign_min],
    }
    try:
        result = dephasing_model.qsl_dephasing(tau, env, spec, quadrature)
    except QuadratureNotConverged:
        return ScanRecord(params, math.nan, math.nan, "op", math.nan, False, extras)
    return ScanRecord(
        params,
        result.tau_qsl,
        result.ratio,
        result.tight_norm,
        result.quad_error,
        True,
        extras,
    )


def run_scan(config: ScanConfig) -> Iterator[ScanRecord]:
    """Evaluate the grid serially, yielding records in grid order."""
    quadrature = config.quadrature
    for params in config.grid():
        yield evaluate_point(config.model, params, quadrature)


def _evaluate_star(args) -> ScanRecord:
    return evaluate_point(*args)


def run_scan_parallel(config: ScanConfig, workers: int = 1) -> list[ScanRecord]:
    """Evaluate the grid with up to `workers` processes, output in grid order."""
    if workers <= 1:
        return list(run_scan(config))
    quadrature = config.quadrature
    tasks = [(config.model, params, quadrature) for params in config.grid()]
    chunk = max(1, len(tasks) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_evaluate_star, tasks, chunksize=chunk))


def write_scan_csv(
    config: ScanConfig, records: Iterable[ScanRecord], out: TextIO
) -> int:
    """Write the header block and one row per record; returns the row count."""
    for key, value in config.echo_items():
        out.write(f"# {key}={value}\n")
    columns = config.columns()
    out.write(",".join(columns) + "\n")
    n = 0
    params_order = MODEL_PARAMETERS[config.model]
    for record in records:
        cells = [_fmt(record.params[name]) for name in params_order]
        cells.append(_fmt(record.tau_qsl))
        cells.append(_fmt(record.ratio))
        cells.append(record.tight_norm)
        cells.append(_fmt(record.quad_error))
        cells.append(_fmt(record.converged))
        for name in columns[len(params_order) + len(_BASE_COLUMNS) :]:
            cells.append(_fmt(record.extras[name]))
        out.write(",".join(cells) + "\n")
        n += 1
    return n


def scan_to_path(config: ScanConfig, path: str | Path, workers: int = 1) -> int:
    records = run_scan_parallel(config, workers)
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        return write_scan_csv(config, records, out)


def read_scan_csv(path: str | Path) -> tuple[dict[str, str], list[str], list[list[str]]]:
    """Parse a scan CSV into (header echo, column names, raw string rows)."""
    header: dict[str, str] = {}
    columns: list[str] = []
    rows: list[list[str]] = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            line = line.rstrip("\n")
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                header[key.strip()] = value
            elif not columns:
                columns = line.split(",")
            elif line:
                rows.append(line.split(","))
    return header, columns, rows


# Preset grids mirror the canonical runs: 64x64, qubit-frequency units,
# half-open angle axes realized as max = 2*pi*(n-1)/n.
_N_DEFAULT = 64
_THETA_MAX = 2.0 * math.pi * (_N_DEFAULT - 1) / _N_DEFAULT

PRESETS = ("fig1a", "fig1b", "fig2")


def preset_config(name: str, count_x: int | None = None, count_y: int | None = None) -> ScanConfig:
    """Canonical scan configurations; counts are overridable."""
    nx = count_x or _N_DEFAULT
    ny = count_y or _N_DEFAULT
    theta_max_x = 2.0 * math.pi * (nx - 1) / nx
    theta_max_y = 2.0 * math.pi * (ny - 1) / ny
    if name == "fig1a":
        return ScanConfig(
            model="jc",
            fixed={"r": 0.5, "lambda": 1.0, "tau": 1.0},
            axes=(
                SweepAxis("theta", 0.0, theta_max_x, nx),
                SweepAxis("gamma0", 0.1, 10.0, ny),
            ),
        )
    if name == "fig1b":
        return ScanConfig(
            model="jc",
            fixed={"theta": 0.5 * math.pi, "lambda": 1.0, "tau": 1.0},
            axes=(
                SweepAxis("r", 0.0, 1.0, nx),
                SweepAxis("gamma0", 0.1, 10.0, ny),
            ),
        )
    if name == "fig2":
        return ScanConfig(
            model="dephasing",
            fixed={"r": 1.0, "eta": 1.0, "tau": 3.0},
            axes=(
                SweepAxis("s", 4.0 / nx, 4.0, nx),
                SweepAxis("theta", 0.0, theta_max_y, ny),
            ),
        )
    raise ValueError(f"unknown preset {name!r}; choose from {PRESETS}")


def load_config(path: str | Path) -> ScanConfig:
    """Load a flat key/value JSON object into a ScanConfig."""
    with open(path, "r", encoding="utf-8") as handle:
        raw = json.load(handle)
    if not isinstance(raw, dict):
        raise ValueError("config file must hold a JSON object")
    return config_from_mapping(raw)


def config_from_mapping(raw: dict) -> ScanConfig:
    model = raw.get("model")
    if model not in MODEL_PARAMETERS:
        raise ValueError(f"config needs a model in {sorted(MODEL_PARAMETERS)}")
    axes = []
    for prefix in ("x", "y"):
        name = raw.get(f"sweep_{prefix}")
        if name is None:
            continue
        axes.append(
            SweepAxis(
                name=str(name),
                minimum=float(raw[f"{prefix}_min"]),
                maximum=float(raw[f"{prefix}_max"]),
                count=int(raw[f"{prefix}_count"]),
                spacing=str(raw.get(f"{prefix}_spacing", "linear")),
            )
        )
    swept = {axis.name for axis in axes}
    fixed = {
        name: float(raw[name])
        for name in MODEL_PARAMETERS[model]
        if name in raw and name not in swept
    }
    return ScanConfig(
        model=model,
        fixed=fixed,
        axes=tuple(axes),
        abs_tol=float(raw.get("abs_tol", 1e-10)),
        rel_tol=float(raw.get("rel_tol", 1e-9)),
        max_subdivisions=int(raw.get("max_subdivisions", 2000)),
    )
