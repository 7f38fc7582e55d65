"""Rendering: heatmaps, two-tone sign maps, line cuts.

The arrays handed to the colormapper are exposed on the returned
RenderResult so callers can assert they match the CSV values exactly;
nothing is rescaled or recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import BoundaryNorm, ListedColormap

from .csv_data import ScanCsv, ScanCsvError, read_scan_csv

KINDS = ("heatmap", "sign-map", "line-cut")

# positive cells filled, negative (and boundary) white
_SIGN_CMAP = ListedColormap(["white", "white", "#5e3c99"])
_SIGN_NORM = BoundaryNorm([-1.5, -0.5, 0.5, 1.5], _SIGN_CMAP.N)

_PNG_METADATA = {"Software": None}  # keep renders byte-reproducible


@dataclass(frozen=True)
class PlotSpec:
    csv_path: str | Path
    kind: str
    out_path: str | Path
    x_column: str | None = None
    y_column: str | None = None
    value_column: str | None = None
    where: tuple[str, float] | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")


@dataclass(frozen=True)
class RenderResult:
    out_path: Path
    array: np.ndarray  # exactly what the colormapper (or line plot) received
    x_values: np.ndarray
    y_values: np.ndarray | None


def _resolve_columns(spec: PlotSpec, csv: ScanCsv) -> tuple[str, str | None, str]:
    x = spec.x_column or csv.axes[0].name
    if spec.kind == "line-cut":
        y = None
    else:
        if len(csv.axes) < 2 and spec.y_column is None:
            raise ScanCsvError(f"{csv.path}: {spec.kind} needs a two-axis scan")
        y = spec.y_column or csv.axes[1].name
    default_value = "sign_at_tau" if spec.kind == "sign-map" else "ratio"
    value = spec.value_column or default_value
    csv.require_columns(x, value, *(() if y is None else (y,)))
    return x, y, value


def _grid_figure(csv: ScanCsv, x: str, y: str, mesh: np.ndarray, title: str):
    fig, ax = plt.subplots(figsize=(6.0, 4.5), constrained_layout=True)
    ax.set_xlabel(x)
    ax.set_ylabel(y)
    ax.set_title(title)
    return fig, ax


def render(spec: PlotSpec) -> RenderResult:
    """Render one plot from a scan CSV; returns the data it drew."""
    csv = read_scan_csv(spec.csv_path)
    x_name, y_name, value_name = _resolve_columns(spec, csv)

    if spec.kind == "line-cut":
        return _render_line_cut(spec, csv, x_name, value_name)

    if x_name != csv.axes[0].name or (y_name is not None and y_name != csv.axes[1].name):
        raise ScanCsvError(
            f"{csv.path}: grid plots use the sweep axes "
            f"({csv.axes[0].name}, {csv.axes[1].name}); got ({x_name}, {y_name})"
        )
    x_values = csv.axes[0].values()
    y_values = csv.axes[1].values()
    if spec.kind == "sign-map":
        grid = csv.sign_grid(value_name)
    else:
        grid = csv.grid(value_name)
    # pcolormesh wants C[y, x]; transposing relabels indices, never values
    mesh = grid.T

    fig, ax = _grid_figure(csv, x_name, y_name, mesh, f"{value_name} ({spec.kind})")
    if spec.kind == "sign-map":
        quad = ax.pcolormesh(
            x_values, y_values, mesh, cmap=_SIGN_CMAP, norm=_SIGN_NORM, shading="nearest"
        )
        fig.colorbar(quad, ax=ax, ticks=[-1, 0, 1], label=value_name)
    else:
        quad = ax.pcolormesh(x_values, y_values, mesh, shading="nearest")
        fig.colorbar(quad, ax=ax, label=value_name)
    out = Path(spec.out_path)
    fig.savefig(out, dpi=150, metadata=_PNG_METADATA)
    plt.close(fig)
    return RenderResult(out_path=out, array=mesh, x_values=x_values, y_values=y_values)


def _render_line_cut(
    spec: PlotSpec, csv: ScanCsv, x_name: str, value_name: str
) -> RenderResult:
    xs = csv.column_floats(x_name)
    values = csv.column_floats(value_name)
    label = value_name
    if spec.where is not None:
        where_name, where_value = spec.where
        csv.require_columns(where_name)
        mask = csv.column_floats(where_name) == where_value
        if not mask.any():
            raise ScanCsvError(
                f"{csv.path}: no rows with {where_name}={where_value!r}"
            )
        xs, values = xs[mask], values[mask]
        label = f"{value_name} at {where_name}={where_value:g}"
    elif len(csv.axes) > 1:
        raise ScanCsvError(
            f"{csv.path}: line-cut on a two-axis scan needs --where to pick a slice"
        )

    fig, ax = plt.subplots(figsize=(6.0, 4.0), constrained_layout=True)
    ax.plot(xs, values, marker=".", lw=1.0)
    ax.set_xlabel(x_name)
    ax.set_ylabel(value_name)
    ax.set_title(label)
    out = Path(spec.out_path)
    fig.savefig(out, dpi=150, metadata=_PNG_METADATA)
    plt.close(fig)
    return RenderResult(out_path=out, array=values, x_values=xs, y_values=None)
