"""Parser for the scan CSV contract: '#'-prefixed config echo, one
column-name row, then data rows in row-major grid order.  No physics is
recomputed here; everything comes from the file.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

SIGN_WORDS = ("positive", "negative", "boundary")
SIGN_CODES = {"positive": 1, "boundary": 0, "negative": -1}


class ScanCsvError(ValueError):
    """The file does not satisfy the scan CSV contract."""


@dataclass(frozen=True)
class AxisInfo:
    name: str
    minimum: float
    maximum: float
    count: int
    spacing: str

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.minimum, self.maximum, self.count)
        return np.linspace(self.minimum, self.maximum, self.count)


@dataclass(frozen=True)
class ScanCsv:
    path: Path
    header: dict[str, str]
    columns: tuple[str, ...]
    cells: tuple[tuple[str, ...], ...]
    axes: tuple[AxisInfo, ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(axis.count for axis in self.axes)

    def require_columns(self, *names: str) -> None:
        for name in names:
            if name and name not in self.columns:
                raise ScanCsvError(
                    f"{self.path}: column {name!r} not in header {list(self.columns)}"
                )

    def column_strings(self, name: str) -> list[str]:
        self.require_columns(name)
        idx = self.columns.index(name)
        return [row[idx] for row in self.cells]

    def column_floats(self, name: str) -> np.ndarray:
        try:
            return np.array([float(v) for v in self.column_strings(name)])
        except ValueError as exc:
            raise ScanCsvError(f"{self.path}: column {name!r} is not numeric: {exc}")

    def grid(self, name: str) -> np.ndarray:
        """Column reshaped to the sweep grid (axis0 rows, axis1 columns)."""
        return self.column_floats(name).reshape(self.shape)

    def sign_grid(self, name: str) -> np.ndarray:
        """Sign-word column as +1 / 0 / -1 codes on the sweep grid."""
        words = self.column_strings(name)
        bad = sorted({w for w in words if w not in SIGN_CODES})
        if bad:
            raise ScanCsvError(f"{self.path}: column {name!r} has non-sign values {bad}")
        return np.array([SIGN_CODES[w] for w in words], dtype=np.int8).reshape(self.shape)


def _axes_from_header(header: dict[str, str], path: Path) -> tuple[AxisInfo, ...]:
    axes = []
    for i in (0, 1):
        prefix = f"axis{i}"
        if f"{prefix}_name" not in header:
            continue
        try:
            axes.append(
                AxisInfo(
                    name=header[f"{prefix}_name"],
                    minimum=float(header[f"{prefix}_min"]),
                    maximum=float(header[f"{prefix}_max"]),
                    count=int(header[f"{prefix}_count"]),
                    spacing=header.get(f"{prefix}_spacing", "linear"),
                )
            )
        except (KeyError, ValueError) as exc:
            raise ScanCsvError(f"{path}: malformed {prefix} header: {exc}")
    if not axes:
        raise ScanCsvError(f"{path}: no sweep axes declared in the header echo")
    return tuple(axes)


def _check_grid_complete(csv: ScanCsv) -> None:
    expected = int(np.prod(csv.shape))
    if len(csv.cells) == expected:
        return
    # list the gaps per outer-axis value so the error is actionable
    outer = csv.axes[0]
    per_row = expected // outer.count
    counts: dict[str, int] = {}
    for row in csv.cells:
        key = row[csv.columns.index(outer.name)]
        counts[key] = counts.get(key, 0) + 1
    gaps = [
        f"{outer.name}={value}: {found}/{per_row} rows"
        for value, found in counts.items()
        if found != per_row
    ]
    missing_groups = outer.count - len(counts)
    if missing_groups:
        gaps.append(f"{missing_groups} {outer.name} grid values entirely absent")
    raise ScanCsvError(
        f"{csv.path}: expected {expected} grid rows, found {len(csv.cells)}; gaps: "
        + ("; ".join(gaps) if gaps else "row/axis mismatch")
    )


def read_scan_csv(path: str | Path) -> ScanCsv:
    path = Path(path)
    header: dict[str, str] = {}
    columns: tuple[str, ...] = ()
    cells: list[tuple[str, ...]] = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            line = line.rstrip("\n")
            if line.startswith("#"):
                key, sep, value = line[1:].strip().partition("=")
                if sep:
                    header[key.strip()] = value
            elif not columns:
                columns = tuple(line.split(","))
            elif line:
                row = tuple(line.split(","))
                if len(row) != len(columns):
                    raise ScanCsvError(
                        f"{path}: row {len(cells) + 1} has {len(row)} cells, "
                        f"expected {len(columns)}"
                    )
                cells.append(row)
    if not columns:
        raise ScanCsvError(f"{path}: no column-name row found")
    csv = ScanCsv(
        path=path,
        header=header,
        columns=columns,
        cells=tuple(cells),
        axes=_axes_from_header(header, path),
    )
    csv.require_columns(*(axis.name for axis in csv.axes))
    _check_grid_complete(csv)
    return csv
