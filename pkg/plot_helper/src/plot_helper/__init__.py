"""Plotting front end for squeezed-qsl scan CSV files.

Consumes only the CSV contract (header echo, column row, grid rows); no
physics is recomputed.
"""

from .csv_data import AxisInfo, ScanCsv, ScanCsvError, read_scan_csv
from .render import KINDS, PlotSpec, RenderResult, render

__version__ = "0.1.0"

__all__ = [
    "AxisInfo",
    "KINDS",
    "PlotSpec",
    "RenderResult",
    "ScanCsv",
    "ScanCsvError",
    "read_scan_csv",
    "render",
]
