"""Fixtures: preset CSVs produced through the primary package's CLI."""

from __future__ import annotations

import subprocess
import sys

import pytest

PRESETS = ("fig1a", "fig1b", "fig2")


@pytest.fixture(scope="session")
def preset_csvs(tmp_path_factory):
    out_dir = tmp_path_factory.mktemp("scan-csvs")
    paths = {}
    for name in PRESETS:
        out = out_dir / f"{name}.csv"
        subprocess.run(
            [sys.executable, "-m", "squeezed_qsl", "scan", "--preset", name, "--out", str(out)],
            check=True,
            capture_output=True,
        )
        paths[name] = out
    return paths
