#!/usr/bin/env python3
"""Generate the three canonical sweep datasets (fig1a, fig1b, fig2) as CSV.

Usage: python scripts/make_figure_datasets.py [--out-dir results] [--threads N]
"""

import argparse
import time
from pathlib import Path

from squeezed_qsl.scan import PRESETS, preset_config, scan_to_path


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="results")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--count", type=int, default=None, help="override grid edge size")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name in PRESETS:
        config = preset_config(name, args.count, args.count)
        path = out_dir / f"{name}.csv"
        start = time.perf_counter()
        rows = scan_to_path(config, path, workers=args.threads)
        print(f"{name}: {rows} rows -> {path} ({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
