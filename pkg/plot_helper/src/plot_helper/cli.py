"""Command-line renderer for scan CSV files.

    qsl-plot plot --in fig1a.csv --kind heatmap --out fig1a.png
    qsl-plot plot --in fig2.csv --kind sign-map --out fig2.png
    qsl-plot plot --in fig1a.csv --kind line-cut --where gamma0=10 --out cut.png
"""

from __future__ import annotations

import argparse
import sys

from .render import KINDS, PlotSpec, render


def _parse_where(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError("--where expects column=value")
    try:
        return name, float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--where value {value!r} is not a number")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsl-plot", description="Render plots from scan CSV files."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    plot = sub.add_parser("plot", help="render one plot from a scan CSV")
    plot.add_argument("--in", dest="csv_path", required=True, metavar="CSV")
    plot.add_argument("--kind", required=True, choices=KINDS)
    plot.add_argument("--out", dest="out_path", required=True, metavar="PNG")
    plot.add_argument("--x", dest="x_column", default=None)
    plot.add_argument("--y", dest="y_column", default=None)
    plot.add_argument("--value", dest="value_column", default=None)
    plot.add_argument("--where", type=_parse_where, default=None, metavar="COL=VALUE")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = PlotSpec(
        csv_path=args.csv_path,
        kind=args.kind,
        out_path=args.out_path,
        x_column=args.x_column,
        y_column=args.y_column,
        value_column=args.value_column,
        where=args.where,
    )
    result = render(spec)
    print(f"wrote {result.out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
