"""Command-line front end: grid scans, oracle verification, single points.

    qsl scan --preset fig1a --out fig1a.csv
    qsl scan --config my_scan.json --threads 2
    qsl verify norms
    qsl point --model dephasing --r 1 --s 2 --theta 3.14 --tau 3
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import scan as scan_mod
from .dephasing_model import qsl_dephasing
from .jc_model import qsl_jc
from .quadrature import QuadratureSettings
from .reservoirs import LorentzianSpectrum, OhmicSpectrum, SqueezedEnvironment
from .verification import SUITES, run_verify

_PARAM_FLAGS = ("r", "theta", "gamma0", "lambda", "eta", "s", "tau")

_POINT_DEFAULTS = {
    "r": 0.5,
    "theta": 0.0,
    "gamma0": 1.0,
    "lambda": 1.0,
    "eta": 1.0,
    "s": 1.0,
    "tau": 1.0,
}


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    for name in _PARAM_FLAGS:
        parser.add_argument(f"--{name}", type=float, default=None, dest=f"param_{name}")


def _add_quadrature_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--abs-tol", type=float, default=None)
    parser.add_argument("--rel-tol", type=float, default=None)
    parser.add_argument("--max-subdivisions", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsl",
        description="Speed-limit times for a qubit in a squeezed reservoir.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scan_p = sub.add_parser("scan", help="evaluate a parameter grid to CSV")
    source = scan_p.add_mutually_exclusive_group(required=True)
    source.add_argument("--preset", choices=scan_mod.PRESETS)
    source.add_argument("--config", metavar="FILE", help="flat JSON config file")
    scan_p.add_argument("--out", metavar="PATH", default=None)
    scan_p.add_argument("--threads", type=int, default=1)
    scan_p.add_argument("--x-count", type=int, default=None)
    scan_p.add_argument("--y-count", type=int, default=None)
    _add_param_flags(scan_p)
    _add_quadrature_flags(scan_p)

    verify_p = sub.add_parser("verify", help="run an oracle-comparison suite")
    verify_p.add_argument("suite", choices=sorted(SUITES))
    verify_p.add_argument("--out", metavar="PATH", default=None)

    point_p = sub.add_parser("point", help="print one speed-limit result as JSON")
    point_p.add_argument("--model", choices=sorted(scan_mod.MODEL_PARAMETERS), required=True)
    _add_param_flags(point_p)
    _add_quadrature_flags(point_p)
    return parser


def _quadrature_from_args(args: argparse.Namespace) -> QuadratureSettings | None:
    if args.abs_tol is None and args.rel_tol is None and args.max_subdivisions is None:
        return None
    return QuadratureSettings(
        abs_tol=args.abs_tol if args.abs_tol is not None else 1e-10,
        rel_tol=args.rel_tol if args.rel_tol is not None else 1e-9,
        max_subdivisions=args.max_subdivisions if args.max_subdivisions is not None else 2000,
    )


def _scan_config(args: argparse.Namespace) -> scan_mod.ScanConfig:
    if args.preset:
        config = scan_mod.preset_config(args.preset, args.x_count, args.y_count)
    else:
        config = scan_mod.load_config(args.config)
        if args.x_count or args.y_count:
            axes = list(config.axes)
            if args.x_count:
                axes[0] = replace(axes[0], count=args.x_count)
            if args.y_count and len(axes) > 1:
                axes[1] = replace(axes[1], count=args.y_count)
            config = replace(config, axes=tuple(axes))
    overrides = {
        name: getattr(args, f"param_{name}")
        for name in _PARAM_FLAGS
        if getattr(args, f"param_{name}") is not None
    }
    if overrides:
        swept = {axis.name for axis in config.axes}
        for name in overrides:
            if name in swept:
                raise SystemExit(f"cannot override swept axis parameter {name!r}")
            if name not in scan_mod.MODEL_PARAMETERS[config.model]:
                raise SystemExit(f"{name!r} is not a {config.model} parameter")
        config = replace(config, fixed={**config.fixed, **overrides})
    tol_updates = {}
    if args.abs_tol is not None:
        tol_updates["abs_tol"] = args.abs_tol
    if args.rel_tol is not None:
        tol_updates["rel_tol"] = args.rel_tol
    if args.max_subdivisions is not None:
        tol_updates["max_subdivisions"] = args.max_subdivisions
    if tol_updates:
        config = replace(config, **tol_updates)
    return config


def _cmd_scan(args: argparse.Namespace) -> int:
    config = _scan_config(args)
    out = args.out
    if out is None and args.config:
        import json as json_mod

        with open(args.config, "r", encoding="utf-8") as handle:
            out = json_mod.load(handle).get("out")
    if out is None:
        out = f"{args.preset}.csv" if args.preset else "scan.csv"
    n = scan_mod.scan_to_path(config, out, workers=args.threads)
    print(f"wrote {n} rows to {out}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_verify(args.suite)
    report = {
        "suite": args.suite,
        "checks": [
            {
                "name": r.name,
                "max_deviation": r.max_deviation,
                "tolerance": r.tolerance,
                "pass": r.passed,
            }
            for r in results
        ],
        "pass": all(r.passed for r in results),
    }
    text = json.dumps(report, indent=2)
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    return 0 if report["pass"] else 1


def _cmd_point(args: argparse.Namespace) -> int:
    params = dict(_POINT_DEFAULTS)
    for name in _PARAM_FLAGS:
        value = getattr(args, f"param_{name}")
        if value is not None:
            params[name] = value
    env = SqueezedEnvironment(r=params["r"], theta=params["theta"])
    settings = _quadrature_from_args(args)
    if args.model == "jc":
        spec = LorentzianSpectrum(gamma0=params["gamma0"], lam=params["lambda"])
        result = qsl_jc(params["tau"], env, spec, settings)
        used = ("r", "theta", "gamma0", "lambda", "tau")
    else:
        spec = OhmicSpectrum(eta=params["eta"], s=params["s"])
        result = qsl_dephasing(params["tau"], env, spec, settings)
        used = ("r", "theta", "eta", "s", "tau")
    payload = {"model": args.model}
    payload.update({name: params[name] for name in used})
    payload.update(
        {
            "tau_qsl": result.tau_qsl,
            "ratio": result.ratio,
            "tight_norm": result.tight_norm,
            "quad_error": result.quad_error,
        }
    )
    print(json.dumps(payload, indent=2))
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "scan":
        return _cmd_scan(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_point(args)


if __name__ == "__main__":
    sys.exit(main())
