#!/usr/bin/env python3
"""Run every oracle-comparison suite and write a combined JSON report.

Usage: python scripts/run_verification.py [--out verification_report.json]
"""

import argparse
import json
import sys
import time

from squeezed_qsl.verification import SUITES, run_verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="verification_report.json")
    args = parser.parse_args()

    report = {"suites": {}, "pass": True}
    for suite in sorted(SUITES):
        start = time.perf_counter()
        results = run_verify(suite)
        elapsed = time.perf_counter() - start
        report["suites"][suite] = {
            "elapsed_seconds": round(elapsed, 2),
            "checks": [
                {
                    "name": r.name,
                    "max_deviation": r.max_deviation,
                    "tolerance": r.tolerance,
                    "pass": r.passed,
                }
                for r in results
            ],
        }
        for r in results:
            report["pass"] = report["pass"] and r.passed
            status = "ok" if r.passed else "FAIL"
            print(f"{suite:18s} {r.name:40s} {r.max_deviation:.3e} <= {r.tolerance:g} {status}")
    with open(args.out, "w", encoding="utf-8") as handle:
        json.dump(report, handle, indent=2)
        handle.write("\n")
    print(f"report -> {args.out}")
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
