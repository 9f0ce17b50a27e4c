#!/usr/bin/env python3
"""Run the full verification grid and print a per-suite summary.

Usage:
    python3 scripts/run_full_grid.py [--out report.json] [--jobs N]
"""

import argparse
import collections
import json
import pathlib
import sys

from bosonhopf.cli import main as cli_main

HERE = pathlib.Path(__file__).resolve().parent


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="report.json")
    ap.add_argument("--jobs", type=int, default=0)
    ap.add_argument("--config", default=str(HERE / "full_grid.ini"))
    args = ap.parse_args()

    argv = ["run", "--config", args.config, "--out", args.out]
    if args.jobs:
        argv += ["--jobs", str(args.jobs)]
    code = cli_main(argv)

    doc = json.loads(pathlib.Path(args.out).read_text())
    table = collections.Counter()
    for row in doc["reports"]:
        status = ("skip" if row["skipped"]
                  else "pass" if row["passed"] else "FAIL")
        table[(row["suite"], status)] += 1
    suites = sorted({suite for suite, _ in table})
    print(f"{'suite':<12} {'pass':>6} {'FAIL':>6} {'skip':>6}")
    for suite in suites:
        print(f"{suite:<12} {table[(suite, 'pass')]:>6} "
              f"{table[(suite, 'FAIL')]:>6} {table[(suite, 'skip')]:>6}")
    return code


if __name__ == "__main__":
    sys.exit(main())
