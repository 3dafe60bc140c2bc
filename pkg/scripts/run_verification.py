#!/usr/bin/env python3
"""Full verification sweep: writes the four audit tables and a summary.

Runs the complete grid (six cases, nu in {-0.5, 0.5, 1, 2, 5} where the
case domain allows, q in {0.1, 0.25, 0.5, 0.75, 0.9}), the alignment of
the closed-form power sums with the coefficient oracle, the q -> 1 limit
study, and the formula-level comparison inequalities.

Usage:
    python scripts/run_verification.py [output_dir]
"""

import sys
import time
from collections import Counter
from pathlib import Path

from qstarlike.cli import RunConfig, render_csv, run

GRID_NUS = (-0.5, 0.5, 1.0, 2.0, 5.0)
GRID_QS = (0.1, 0.25, 0.5, 0.75, 0.9)
ALL_CASES = ("F2", "G2", "H2", "F3", "G3", "H3")


def write(outdir: Path, name: str, config: RunConfig) -> list[dict]:
    code, records = run(config)
    path = outdir / name
    path.write_text(render_csv(records), encoding="utf-8")
    print(f"  {path}  ({len(records)} rows, exit {code})")
    return records


def main() -> int:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out")
    outdir.mkdir(parents=True, exist_ok=True)
    started = time.time()

    print("verification sweep:")
    table = write(outdir, "table.csv", RunConfig(
        "table", ALL_CASES, GRID_NUS, GRID_QS))
    recon = write(outdir, "reconcile.csv", RunConfig(
        "reconcile", ALL_CASES, GRID_NUS, GRID_QS))
    write(outdir, "limits.csv", RunConfig(
        "limits", ALL_CASES, (0.5, 1.0), (0.9, 0.99, 0.999)))
    compare = write(outdir, "compare.csv", RunConfig(
        "compare", (), (0.25, 0.5, 1.0, 2.0, 5.0), (0.5,)))

    flags = Counter()
    for rec in table + recon:
        for flag in rec["flags"]:
            flags[flag] += 1
    outside = sum(1 for r in table if "OUTSIDE_BRACKET" in r["flags"])
    violations = sum(1 for r in compare if "VIOLATION" in r["flags"])

    print(f"\nflag counts: {dict(sorted(flags.items()))}")
    print(f"bracket containment failures: {outside}")
    print(f"comparison violations: {violations}")
    print(f"elapsed: {time.time() - started:.2f}s")
    return 1 if (outside or violations) else 0


if __name__ == "__main__":
    sys.exit(main())
