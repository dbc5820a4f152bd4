#!/usr/bin/env python3
"""Sweep the whole statistic catalog for shuffle compatibility.

Runs both reduced modes for every statistic over all size splits up to a
bound and prints one verdict per statistic.  Statistics that are not
descent statistics (inv) or not compatible (biruns) are expected to fail;
everything else should pass.

    python scripts/compatibility_sweep.py --max-total 6
"""

import argparse
import sys
import time

from shufbij.stats import format_stat
from shufbij.verify import check_compatibility

CATALOG = (
    "Des", "Asc", "Pk", "Val", "Lpk", "Rpk", "Epk", "Lval", "Rval", "Eval",
    "des", "maj", ("maj", "des"), "pk", "lpk", "rpk", "epk", "udr",
    ("udr", "pk"), ("udr", "pk", "des"), "biruns",
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-total", type=int, default=6, help="largest m+n")
    args = ap.parse_args()

    exit_code = 0
    for stat in CATALOG:
        started = time.perf_counter()
        verdict = "compatible"
        witness_at = None
        cases = 0
        for total in range(args.max_total + 1):
            for m in range(total + 1):
                for mode in ("reduced_pi", "reduced_sigma"):
                    report = check_compatibility(
                        stat, m, total - m, mode=mode, limit=args.max_total
                    )
                    cases += report.cases_checked
                    if not report.passed:
                        verdict = "NOT compatible"
                        witness_at = (m, total - m, mode)
                        break
                if witness_at:
                    break
            if witness_at:
                break
        elapsed = time.perf_counter() - started
        where = f"  witness at |pi|={witness_at[0]}, |sigma|={witness_at[1]}" if witness_at else ""
        print(f"{format_stat(stat):>14}: {verdict:<16} ({cases} cases, {elapsed:.1f}s){where}")
        if witness_at and stat not in ("inv", "biruns"):
            exit_code = 1
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
