#!/usr/bin/env python3
"""Hunt for shuffle-compatibility counterexamples by full enumeration.

For each named statistic, scans all domain splittings in increasing total
length and prints the first witness found, or a pass-within-scope line.

    python scripts/counterexample_hunt.py inv biruns --max-total 6
"""

import argparse
import sys

from shufbij.stats import parse_stat
from shufbij.verify import find_counterexample, format_report


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("statistics", nargs="+", help="statistic names, e.g. inv biruns maj")
    ap.add_argument("--max-total", type=int, default=6, help="largest m+n to scan")
    args = ap.parse_args()

    for name in args.statistics:
        stat = parse_stat(name)
        report = find_counterexample(stat, args.max_total)
        print(format_report(report))
        if not report.passed:
            print(f"  witness re-verifies: {report.witness.recheck()}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
