#!/usr/bin/env python3
"""Emit the Gamma/Psi/rank-level duality report for one or more (rank, ell) cells.

Usage:
    python scripts/duality_report.py 2,9 2,11 3,13 > reports.json
"""
import json
import sys

from bcfusion.bmwdual import duality_report


def main(argv) -> int:
    cells = [tuple(int(x) for x in arg.split(",")) for arg in argv] or [(2, 9), (2, 11), (3, 13)]
    reports = [duality_report(k, ell) for (k, ell) in cells]
    json.dump(reports, sys.stdout, sort_keys=True, indent=1)
    print()
    return 0 if all(r["homeq_ok"] for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
