#!/usr/bin/env python3
"""Run the invariant suite over a (rank, ell) grid with per-cell timing.

Usage:
    python scripts/run_verify_grid.py                 # default desk-scale grid
    python scripts/run_verify_grid.py 2,9 3,13 4,17   # explicit cells
"""
import sys
import time

from bcfusion.verify import DEFAULT_GRID, format_results, run_suite


def main(argv) -> int:
    cells = [tuple(int(x) for x in arg.split(",")) for arg in argv] or list(DEFAULT_GRID)
    failures = 0
    for (k, ell) in cells:
        start = time.perf_counter()
        results = run_suite(k, ell)
        elapsed = time.perf_counter() - start
        print(format_results(k, ell, results))
        print(f"  ({elapsed:.1f}s)")
        failures += sum(not r.ok for r in results)
    print(f"grid done: {len(cells)} cells, {failures} failing checks")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
