#!/usr/bin/env python3
"""Exploratory: list every graph with 5 <= g <= n-2 and m_G[n-g+3, n] = n-g-1 (expected: only Y(n,1))."""

import argparse
import logging
import sys
from pathlib import Path

from lapgirth.experiments import run_y1_search


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=[7, 8])
    ap.add_argument("--max-order", type=int, default=9)
    ap.add_argument("--out", type=Path, default=None)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    log = run_y1_search(tuple(args.orders), args.max_order)
    log.write(args.out)
    for rep in log.reports:
        print(rep["params"], rep["equality_witnesses"])
    return 0 if log.all_match else 1


if __name__ == "__main__":
    sys.exit(main())
