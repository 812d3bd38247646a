#!/usr/bin/env python3
"""Write a half-plane Hankel fixture from the mpmath oracle.

Samples the closed upper half-plane, cycles orders 0-3 and writes
(z_re, z_im, order, h_re, h_im) rows with 17 significant digits.

Usage:
    python scripts/build_golden.py                       # 1000 points, |z| <= 100
    python scripts/build_golden.py --n 5000 --seed 11

Environment variables:
    HELMSTAB_GOLDEN_PATH   Output path override (default: tests/specfun/data/hankel_sample.csv)

The committed tests/specfun/data/hankel_golden.csv holds tabulated real-axis values;
every tests/specfun/data/hankel_*.csv is checked by the test suite.
"""

from __future__ import annotations

import argparse
import os
import time
from pathlib import Path

from helmstab.specfun.oracle import build_golden, write_golden

DEFAULT_PATH = Path(__file__).resolve().parent.parent / "tests/specfun/data/hankel_sample.csv"


def main() -> None:
    parser = argparse.ArgumentParser(description="Build the Hankel golden fixture")
    parser.add_argument("--n", type=int, default=1000, help="Number of sample points")
    parser.add_argument("--r-max", type=float, default=100.0, help="Largest |z| sampled")
    parser.add_argument("--seed", type=int, default=0, help="Halton scramble seed")
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(os.environ.get("HELMSTAB_GOLDEN_PATH", DEFAULT_PATH)),
        help="Output CSV path",
    )
    args = parser.parse_args()

    print(f"Building {args.n} golden values (|z| <= {args.r_max:g}, seed {args.seed})...")
    t0 = time.time()
    rows = build_golden(args.n, r_max=args.r_max, seed=args.seed)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    write_golden(rows, args.out)
    print(f"  wrote {args.out} in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
