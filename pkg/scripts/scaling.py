"""Timing of count() on the neighbour-chain family, DP vs matrix-power audit."""
import argparse
import math
import time

import numpy as np

from nisat.counter import count
from nisat.formula import Formula


def chain(k, width=2):
    # clause i: v_i, -v_{i+1}, padded with fresh conflict-free literals
    pad = lambda i: [10_000 + i * width + w for w in range(width - 2)]
    return Formula.of([[i, -(i + 1)] + pad(i) for i in range(1, k + 1)])


def best_of(fn, reps):
    best = math.inf
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[25, 50, 100, 200, 400])
    ap.add_argument("--width", type=int, default=2)
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--check-upto", type=int, default=25,
                    help="also time the matrix-power cross-check for k up to this")
    args = ap.parse_args()
    rows = []
    for k in args.sizes:
        f = chain(k, args.width)
        res = count(f)
        t = best_of(lambda: count(f), args.reps)
        tc = best_of(lambda: count(f, check=True), 1) if k <= args.check_upto else float("nan")
        rows.append((k, t))
        print(f"k={k:5d} N={2 + sum(f.widths):6d} pi={res.pi_s_t} dp={t * 1e3:9.2f}ms "
              f"matpow-check={tc * 1e3:9.2f}ms")
    ks, ts = zip(*rows)
    print(f"log-log slope (dp): {np.polyfit(np.log(ks), np.log(ts), 1)[0]:.2f}")


if __name__ == "__main__":
    main()
