"""Find formulas where the greedy reorder heuristic misses but exact search succeeds."""
import argparse
import json

from nisat.harness import shrink
from nisat.oracle import GeneratorParams, random_formula
from nisat.reorder import find_order_exact, find_order_greedy


def gap(f):
    return find_order_exact(f).found and not find_order_greedy(f).found


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tries", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-clauses", type=int, default=8)
    args = ap.parse_args()
    for n in range(args.tries):
        p = GeneratorParams(clauses=(4, args.max_clauses), width=3, variables=6,
                            seed=args.seed ^ n, mode="interlaced")
        f = random_formula(p)
        if gap(f):
            w = shrink(f, gap)
            print(json.dumps({"trial": n, "original": w.original.clauses,
                              "minimal": w.minimal.clauses, "steps": w.steps}))
            return
    print("no gap found")


if __name__ == "__main__":
    main()
