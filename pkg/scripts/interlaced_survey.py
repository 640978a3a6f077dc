"""How often, and by how much, the advisory count is wrong on interlaced formulas."""
import argparse
import collections
import json

from nisat.harness import fuzz
from nisat.oracle import GeneratorParams


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=5000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-clauses", type=int, default=8)
    ap.add_argument("--vars", type=int, default=6)
    ap.add_argument("--width", type=int, default=3)
    args = ap.parse_args()
    p = GeneratorParams(clauses=(4, args.max_clauses), width=args.width,
                        variables=args.vars, seed=args.seed, mode="interlaced")
    rep = fuzz(p, args.trials, shrink_limit=10)
    errs = collections.Counter()
    negative = over_bound = wrong_verdict = 0
    for d in rep.discrepancies:
        pi, gamma = int(d["pi_s_t"]), int(d["gamma"])
        bound = 1
        for c in d["formula"]:
            bound *= len(c)
        errs[pi - gamma] += 1
        negative += pi < 0
        over_bound += abs(pi) > bound
        wrong_verdict += (pi > 0) != (gamma > 0)
    print(f"trials={rep.trials} agree={rep.agreements} discrepant={len(rep.discrepancies)}")
    print(f"negative advisory={negative} |pi|>prod(n_i)={over_bound} wrong sat verdict={wrong_verdict}")
    print("most common pi-gamma:", errs.most_common(8))
    for w in rep.shrunk:
        print("shrunk:", json.dumps(w.to_json()["minimal"]))


if __name__ == "__main__":
    main()
