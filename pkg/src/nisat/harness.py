"""Differential fuzzing of the counter against the brute-force oracle."""
from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass, field, replace
from typing import Callable

from .counter import count
from .formula import Formula
from .oracle import DEFAULT_CAP, GeneratorParams, SearchSpaceTooLarge, brute_force_count, random_formula

log = logging.getLogger(__name__)


class FatalDiscrepancy(AssertionError):
    """Counter and oracle disagree on a non-interlaced formula."""

    def __init__(self, bundle: dict):
        super().__init__(f"non-interlaced mismatch: {bundle}")
        self.bundle = bundle


@dataclass
class ShrunkWitness:
    original: Formula
    minimal: Formula
    steps: int

    def to_json(self) -> dict:
        return {"original": [list(c) for c in self.original],
                "minimal": [list(c) for c in self.minimal], "steps": self.steps}


@dataclass
class FuzzReport:
    trials: int
    agreements: int
    discrepancies: list[dict]
    seed: int
    params: GeneratorParams
    oversized: int = 0
    shrunk: list[ShrunkWitness] = field(default_factory=list)
    duration: float = 0.0

    def to_json(self, timings: bool = True) -> dict:
        out = {
            "trials": self.trials,
            "agreements": self.agreements,
            "oversized": self.oversized,
            "discrepancies": self.discrepancies,
            "shrunk": [w.to_json() for w in self.shrunk],
            "seed": self.seed,
            "params": {**asdict(self.params), "clauses": list(self.params.clauses)},
        }
        if timings:
            out["duration"] = round(self.duration, 6)
        return out


def is_discrepant(f: Formula, cap: int = DEFAULT_CAP) -> bool:
    return count(f).pi_s_t != brute_force_count(f, cap)


def _candidates(f: Formula):
    cl = [list(c) for c in f.clauses]
    for i in range(len(cl)):
        yield Formula.of(cl[:i] + cl[i + 1:])
    for i, c in enumerate(cl):
        if len(c) > 1:
            for a in range(len(c)):
                yield Formula.of(cl[:i] + [c[:a] + c[a + 1:]] + cl[i + 1:])
    # relabel a variable to a smaller unused one, both polarities at once;
    # complementarity between occurrences is unchanged
    used = f.variables()
    for v in sorted(used):
        free = [u for u in range(1, v) if u not in used]
        if free:
            u = free[0]
            yield Formula.of([[(u if x > 0 else -u) if abs(x) == v else x for x in c] for c in cl])


def shrink(f: Formula, predicate: Callable[[Formula], bool]) -> ShrunkWitness:
    if not predicate(f):
        raise ValueError("predicate does not hold on the input")
    cur, steps = f, 0
    while True:
        for cand in _candidates(cur):
            if predicate(cand):
                cur, steps = cand, steps + 1
                break
        else:
            return ShrunkWitness(f, cur, steps)


def run_trial(params: GeneratorParams, index: int, cap: int, f: Formula | None = None):
    """Returns (formula, pi, gamma, interlaced) or None when over the cap."""
    if f is None:
        f = random_formula(replace(params, seed=params.seed ^ index))
    try:
        gamma = brute_force_count(f, cap)
    except SearchSpaceTooLarge:
        return None
    res = count(f)
    return f, res.pi_s_t, gamma, res.interlaced


def fuzz(params: GeneratorParams, trials: int, cap: int = DEFAULT_CAP,
         shrink_limit: int = 20, corpus: tuple[Formula, ...] = ()) -> FuzzReport:
    """Trial ``n`` uses seed ``params.seed ^ n``; oversized trials are skipped and counted.

    Formulas in ``corpus`` run first as extra trials with negative indices.
    """
    t0 = time.perf_counter()
    report = FuzzReport(0, 0, [], params.seed, params)
    jobs = [(-1 - n, g) for n, g in enumerate(corpus)] + [(n, None) for n in range(trials)]
    for n, given in jobs:
        out = run_trial(params, n, cap, given)
        if out is None:
            report.oversized += 1
            continue
        f, pi, gamma, interlaced = out
        report.trials += 1
        if pi == gamma:
            report.agreements += 1
            continue
        entry = {"formula": [list(c) for c in f], "pi_s_t": str(pi), "gamma": str(gamma),
                 "interlaced": interlaced, "trial": n}
        if not interlaced:
            bundle = {**entry, "seed": params.seed ^ n, "params": asdict(params)}
            log.error("fatal: %s", bundle)
            raise FatalDiscrepancy(bundle)
        report.discrepancies.append(entry)
    report.discrepancies.sort(key=lambda e: (len(e["formula"]), e["formula"], e["trial"]))
    for e in report.discrepancies[:shrink_limit]:
        report.shrunk.append(shrink(Formula.of(e["formula"]), lambda g: is_discrepant(g, cap)))
    report.duration = time.perf_counter() - t0
    return report
