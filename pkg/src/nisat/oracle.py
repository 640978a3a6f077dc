"""Brute-force good-choice enumeration and random formula generation."""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .formula import Formula, conflict_set, is_interlaced

DEFAULT_CAP = 10**7


class SearchSpaceTooLarge(ValueError):
    pass


class InfeasibleParams(ValueError):
    pass


@dataclass(frozen=True)
class GoodChoice:
    picks: tuple[tuple[int, int], ...]   # 1-based (clause, position)
    literals: tuple[int, ...]

    def to_json(self) -> dict:
        return {"picks": [list(p) for p in self.picks], "literals": list(self.literals)}


def _guard(f: Formula, cap: int):
    size = f.gamma_bound()
    if size > cap:
        raise SearchSpaceTooLarge(f"search space too large: prod(n_i) = {size} > cap {cap}")


def _search(f: Formula, first_only: bool):
    """Odometer over positions with pruning on the running literal multiset."""
    clauses = f.clauses
    k = len(clauses)
    chosen: Counter = Counter()
    picks: list[int] = []
    found = 0

    def rec(i):
        nonlocal found
        if i == k:
            found += 1
            return first_only
        for a, x in enumerate(clauses[i]):
            if chosen[-x]:
                continue
            chosen[x] += 1
            picks.append(a)
            stop = rec(i + 1)
            if stop:
                return True
            picks.pop()
            chosen[x] -= 1
        return False

    rec(0)
    return found, picks


def brute_force_count(f: Formula, cap: int = DEFAULT_CAP) -> int:
    _guard(f, cap)
    return _search(f, False)[0]


def brute_force_sat(f: Formula, cap: int = DEFAULT_CAP) -> GoodChoice | None:
    """First good choice in odometer order, or None when there is none."""
    _guard(f, cap)
    found, picks = _search(f, True)
    if not found:
        return None
    return GoodChoice(
        picks=tuple((i + 1, a + 1) for i, a in enumerate(picks)),
        literals=tuple(f.clauses[i][a] for i, a in enumerate(picks)),
    )


def is_good_choice(f: Formula, picks) -> bool:
    lits = [f.literal(i, a) for i, a in picks]
    if sorted(i for i, _ in picks) != list(range(1, f.k + 1)):
        return False
    s = set(lits)
    return all(-x not in s for x in s)


def witness_assignment(choice: GoodChoice) -> dict[int, bool]:
    """Truth assignment making every picked literal true; raises on inconsistency."""
    out: dict[int, bool] = {}
    for x in choice.literals:
        v = x > 0
        if out.setdefault(abs(x), v) != v:
            raise ValueError(f"inconsistent witness on variable {abs(x)}")
    return out


# -- generator ---------------------------------------------------------------

MODES = ("any", "noninterlaced", "interlaced")


@dataclass(frozen=True)
class GeneratorParams:
    clauses: tuple[int, int] = (1, 8)
    width: int = 3
    variables: int = 6
    seed: int = 0
    mode: str = "any"
    max_attempts: int = 10_000

    def __post_init__(self):
        lo, hi = self.clauses
        if not 1 <= lo <= hi:
            raise ValueError(f"bad clause range {self.clauses}")
        if self.width < 1 or self.variables < 1:
            raise ValueError("width and variables must be >= 1")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")


def _sample(rng: random.Random, p: GeneratorParams) -> Formula:
    k = rng.randint(*p.clauses)
    return Formula(tuple(
        tuple(rng.choice((-1, 1)) * rng.randint(1, p.variables)
              for _ in range(rng.randint(1, p.width)))
        for _ in range(k)
    ))


def random_formula(p: GeneratorParams) -> Formula:
    if p.mode == "interlaced" and p.clauses[1] < 4:
        raise InfeasibleParams("interlaced formulas need at least 4 clauses")
    rng = random.Random(p.seed)
    for _ in range(p.max_attempts):
        f = _sample(rng, p)
        if p.mode == "any":
            return f
        if is_interlaced(conflict_set(f)) == (p.mode == "interlaced"):
            return f
    raise InfeasibleParams(f"mode {p.mode!r} not reached in {p.max_attempts} attempts for {p}")
