"""Searching for a clause order whose conflict pairs do not cross.

Clause permutation leaves the number of good choices unchanged, so a
non-interlaced order lets the exact counter run on any formula that has one.
The exact search is exponential in the worst case and takes a node budget.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .formula import Formula, conflict_set, is_interlaced, permute


@dataclass
class ReorderResult:
    found: bool
    sigma: tuple[int, ...] | None
    nodes_explored: int
    budget_exhausted: bool

    def to_json(self) -> dict:
        return {"found": self.found, "sigma": list(self.sigma) if self.sigma else
                ([] if self.found else None),
                "nodes_explored": self.nodes_explored, "budget_exhausted": self.budget_exhausted}


def _conflict_graph(f: Formula) -> list[set[int]]:
    """0-based adjacency: clause c conflicts with clause e."""
    adj = [set() for _ in range(f.k)]
    for i, j in conflict_set(f).pairs:
        adj[i - 1].add(j - 1)
        adj[j - 1].add(i - 1)
    return adj


def _verify(f: Formula, sigma) -> bool:
    return not is_interlaced(conflict_set(permute(f, sigma)))


def find_order_exact(f: Formula, budget: int = 1_000_000) -> ReorderResult:
    """Backtracking over order prefixes, pruning as soon as placed arcs cross.

    A placed arc is a conflict pair whose clauses both sit in the prefix; it
    keeps its positions under any completion, so a crossing never disappears.
    """
    adj = _conflict_graph(f)
    k = f.k
    order: list[int] = []
    pos = [-1] * k
    arcs: list[tuple[int, int]] = []   # positions (p, q), p < q
    nodes = 0
    exhausted = False

    def rec() -> bool:
        nonlocal nodes, exhausted
        if len(order) == k:
            return True
        q = len(order)
        for c in range(k):
            if pos[c] >= 0:
                continue
            if nodes >= budget:
                exhausted = True
                return False
            nodes += 1
            new = sorted(pos[e] for e in adj[c] if pos[e] >= 0)
            # new arcs all end at q, the largest position so far; (p, q)
            # crosses (i, j) iff i < p < j
            if any(i < p < j for p in new for i, j in arcs):
                continue
            pos[c] = q
            order.append(c)
            arcs.extend((p, q) for p in new)
            if rec():
                return True
            del arcs[len(arcs) - len(new):]
            order.pop()
            pos[c] = -1
            if exhausted:
                return False
        return False

    ok = rec()
    sigma = tuple(c + 1 for c in order) if ok else None
    if ok and not _verify(f, sigma):
        raise AssertionError(f"exact search produced an interlaced order {sigma}")
    return ReorderResult(ok, sigma, nodes, exhausted and not ok)


def find_order_enum(f: Formula) -> tuple[int, ...] | None:
    """First non-interlaced order among all k! permutations (reference)."""
    for perm in itertools.permutations(range(1, f.k + 1)):
        if _verify(f, perm):
            return perm
    return None


def _crossings(arcs: list[tuple[int, int]]) -> int:
    n = 0
    for (i, j), (i2, j2) in itertools.combinations(arcs, 2):
        if i < i2 < j < j2 or i2 < i < j2 < j:
            n += 1
    return n


def find_order_greedy(f: Formula) -> ReorderResult:
    """Insert clauses by decreasing conflict degree at the least-crossing slot.

    A miss is not a proof that no order exists.
    """
    adj = _conflict_graph(f)
    todo = sorted(range(f.k), key=lambda c: (-len(adj[c]), c))
    order: list[int] = []
    nodes = 0

    def arcs_of(seq):
        where = {c: p for p, c in enumerate(seq)}
        return [tuple(sorted((where[c], where[e]))) for c in seq for e in adj[c]
                if e in where and c < e]

    for c in todo:
        best = None
        for slot in range(len(order) + 1):
            nodes += 1
            cand = order[:slot] + [c] + order[slot:]
            score = _crossings(arcs_of(cand))
            if best is None or score <= best[0]:  # ties: latest slot, keeps identity
                best = (score, cand)
        order = best[1]
    sigma = tuple(c + 1 for c in order)
    ok = _verify(f, sigma)
    return ReorderResult(ok, sigma if ok else None, nodes, False)
