"""Counting good choices with signed correction edges.

Conflict pairs are processed by increasing span ``j - i``.  For each
complementary occurrence pair ``(v_ia, v_jb)`` the current path value
``alpha = pi(v_ia, v_jb)`` is computed and an edge of value ``-alpha`` is
added, which cancels every surviving path through both occurrences.  On a
non-interlaced formula the final ``pi(s, t)`` is the exact number of good
choices; on an interlaced one it is only advisory.
"""
from __future__ import annotations

import enum
import json
import logging
import random
import time
from dataclasses import dataclass, field

from .formula import (ConflictSet, Formula, complementary_occurrences, conflict_set,
                      crossing_witness)
from .paths import (PathMatrix, add_edge_value, build_base_matrix, path_value_dp,
                    path_value_matpow)

log = logging.getLogger(__name__)


class Verdict(str, enum.Enum):
    SAT = "sat"
    UNSAT = "unsat"
    UNSUPPORTED = "unsupported-interlaced"


@dataclass(frozen=True)
class CorrectionEdge:
    src: tuple[int, int]
    dst: tuple[int, int]
    alpha: int
    delta: int
    seq: int

    @property
    def applied_value(self) -> int:
        return -self.alpha

    @property
    def pair(self) -> tuple[int, int]:
        return (self.src[0], self.dst[0])


@dataclass
class CountResult:
    pi_s_t: int
    interlaced: bool
    verdict: Verdict
    gamma_bound: int
    corrections: int
    advisory: bool = False
    witness: tuple | None = None
    timing: dict = field(default_factory=dict, compare=False)

    @property
    def satisfiable(self) -> Verdict:
        return self.verdict

    def to_json(self, timings: bool = True) -> dict:
        out = {
            "pi_s_t": str(self.pi_s_t),
            "interlaced": self.interlaced,
            "verdict": self.verdict.value,
            "advisory": self.advisory,
            "gamma_bound": str(self.gamma_bound),
            "corrections": self.corrections,
            "witness": [list(p) for p in self.witness] if self.witness else None,
        }
        if timings:
            out["timing"] = {k: round(v, 6) for k, v in self.timing.items()}
        return out


class AlreadyCorrected(RuntimeError):
    pass


class PathMismatch(AssertionError):
    pass


def apply_corrections(f: Formula, m: PathMatrix, d: ConflictSet | None = None, *,
                      rng: random.Random | None = None,
                      check: bool = False, on_edge=None) -> list[CorrectionEdge]:
    """Insert the correction edges into ``m`` in place and return them in order.

    ``rng`` shuffles the processing order inside each span round (used to
    test order independence); the default order is ascending ``i`` then
    ascending ``(a, b)``.  ``check`` recomputes every alpha by matrix power.
    ``on_edge(edge, m)`` is called after each insertion.
    """
    if m.edits:
        raise AlreadyCorrected("matrix already carries corrections")
    if d is None:
        d = conflict_set(f)
    edges = []
    for delta in range(1, f.k):
        work = []
        for i, j in d.by_span.get(delta, ()):
            for a, b in complementary_occurrences(f, i, j):
                work.append((i, a, j, b))
        if rng is not None:
            rng.shuffle(work)
        for i, a, j, b in work:
            x, y = m.occ(i, a), m.occ(j, b)
            alpha = path_value_dp(m, x, y)
            if check:
                slow = path_value_matpow(m, x, y)
                if slow != alpha:
                    raise PathMismatch(f"pi{(i, a)}->{(j, b)}: dp={alpha} matpow={slow}")
            add_edge_value(m, x, y, -alpha)
            edges.append(CorrectionEdge((i, a), (j, b), alpha, delta, len(edges)))
            if on_edge is not None:
                on_edge(edges[-1], m)
    return edges


def _run(f: Formula, check: bool = False):
    t0 = time.perf_counter()
    d = conflict_set(f)
    witness = crossing_witness(d)
    t1 = time.perf_counter()
    m = build_base_matrix(f)
    t2 = time.perf_counter()
    edges = apply_corrections(f, m, d, check=check)
    t3 = time.perf_counter()
    pi = path_value_dp(m, m.source, m.sink)
    if check and pi != path_value_matpow(m, m.source, m.sink):
        raise PathMismatch("pi(s, t) differs between dp and matpow")
    t4 = time.perf_counter()
    interlaced = witness is not None
    if interlaced and abs(pi) > f.gamma_bound():
        log.warning("interlaced advisory |pi(s,t)| = %d exceeds prod(n_i) = %d for %r",
                    abs(pi), f.gamma_bound(), f)
    res = CountResult(
        pi_s_t=pi,
        interlaced=interlaced,
        verdict=Verdict.UNSUPPORTED if interlaced else (Verdict.SAT if pi > 0 else Verdict.UNSAT),
        gamma_bound=f.gamma_bound(),
        corrections=len(edges),
        advisory=interlaced,
        witness=witness,
        timing={"analyze": t1 - t0, "build": t2 - t1, "correct": t3 - t2, "final": t4 - t3},
    )
    return res, m, edges


def count(f: Formula, check: bool = False) -> CountResult:
    return _run(f, check)[0]


def decide(f: Formula, force_interlaced: bool = False, check: bool = False) -> CountResult:
    res = count(f, check)
    if res.interlaced and force_interlaced:
        res.verdict = Verdict.SAT if res.pi_s_t > 0 else Verdict.UNSAT
    return res


def run_with_matrix(f: Formula, check: bool = False) -> tuple[CountResult, PathMatrix, list[CorrectionEdge]]:
    """Like :func:`count` but also hand back the corrected matrix and the edge log."""
    return _run(f, check)


# -- tracing -----------------------------------------------------------------

@dataclass
class TraceEvent:
    delta: int
    pair: tuple[int, int]
    src: tuple[int, int]
    dst: tuple[int, int]
    alpha: int
    matrix_digest: str

    def to_json(self) -> dict:
        return {"kind": "correction", "delta": self.delta, "pair": list(self.pair),
                "from": list(self.src), "to": list(self.dst), "alpha": str(self.alpha),
                "matrix_digest": self.matrix_digest}


@dataclass
class Trace:
    events: list[TraceEvent]
    initial: dict
    final: dict
    result: CountResult

    def lines(self, timings: bool = False) -> list[str]:
        rows = [{"kind": "matrix", "stage": "initial", **self.initial}]
        rows += [e.to_json() for e in self.events]
        rows.append({"kind": "matrix", "stage": "final", **self.final})
        rows.append({"kind": "result", **self.result.to_json(timings)})
        return [json.dumps(r) for r in rows]

    def write(self, path: str, timings: bool = False) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for line in self.lines(timings):
                fh.write(line + "\n")


def trace_run(f: Formula) -> Trace:
    d = conflict_set(f)
    m = build_base_matrix(f)
    initial = m.dump()
    events = []

    def record(e, cur):
        events.append(TraceEvent(e.delta, e.pair, e.src, e.dst, e.alpha, cur.digest()))

    apply_corrections(f, m, d, on_edge=record)
    return Trace(events, initial, m.dump(), count(f))


def replay(f: Formula, events: list[TraceEvent]) -> int:
    """Apply logged corrections to a fresh base matrix and return ``pi(s, t)``."""
    m = build_base_matrix(f)
    for ev in events:
        add_edge_value(m, m.occ(*ev.src), m.occ(*ev.dst), -ev.alpha)
    return path_value_dp(m, m.source, m.sink)
