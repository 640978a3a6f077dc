"""Layered valued DAG over clause occurrences and its path values.

Vertices are dense integers: the source is 0, occurrence ``(i, a)`` follows
in clause-major order, the sink is ``N - 1``.  Every edge goes from a lower
to a higher index, so the index order is a topological order.

Two independent path-value routines are provided: :func:`path_value_matpow`
raises the matrix (with ``y`` made absorbing) to the power ``k + 1`` by
repeated multiplication, :func:`path_value_dp` runs one accumulation pass
over the topological order.  Both use exact Python integers.
"""
from __future__ import annotations

import hashlib
import json

import numpy as np

from .formula import Formula


class PathMatrix:
    def __init__(self, widths: tuple[int, ...]):
        self.widths = tuple(widths)
        self.k = len(self.widths)
        self.offsets = []
        pos = 1
        for w in self.widths:
            self.offsets.append(pos)
            pos += w
        self.n = pos + 1
        self.source = 0
        self.sink = self.n - 1
        self.entries = np.zeros((self.n, self.n), dtype=object)
        # sparse mirror for the DP: pred[z] = {u: entry[u, z]} for nonzero entries
        self.pred: list[dict[int, int]] = [{} for _ in range(self.n)]
        self.edits = 0

    def occ(self, i: int, a: int) -> int:
        """Vertex index of occurrence ``a`` of clause ``i`` (1-based)."""
        if not (1 <= i <= self.k and 1 <= a <= self.widths[i - 1]):
            raise IndexError(f"no occurrence ({i}, {a})")
        return self.offsets[i - 1] + a - 1

    def layer(self, v: int) -> int:
        """Clause index of a vertex; 0 for the source, k + 1 for the sink."""
        if v == self.source:
            return 0
        if v == self.sink:
            return self.k + 1
        for i in range(self.k - 1, -1, -1):
            if v >= self.offsets[i]:
                return i + 1
        raise IndexError(v)

    def label(self, v: int):
        if v == self.source:
            return "s"
        if v == self.sink:
            return "t"
        i = self.layer(v)
        return (i, v - self.offsets[i - 1] + 1)

    def __getitem__(self, xy):
        return self.entries[xy]

    def _set(self, x: int, y: int, value: int):
        self.entries[x, y] = value
        if value:
            self.pred[y][x] = value
        else:
            self.pred[y].pop(x, None)

    def copy(self) -> "PathMatrix":
        out = PathMatrix.__new__(PathMatrix)
        out.__dict__.update(self.__dict__)
        out.entries = self.entries.copy()
        out.pred = [dict(p) for p in self.pred]
        return out

    def nonzero(self) -> list[tuple[int, int, int]]:
        return sorted((u, z, w) for z, p in enumerate(self.pred) for u, w in p.items())

    def dump(self) -> dict:
        return {"n": self.n, "entries": [[x, y, str(w)] for x, y, w in self.nonzero()]}

    def digest(self) -> str:
        blob = json.dumps(self.dump(), separators=(",", ":")).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    def __eq__(self, other):
        return (isinstance(other, PathMatrix) and self.widths == other.widths
                and self.nonzero() == other.nonzero())


def build_base_matrix(f: Formula) -> PathMatrix:
    m = PathMatrix(f.widths)
    if f.k == 0:
        m._set(m.source, m.sink, 1)
        return m
    for a in range(1, f.widths[0] + 1):
        m._set(m.source, m.occ(1, a), 1)
    for i in range(1, f.k):
        for a in range(1, f.widths[i - 1] + 1):
            for b in range(1, f.widths[i] + 1):
                m._set(m.occ(i, a), m.occ(i + 1, b), 1)
    for a in range(1, f.widths[-1] + 1):
        m._set(m.occ(f.k, a), m.sink, 1)
    return m


def add_edge_value(m: PathMatrix, x: int, y: int, w: int) -> None:
    """Add a parallel edge ``x -> y`` of value ``w``; entries hold edge sums."""
    if not m.layer(x) < m.layer(y):
        raise ValueError(f"edge {m.label(x)} -> {m.label(y)} violates the layer order")
    m._set(x, y, m.entries[x, y] + w)
    m.edits += 1


def path_value_matpow(m: PathMatrix, x: int, y: int) -> int:
    return int(path_column_matpow(m, y)[x])


def path_column_matpow(m: PathMatrix, y: int) -> np.ndarray:
    """``pi(x, y)`` for every ``x`` at once, via ``(M + e_y e_y^T)^(k+1)``."""
    a = m.entries.copy()  # the caller's matrix is never touched
    a[y, y] = 1
    p = a
    for _ in range(m.k):
        p = p @ a
    return p[:, y]


def path_value_dp(m: PathMatrix, x: int, y: int) -> int:
    if x == y:
        return 1
    if y < x:
        return 0
    val = {x: 1}
    for z in range(x + 1, y + 1):
        s = 0
        for u, w in m.pred[z].items():
            vu = val.get(u)
            if vu:
                s += vu * w
        if s:
            val[z] = s
    return val.get(y, 0)


def enumerate_paths(m: PathMatrix, x: int, y: int):
    """Yield every directed path ``x -> ... -> y`` as a vertex list (exponential)."""
    succ: dict[int, list[int]] = {}
    for u, z, _ in m.nonzero():
        succ.setdefault(u, []).append(z)

    def walk(path):
        v = path[-1]
        if v == y:
            yield list(path)
            return
        for z in succ.get(v, ()):
            if z <= y:
                path.append(z)
                yield from walk(path)
                path.pop()

    yield from walk([x])


def path_value_enum(m: PathMatrix, x: int, y: int) -> int:
    """Brute-force path value; for cross-checking tiny matrices only."""
    total = 0
    for path in enumerate_paths(m, x, y):
        prod = 1
        for u, z in zip(path, path[1:]):
            prod *= m.entries[u, z]
        total += prod
    return total
