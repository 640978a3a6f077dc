"""Formula data model, parsers, conflict sets and the interlacing test.

A formula is an ordered list of clauses; a clause is an ordered, nonempty
list of nonzero integer literals.  Duplicate and complementary literals
inside one clause are legal and each occurrence counts separately.

All clause indices exposed by this module are 1-based.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

log = logging.getLogger(__name__)

Pair = tuple[int, int]


class ParseError(ValueError):
    pass


class EmptyClauseError(ParseError):
    pass


def negate(lit: int) -> int:
    if lit == 0:
        raise ValueError("zero literal")
    return -lit


@dataclass(frozen=True)
class Formula:
    clauses: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        clauses = tuple(tuple(c) for c in self.clauses)
        for i, c in enumerate(clauses, 1):
            if not c:
                raise EmptyClauseError(f"clause {i} is empty")
            for lit in c:
                if isinstance(lit, bool) or not isinstance(lit, int):
                    raise ParseError(f"clause {i}: non-integer literal {lit!r}")
                if lit == 0:
                    raise ParseError(f"clause {i}: zero literal")
        object.__setattr__(self, "clauses", clauses)

    @classmethod
    def of(cls, clauses: Iterable[Iterable[int]]) -> "Formula":
        return cls(tuple(tuple(c) for c in clauses))

    @property
    def k(self) -> int:
        return len(self.clauses)

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.clauses)

    def literal(self, i: int, a: int) -> int:
        """Literal at clause ``i``, position ``a`` (both 1-based)."""
        return self.clauses[i - 1][a - 1]

    def gamma_bound(self) -> int:
        out = 1
        for c in self.clauses:
            out *= len(c)
        return out

    def variables(self) -> set[int]:
        return {abs(x) for c in self.clauses for x in c}

    def __len__(self):
        return len(self.clauses)

    def __iter__(self):
        return iter(self.clauses)

    def __repr__(self):
        return f"Formula({[list(c) for c in self.clauses]})"


# -- parsing / serialization -------------------------------------------------

def parse_native(text: str) -> Formula:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from e
    if not isinstance(data, list):
        raise ParseError("top-level value must be an array of clauses")
    for i, c in enumerate(data, 1):
        if not isinstance(c, list):
            raise ParseError(f"clause {i} is not an array")
    return Formula.of(data)


def to_native(f: Formula) -> str:
    return json.dumps([list(c) for c in f.clauses])


def parse_dimacs(text: str, strict: bool = False) -> Formula:
    """Parse DIMACS CNF, keeping file clause order and repeated literals.

    A clause-count mismatch with the header is logged, or raised when
    ``strict`` is set.  Empty clauses always raise :class:`EmptyClauseError`.
    """
    header = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):  # SATLIB trailer
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise ParseError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"line {lineno}: bad header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"line {lineno}: bad header {line!r}") from None
            continue
        if header is None:
            raise ParseError("missing 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer token {tok!r}") from None
            if lit == 0:
                if not current:
                    raise EmptyClauseError(f"line {lineno}: empty clause unsupported")
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        # unterminated last clause; tolerated like most solvers do
        clauses.append(current)
    nvars, nclauses = header
    problems = []
    if len(clauses) != nclauses:
        problems.append(f"header declares {nclauses} clauses, found {len(clauses)}")
    top = max((abs(x) for c in clauses for x in c), default=0)
    if top > nvars:
        problems.append(f"header declares {nvars} variables, literal {top} seen")
    for msg in problems:
        if strict:
            raise ParseError(msg)
        log.warning(msg)
    return Formula.of(clauses)


def to_dimacs(f: Formula) -> str:
    nvars = max(f.variables(), default=0)
    lines = [f"p cnf {nvars} {f.k}"]
    lines += [" ".join(map(str, c)) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"


def load(path: str, fmt: str | None = None, strict: bool = False) -> Formula:
    if fmt is None:
        fmt = "json" if str(path).endswith(".json") else "dimacs"
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if fmt == "json":
        return parse_native(text)
    return parse_dimacs(text, strict=strict)


# -- conflict structure ------------------------------------------------------

@dataclass(frozen=True)
class ConflictSet:
    """Pairs ``(i, j)``, ``i < j``, of clauses holding complementary literals."""

    pairs: frozenset[Pair]
    by_span: dict[int, tuple[Pair, ...]] = field(compare=False, repr=False, default=None)

    def __post_init__(self):
        if self.by_span is None:
            buckets: dict[int, list[Pair]] = {}
            for i, j in sorted(self.pairs):
                buckets.setdefault(j - i, []).append((i, j))
            object.__setattr__(self, "by_span", {d: tuple(v) for d, v in buckets.items()})

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> "ConflictSet":
        out = set()
        for i, j in pairs:
            if not 1 <= i < j:
                raise ValueError(f"bad conflict pair {(i, j)}")
            out.add((i, j))
        return cls(frozenset(out))

    def sorted(self) -> list[Pair]:
        return sorted(self.pairs)

    def __contains__(self, pair):
        return tuple(pair) in self.pairs

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.sorted())


def conflict_set(f: Formula) -> ConflictSet:
    sets = [set(c) for c in f.clauses]
    pairs = set()
    for i, ci in enumerate(sets):
        neg = {-x for x in ci}
        for j in range(i + 1, len(sets)):
            if not neg.isdisjoint(sets[j]):
                pairs.add((i + 1, j + 1))
    return ConflictSet(frozenset(pairs))


def complementary_occurrences(f: Formula, i: int, j: int) -> list[tuple[int, int]]:
    """Position pairs ``(a, b)`` with literal(i, a) == -literal(j, b), lexicographic."""
    ci, cj = f.clauses[i - 1], f.clauses[j - 1]
    return [(a, b) for a, x in enumerate(ci, 1) for b, y in enumerate(cj, 1) if x == -y]


def crosses(p: Pair, q: Pair) -> bool:
    (i, j), (i2, j2) = p, q
    return i < i2 < j < j2 or i2 < i < j2 < j


def crossing_witness(d: ConflictSet | Iterable[Pair]) -> tuple[Pair, Pair] | None:
    """Lexicographically smallest strictly crossing ``(p, q)`` with ``p < q``, or None."""
    pairs = d.sorted() if isinstance(d, ConflictSet) else sorted(d)
    for n, (i, j) in enumerate(pairs):
        for i2, j2 in pairs[n + 1:]:
            if i2 >= j:
                break
            if i < i2 < j < j2:
                return (i, j), (i2, j2)
    return None


def is_interlaced(d: ConflictSet | Iterable[Pair]) -> bool:
    return crossing_witness(d) is not None


def permute(f: Formula, sigma: Sequence[int]) -> Formula:
    """Clause ``i`` of the result is clause ``sigma[i-1]`` of ``f`` (1-based)."""
    sigma = list(sigma)
    if sorted(sigma) != list(range(1, f.k + 1)):
        raise ValueError(f"not a permutation of 1..{f.k}: {sigma}")
    return Formula(tuple(f.clauses[s - 1] for s in sigma))


def analyze(f: Formula) -> dict:
    d = conflict_set(f)
    w = crossing_witness(d)
    return {
        "k": f.k,
        "widths": list(f.widths),
        "delta": [list(p) for p in d.sorted()],
        "interlaced": w is not None,
        "witness": [list(w[0]), list(w[1])] if w else None,
    }
