"""Hessenberg functions, indifference graphs and the modular-law triples.

Vertices are 1..n throughout.  A Hessenberg function is stored as the tuple
(m(1), ..., m(n)); ``m(0)`` reads as 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import chain, combinations

__all__ = [
    "HessenbergFunction",
    "Graph",
    "ModularTriple",
    "Decoration",
    "graph_of",
    "hessenberg_of",
    "is_indifference",
    "natural_peo_valid",
    "enumerate_hessenberg",
    "concat",
    "modular_triples",
    "enumerate_decorations",
    "restrict",
    "complete",
    "parse_hessenberg",
    "parse_edges",
]


@dataclass(frozen=True)
class HessenbergFunction:
    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        n = len(vals)
        for i, v in enumerate(vals, start=1):
            if not i <= v <= n:
                raise ValueError(f"m({i})={v} outside [{i}, {n}]")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"{vals} is not non-decreasing")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return 0 if i == 0 else self.values[i - 1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __str__(self):
        return ",".join(map(str, self.values))

    def __repr__(self):
        return f"m({self})"


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset  # of (i, j) with i < j

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            u, v = min(u, v), max(u, v)
            if u < 1 or v > self.n:
                raise ValueError(f"edge {(u, v)} outside [1, {self.n}]")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors_below(self, j: int) -> list[int]:
        return sorted(i for i, k in self.edges if k == j)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class ModularTriple:
    m0: HessenbergFunction
    m1: HessenbergFunction
    m2: HessenbergFunction
    kind: int  # 1 or 2, which condition of the modular law
    position: int

    def recheck(self) -> bool:
        return _build_triple(self.m1, self.position, self.kind) == (self.m0, self.m2)


@dataclass(frozen=True)
class Decoration:
    base: HessenbergFunction
    S: frozenset

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(self.S))
        bad = [i for i in self.S if not _decorable(self.base, i)]
        if bad:
            raise ValueError(f"positions {sorted(bad)} violate the decoration condition on {self.base}")

    def to_json(self) -> dict:
        return {"m": list(self.base.values), "S": sorted(self.S)}


def parse_hessenberg(text: str) -> HessenbergFunction:
    """Parse '2,4,4,4'."""
    text = text.strip()
    if not text:
        return HessenbergFunction(())
    return HessenbergFunction(tuple(int(t) for t in text.split(",")))


def parse_edges(text: str, n: int | None = None) -> Graph:
    """Parse 'edges:1-2,2-3' (prefix optional)."""
    if text.startswith("edges:"):
        text = text[len("edges:"):]
    edges = []
    for tok in filter(None, text.split(",")):
        a, b = tok.split("-")
        edges.append((int(a), int(b)))
    size = n if n is not None else max((max(e) for e in edges), default=0)
    return Graph(size, frozenset(edges))


def complete(n: int) -> HessenbergFunction:
    return HessenbergFunction((n,) * n)


def graph_of(m: HessenbergFunction) -> Graph:
    edges = frozenset((i, j) for i in range(1, m.n + 1) for j in range(i + 1, m(i) + 1))
    return Graph(m.n, edges)


def hessenberg_of(g: Graph) -> HessenbergFunction:
    """Read off m(i) = max(i, largest neighbour of i); inverse of graph_of on indifference graphs."""
    if not is_indifference(g):
        raise ValueError("graph is not an indifference graph in its natural order")
    vals = []
    for i in range(1, g.n + 1):
        above = [j for a, j in g.edges if a == i]
        vals.append(max([i, *above]))
    return HessenbergFunction(tuple(vals))


def is_indifference(g: Graph) -> bool:
    for i, j in g.edges:
        for k in range(i + 1, j):
            if not (g.has_edge(i, k) and g.has_edge(k, j)):
                return False
    return True


def natural_peo_valid(g: Graph) -> bool:
    """True iff 1, ..., n is a perfect elimination ordering."""
    for j in range(1, g.n + 1):
        earlier = g.neighbors_below(j)
        for a, b in combinations(earlier, 2):
            if not g.has_edge(a, b):
                return False
    return True


@lru_cache(maxsize=None)
def _hessenberg_tuples(n: int) -> tuple:
    out = []

    def rec(prefix):
        i = len(prefix) + 1
        if i > n:
            out.append(tuple(prefix))
            return
        lo = max(i, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            rec(prefix + [v])

    rec([])
    return tuple(out)


def enumerate_hessenberg(n: int) -> list[HessenbergFunction]:
    """All Hessenberg functions on [n], lexicographic in (m(1), ..., m(n))."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [HessenbergFunction(t) for t in _hessenberg_tuples(n)]


def concat(m1: HessenbergFunction, m2: HessenbergFunction) -> HessenbergFunction:
    """Ordered union: m2 shifted to act on n1+1..n1+n2."""
    n1 = m1.n
    return HessenbergFunction(m1.values + tuple(n1 + v for v in m2.values))


def _try(values) -> HessenbergFunction | None:
    try:
        return HessenbergFunction(tuple(values))
    except ValueError:
        return None


def _build_triple(m1: HessenbergFunction, i: int, kind: int):
    """(m0, m2) for the given condition at position i, or None if it does not apply."""
    n = m1.n
    if not 1 <= i <= n - 1:
        return None
    vals = list(m1.values)
    if kind == 1:
        mi = m1(i)
        if not m1(i - 1) < mi < m1(i + 1):
            return None
        if not (mi == n or m1(mi) == m1(mi + 1)):
            return None
        v0, v2 = vals.copy(), vals.copy()
        v0[i - 1] = mi - 1
        v2[i - 1] = mi + 1
    elif kind == 2:
        if m1(i + 1) != m1(i) + 1 or i in m1.values:
            return None
        v0, v2 = vals.copy(), vals.copy()
        v0[i - 1] = v0[i] = m1(i)
        v2[i - 1] = v2[i] = m1(i + 1)
    else:
        raise ValueError(f"unknown condition {kind}")
    m0, m2 = _try(v0), _try(v2)
    if m0 is None or m2 is None:
        return None
    return m0, m2


def modular_triples(n: int) -> list[ModularTriple]:
    out = []
    for m1 in enumerate_hessenberg(n):
        for i in range(1, n):
            for kind in (1, 2):
                built = _build_triple(m1, i, kind)
                if built is not None:
                    out.append(ModularTriple(built[0], m1, built[1], kind, i))
    return out


def _decorable(m: HessenbergFunction, i: int) -> bool:
    return 1 <= i <= m.n - 1 and m(i) > max(m(i - 1), i)


def enumerate_decorations(m: HessenbergFunction) -> list[Decoration]:
    """All decorations S of [n-1] on m, by size then lexicographically."""
    valid = [i for i in range(1, m.n) if _decorable(m, i)]
    subsets = chain.from_iterable(combinations(valid, k) for k in range(len(valid) + 1))
    return [Decoration(m, frozenset(s)) for s in subsets]


def restrict(m: HessenbergFunction, subset) -> HessenbergFunction:
    """Decrease m at every position of the subset."""
    vals = list(m.values)
    for i in subset:
        vals[i - 1] -= 1
    return HessenbergFunction(tuple(vals))
