"""Integer partitions, compositions and domino tabloids.

Partitions and compositions are plain tuples of positive ints.  Partitions
are weakly decreasing; the empty tuple is the partition of 0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .coeffs import ONE, ZERO, QPoly, q_integer

Partition = tuple
Composition = tuple

__all__ = [
    "Partition",
    "Composition",
    "DominoTabloid",
    "is_partition",
    "conjugate",
    "sort_to_partition",
    "lambda_of_subset",
    "enumerate_partitions",
    "partition_index",
    "compositions",
    "enumerate_domino_tabloids",
    "domino_weight_sum",
]


def is_partition(parts) -> bool:
    return all(p > 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def sort_to_partition(alpha: Composition) -> Partition:
    return tuple(sorted(alpha, reverse=True))


def lambda_of_subset(subset, n: int) -> Partition:
    """Block sizes of [n] when j and j+1 are glued for each j in the subset, sorted.

    Equivalently the composition cut at the complement [n-1] minus the subset.
    """
    elems = set(subset)
    if any(i < 1 or i > n - 1 for i in elems):
        raise ValueError(f"subset {sorted(elems)} not contained in [1, {n - 1}]")
    cuts = [0, *(j for j in range(1, n) if j not in elems), n]
    comp = tuple(b - a for a, b in zip(cuts, cuts[1:]))
    return sort_to_partition(comp)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first, *rest))
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions(n, n))


@lru_cache(maxsize=None)
def partition_index(n: int) -> dict:
    """Position of each partition of n in the fixed enumeration order."""
    return {lam: i for i, lam in enumerate(_partitions(n, n))}


@lru_cache(maxsize=None)
def compositions(n: int, allowed: frozenset | None = None) -> tuple:
    """Compositions of n, optionally with parts restricted to ``allowed``."""
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        if allowed is not None and first not in allowed:
            continue
        for rest in compositions(n - first, allowed):
            out.append((first, *rest))
    return tuple(out)


@dataclass(frozen=True)
class DominoTabloid:
    """Rows of a Young diagram filled left to right with horizontal dominoes."""

    shape: Partition
    rows: tuple  # one tuple of domino lengths per row

    def __post_init__(self):
        if len(self.rows) != len(self.shape):
            raise ValueError("one filling per row required")
        for length, row in zip(self.shape, self.rows):
            if sum(row) != length:
                raise ValueError(f"row filling {row} does not cover length {length}")

    @property
    def type(self) -> Partition:
        return sort_to_partition(tuple(d for row in self.rows for d in row))

    def q_weight(self) -> QPoly:
        w = ONE
        for row in self.rows:
            w = w * q_integer(row[0])
        return w


def enumerate_domino_tabloids(shape: Partition, type_: Partition) -> list[DominoTabloid]:
    if sum(shape) != sum(type_):
        raise ValueError(f"|shape|={sum(shape)} differs from |type|={sum(type_)}")
    allowed = frozenset(type_)
    target = Counter(type_)
    per_row = [compositions(length, allowed) for length in shape]
    out = []
    for rows in product(*per_row):
        if Counter(d for row in rows for d in row) == target:
            out.append(DominoTabloid(tuple(shape), rows))
    return out


@lru_cache(maxsize=None)
def domino_weight_sum(shape: Partition, type_: Partition) -> QPoly:
    """w_{shape,type}: total q-weight of the domino tabloids of this shape and type."""
    total = ZERO
    for t in enumerate_domino_tabloids(shape, type_):
        total = total + t.q_weight()
    return total
