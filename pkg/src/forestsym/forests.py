"""Permutations below a Hessenberg function, increasing spanning forests, and X_y.

Permutations are one-line tuples ``w`` with ``w[i-1] = sigma(i)``.  A forest
is stored by its parent map: ``parent[j-1]`` is the parent of vertex j, or 0
for a root; parents are always smaller than their children.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product

from .coeffs import ONE, ZERO, QPoly, q_integer
from .graphs import (
    Graph,
    HessenbergFunction,
    graph_of,
    restrict,
    _decorable,
)
from .partitions import lambda_of_subset, sort_to_partition
from .symfunc import SymFunc, basis_unit, multiply

__all__ = [
    "IncreasingForest",
    "ForestStats",
    "cycles",
    "cycle_type",
    "forget_cycles",
    "inv_m",
    "wt_perm",
    "enumerate_perms_leq",
    "perm_leq",
    "enumerate_forests",
    "forest_stats",
    "forest_from_permutation_simple",
    "forest_from_permutation",
    "X_of",
    "c_coefficients",
    "X_complete_recursion",
    "X_complete_closed",
    "q_stirling",
    "sum_of_weights",
    "weight_product",
    "X_vertical",
    "vertical_by_recursion",
    "vertical_by_inclusion_exclusion",
    "forests_containing",
    "forests_containing_tally",
    "vertical_c_coefficients",
    "vertical_forest_sum",
    "generator",
]

Y_KINDS = ("rho", "qe")


def cycles(w) -> list[tuple]:
    """Cycles, each starting at its least element, ordered by least element."""
    n = len(w)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = w[j - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(w) -> tuple:
    return sort_to_partition(tuple(len(c) for c in cycles(w)))


def forget_cycles(w) -> tuple:
    return tuple(j for cyc in cycles(w) for j in cyc)


def inv_m(word, m: HessenbergFunction) -> int:
    """Value pairs i < j <= m(i) with i written after j."""
    pos = [0] * (len(word) + 1)
    for p, v in enumerate(word):
        pos[v] = p
    total = 0
    for i in range(1, len(word) + 1):
        pi = pos[i]
        for j in range(i + 1, m(i) + 1):
            if pi > pos[j]:
                total += 1
    return total


def wt_perm(w, m: HessenbergFunction) -> int:
    return inv_m(forget_cycles(w), m)


def perm_leq(w, m: HessenbergFunction) -> bool:
    return all(v <= m(i) for i, v in enumerate(w, start=1))


def enumerate_perms_leq(m: HessenbergFunction) -> list[tuple]:
    """All sigma with sigma(i) <= m(i), in lexicographic order of one-line notation."""
    n = m.n
    used = [False] * (n + 1)
    word = []
    out = []

    def rec(i):
        if i > n:
            out.append(tuple(word))
            return
        for v in range(1, m(i) + 1):
            if not used[v]:
                used[v] = True
                word.append(v)
                rec(i + 1)
                word.pop()
                used[v] = False

    rec(1)
    return out


@dataclass(frozen=True)
class IncreasingForest:
    parent: tuple

    def __post_init__(self):
        for j, g in enumerate(self.parent, start=1):
            if not 0 <= g < j:
                raise ValueError(f"parent({j})={g} violates 0 <= parent < child")

    @property
    def n(self) -> int:
        return len(self.parent)

    @classmethod
    def from_edges(cls, n: int, edges) -> "IncreasingForest":
        parent = [0] * n
        for u, v in edges:
            u, v = min(u, v), max(u, v)
            if parent[v - 1]:
                raise ValueError(f"vertex {v} has two smaller neighbours; not increasing")
            parent[v - 1] = u
        return cls(tuple(parent))

    @property
    def edges(self) -> frozenset:
        return frozenset((g, j) for j, g in enumerate(self.parent, start=1) if g)

    @cached_property
    def root_of(self) -> tuple:
        roots = [0] * (self.n + 1)
        for j in range(1, self.n + 1):
            g = self.parent[j - 1]
            roots[j] = j if g == 0 else roots[g]
        return tuple(roots[1:])

    @cached_property
    def components(self) -> tuple:
        """Vertex sets of the trees, ordered by increasing root."""
        groups: dict = {}
        for v, r in enumerate(self.root_of, start=1):
            groups.setdefault(r, []).append(v)
        return tuple(tuple(groups[r]) for r in sorted(groups))

    @property
    def partition(self) -> tuple:
        return sort_to_partition(tuple(len(c) for c in self.components))

    def is_spanning_forest_of(self, g: Graph) -> bool:
        return all(g.has_edge(u, v) for u, v in self.edges)


@dataclass(frozen=True)
class ForestStats:
    tree_weights: tuple
    inversions: frozenset
    g_inversions: int
    total: int


def enumerate_forests(g: Graph) -> list[IncreasingForest]:
    choices = [[0, *g.neighbors_below(j)] for j in range(1, g.n + 1)]
    return [IncreasingForest(p) for p in product(*choices)]


def forest_stats(forest: IncreasingForest, g: Graph) -> ForestStats:
    if not forest.is_spanning_forest_of(g):
        raise ValueError("forest uses an edge outside the graph")
    comps = forest.components
    comp_of = {}
    for k, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = k
    weights = [0] * len(comps)
    for u, v in forest.edges:
        k = comp_of[u]
        weights[k] += sum(1 for w in comps[k] if u < w < v)
    inversions = frozenset(
        (v, w)
        for v, w in combinations(range(1, forest.n + 1), 2)
        if comp_of[v] > comp_of[w]
    )
    g_inv = sum(1 for v, w in inversions if g.has_edge(v, w))
    return ForestStats(tuple(weights), inversions, g_inv, g_inv + sum(weights))


def forest_from_permutation_simple(w) -> IncreasingForest:
    """Join each cycle element to the rightmost earlier, smaller element of its cycle."""
    parent = [0] * len(w)
    for cyc in cycles(w):
        for l in range(1, len(cyc)):
            j = cyc[l]
            parent[j - 1] = next(x for x in reversed(cyc[:l]) if x < j)
    return IncreasingForest(tuple(parent))


def forest_from_permutation(w, m: HessenbergFunction) -> IncreasingForest:
    """Weight- and shape-preserving map from sigma <= m to increasing forests of G_m."""
    if not perm_leq(w, m):
        raise ValueError(f"{w} is not below {m}")
    parent = [0] * len(w)
    for cyc in cycles(w):
        k = len(cyc)
        for l in range(1, k):
            j = cyc[l]
            target = sum(1 for lp in range(l + 1, k) if cyc[lp] < j <= m(cyc[lp]))
            smaller = sorted((x for x in cyc if x < j), reverse=True)
            # the t-th largest smaller element has exactly t cycle elements between it and j
            if target >= len(smaller):
                raise AssertionError(f"no parent with {target} elements between, cycle {cyc}")
            parent[j - 1] = smaller[target]
    return IncreasingForest(tuple(parent))


# ---------------------------------------------------------------------------
# the forest symmetric function


def generator(y: str, k: int) -> SymFunc:
    """y_k: rho_k in the rho basis, or (q-1)^(k-1) e_k in the e basis."""
    if y == "rho":
        return basis_unit("rho", (k,))
    if y == "qe":
        return basis_unit("e", (k,)) * (QPoly((-1, 1)) ** (k - 1))
    raise ValueError(f"unknown generator family {y!r}; use one of {Y_KINDS}")


def _y_of(y: str, lam: tuple, c: QPoly):
    if y == "rho":
        return c
    return c * QPoly((-1, 1)) ** (sum(lam) - len(lam))


@lru_cache(maxsize=4096)
def _weight_histogram(m: HessenbergFunction) -> dict:
    hist: dict = {}
    for w in enumerate_perms_leq(m):
        key = (cycle_type(w), wt_perm(w, m))
        hist[key] = hist.get(key, 0) + 1
    return hist


def c_coefficients(m: HessenbergFunction) -> dict:
    """c_lambda(m) = sum over sigma <= m of shape lambda of q^wt."""
    acc: dict = {}
    for (lam, wt), count in _weight_histogram(m).items():
        acc.setdefault(lam, [0] * (wt + 1))
        row = acc[lam]
        if len(row) <= wt:
            row.extend([0] * (wt + 1 - len(row)))
        row[wt] += count
    return {lam: QPoly(row) for lam, row in acc.items()}


def _from_c(n: int, c: dict, y: str) -> SymFunc:
    if y == "rho":
        return SymFunc(n, "rho", c)
    if y == "qe":
        return SymFunc(n, "e", {lam: _y_of(y, lam, v) for lam, v in c.items()})
    raise ValueError(f"unknown generator family {y!r}; use one of {Y_KINDS}")


def X_of(m: HessenbergFunction, y: str = "rho") -> SymFunc:
    return _from_c(m.n, c_coefficients(m), y)


def X_complete_recursion(n: int, y: str = "rho") -> SymFunc:
    values = [_from_c(0, {(): ONE}, y)]
    for k in range(1, n + 1):
        basis = values[0].basis
        acc = SymFunc.zero(k, basis)
        for i in range(1, k + 1):
            scale = ONE
            for j in range(k - i + 1, k):
                scale = scale * q_integer(j)
            acc = acc + multiply(values[k - i], generator(y, i)) * scale
        values.append(acc)
    return values[n]


def X_complete_closed(n: int, y: str = "rho") -> SymFunc:
    c: dict = {}
    for size in range(n):
        for subset in combinations(range(1, n), size):
            lam = lambda_of_subset(subset, n)
            w = ONE
            for j in subset:
                w = w * q_integer(j)
            c[lam] = c.get(lam, ZERO) + w
    if n == 0:
        c = {(): ONE}
    return _from_c(n, c, y)


def q_stirling(n: int, k: int) -> QPoly:
    """s_q(n, k) read off x(x - [1]_q)...(x - [n-1]_q)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    poly = [ONE]  # coefficients in x, lowest first
    for j in range(n):
        root = q_integer(j)
        nxt = [ZERO] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - c * root
        poly = nxt
    return poly[k] if (n - k) % 2 == 0 else -poly[k]


def weight_product(m: HessenbergFunction) -> QPoly:
    out = ONE
    for i in range(1, m.n + 1):
        out = out * (q_integer(m(i) - i) + 1)
    return out


def sum_of_weights(m: HessenbergFunction) -> QPoly:
    total = ZERO
    for c in c_coefficients(m).values():
        total = total + c
    expected = weight_product(m)
    if total != expected:
        raise AssertionError(f"sum of weights {total} differs from product formula {expected} at {m}")
    return total


# ---------------------------------------------------------------------------
# vertical strips


def _check_decoration(m: HessenbergFunction, S) -> frozenset:
    S = frozenset(S)
    bad = [i for i in S if not _decorable(m, i)]
    if bad:
        raise ValueError(f"{sorted(bad)} is not part of a decoration on {m}")
    return S


def vertical_by_recursion(m: HessenbergFunction, S, y: str = "rho") -> SymFunc:
    S = _check_decoration(m, S)
    if not S:
        return X_of(m, y)
    i = min(S)
    rest = S - {i}
    return vertical_by_recursion(m, rest, y) - vertical_by_recursion(restrict(m, {i}), rest, y)


def vertical_by_inclusion_exclusion(m: HessenbergFunction, S, y: str = "rho") -> SymFunc:
    S = sorted(_check_decoration(m, S))
    acc = SymFunc.zero(m.n, "rho" if y == "rho" else "e")
    for size in range(len(S) + 1):
        for sub in combinations(S, size):
            term = X_of(restrict(m, sub), y)
            acc = acc + (term if size % 2 == 0 else -term)
    return acc


def X_vertical(m: HessenbergFunction, S, y: str = "rho") -> SymFunc:
    rec = vertical_by_recursion(m, S, y)
    incl = vertical_by_inclusion_exclusion(m, S, y)
    if rec != incl:
        raise AssertionError(f"vertical-strip recursion and inclusion-exclusion disagree at {m}, {sorted(S)}")
    return rec


def vertical_c_coefficients(m: HessenbergFunction, S) -> dict:
    """c_lambda(m, S), i.e. the rho-coefficients of X(m, S)."""
    return dict(X_vertical(m, S, "rho").terms)


def vertical_forest_sum(m: HessenbergFunction, S, literal: bool = False) -> dict:
    """c_lambda(m, S) summed forest by forest.

    Only forests in which every pair (i, m(i)), i in S, is an edge or a
    G_m-inversion contribute, each with q^(wt - k) (q - 1)^k where k counts the
    pairs that are inversions.  ``literal=True`` uses q^wt (q - 1)^k instead,
    which overcounts by q^k.
    """
    S = _check_decoration(m, S)
    g = graph_of(m)
    qm1 = QPoly((-1, 1))
    out: dict = {}
    for F in enumerate_forests(g):
        st = forest_stats(F, g)
        k = 0
        for i in S:
            pair = (i, m(i))
            if pair in st.inversions:
                k += 1
            elif pair not in F.edges:
                break
        else:
            shift = 0 if literal else k
            term = QPoly.monomial(st.total - shift) * qm1**k
            lam = F.partition
            out[lam] = out.get(lam, ZERO) + term
    return {lam: c for lam, c in out.items() if c}


def forests_containing(m: HessenbergFunction, S) -> list[IncreasingForest]:
    """Increasing spanning forests of G_m that contain every edge {i, m(i)}, i in S."""
    S = _check_decoration(m, S)
    need = {(i, m(i)) for i in S}
    return [F for F in enumerate_forests(graph_of(m)) if need <= F.edges]


def forests_containing_tally(m: HessenbergFunction, S) -> dict:
    return dict(Counter(F.partition for F in forests_containing(m, S)))
