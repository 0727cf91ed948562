"""Definition-level brute force: colorings, orientations, chromatic counts.

These never touch forests or the rho basis, so they serve as independent
checks of everything in ``forests``.
"""

from __future__ import annotations

from itertools import product

from .coeffs import QPoly, exact_divide
from .graphs import Graph, HessenbergFunction, graph_of, is_indifference, restrict
from .partitions import enumerate_partitions
from .symfunc import MonomialSym, SymFunc
from . import _kernels

__all__ = [
    "asc",
    "csf_oracle",
    "llt_oracle",
    "llt_vertical_oracle",
    "chromatic_count",
    "orientation_sum",
    "lowest_reaching_vertex",
    "orientation_sum_reference",
]

Q_MINUS_1 = QPoly((-1, 1))


def asc(kappa, g: Graph) -> int:
    """Edges {i<j} with kappa(i) < kappa(j); kappa is indexed from vertex 1."""
    return sum(1 for i, j in g.edges if kappa[i - 1] < kappa[j - 1])


def _histogram_to_msym(n: int, counts) -> MonomialSym:
    terms = {}
    for lam, row in zip(enumerate_partitions(n), counts):
        terms[lam] = QPoly(int(x) for x in row)
    return MonomialSym(n, terms)


def csf_oracle(g: Graph, backend: str | None = None) -> MonomialSym:
    """Chromatic quasisymmetric function read off proper colorings with n colors."""
    counts = _kernels.coloring_histogram(g.n, g.edges, True, backend)
    return _histogram_to_msym(g.n, counts)


def llt_oracle(g: Graph, backend: str | None = None) -> MonomialSym:
    """Unicellular LLT polynomial read off all colorings with n colors."""
    if not is_indifference(g):
        raise ValueError("LLT polynomials are only defined here for indifference graphs")
    counts = _kernels.coloring_histogram(g.n, g.edges, False, backend)
    return _histogram_to_msym(g.n, counts)


def llt_vertical_oracle(m: HessenbergFunction, S, order=None) -> MonomialSym:
    """LLT(m, S), peeling S in the given order (increasing by default)."""
    from .forests import _check_decoration

    S = _check_decoration(m, S)
    if not S:
        return llt_oracle(graph_of(m))
    seq = sorted(S) if order is None else [i for i in order if i in S]
    i = seq[0]
    rest = [j for j in seq[1:]]
    a = llt_vertical_oracle(m, rest, rest)
    b = llt_vertical_oracle(restrict(m, {i}), rest, rest)
    return (a - b).map_coeffs(lambda c: exact_divide(c, Q_MINUS_1))


def chromatic_count(g: Graph, k: int) -> int:
    edges = g.sorted_edges()
    return sum(
        1
        for kappa in product(range(k), repeat=g.n)
        if all(kappa[u - 1] != kappa[v - 1] for u, v in edges)
    )


def lowest_reaching_vertex(n: int, left_edges) -> list[int]:
    """lrv(v) for v = 1..n, by depth-first search over edges oriented to the left."""
    down = {v: [] for v in range(1, n + 1)}
    for u, v in left_edges:
        down[max(u, v)].append(min(u, v))
    out = []
    for v in range(1, n + 1):
        stack, seen = [v], {v}
        while stack:
            x = stack.pop()
            for y in down[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        out.append(min(seen))
    return out


def orientation_sum(g: Graph, backend: str | None = None) -> SymFunc:
    """Sum over orientations of q^(#left edges) e_(lrv fibre sizes)."""
    counts = _kernels.orientation_histogram(g.n, g.edges, backend)
    terms = {}
    for lam, row in zip(enumerate_partitions(g.n), counts):
        terms[lam] = QPoly(int(x) for x in row)
    return SymFunc(g.n, "e", terms)


def orientation_sum_reference(g: Graph) -> SymFunc:
    """Same sum, one orientation at a time with an explicit DFS (slow, for cross-checks)."""
    from .partitions import sort_to_partition

    edges = g.sorted_edges()
    acc: dict = {}
    for bits in product((0, 1), repeat=len(edges)):
        left = [e for e, b in zip(edges, bits) if b]
        lrv = lowest_reaching_vertex(g.n, left)
        fibres = [lrv.count(r) for r in set(lrv)]
        lam = sort_to_partition(tuple(fibres))
        key = (lam, len(left))
        acc[key] = acc.get(key, 0) + 1
    terms: dict = {}
    for (lam, wt), cnt in acc.items():
        terms[lam] = terms.get(lam, QPoly()) + QPoly.monomial(wt, cnt)
    return SymFunc(g.n, "e", terms)
