"""Integer kernels for the brute-force oracles.

Two exponential loops dominate the runtime of the oracles: all n**n colorings
of a graph and all 2**|E| orientations.  Each has a numba ``@njit`` version
and a vectorised numpy version computing the same histogram.  Set
``FORESTSYM_NO_NUMBA=1`` to force the numpy path (numba missing also falls
back).

Both kernels return ``counts[k, a]``: the number of objects whose shape is
the k-th partition of n (reverse lexicographic order) and whose statistic
(ascents, resp. left-oriented edges) equals a.
"""

from __future__ import annotations

import os

import numpy as np

from .partitions import enumerate_partitions

_DISABLED = os.environ.get("FORESTSYM_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("disabled by FORESTSYM_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


BACKEND = "numba" if HAVE_NUMBA else "numpy"


def _edge_arrays(edges):
    edges = sorted(edges, key=lambda e: (e[1], e[0]))
    us = np.array([u - 1 for u, _ in edges], dtype=np.int64)
    vs = np.array([v - 1 for _, v in edges], dtype=np.int64)
    return us, vs


def _content_codes(n: int):
    """Sorted codes sum_c lam_c (n+1)^c for partitions of n, and their partition indices."""
    parts = enumerate_partitions(n)
    base = n + 1
    codes = np.array(
        [sum(p * base**c for c, p in enumerate(lam)) for lam in parts], dtype=np.int64
    )
    order = np.argsort(codes)
    return codes[order], order.astype(np.int64)


def _multiset_codes(n: int):
    """Sorted codes sum_parts (n+1)^(part-1) for partitions of n, with indices."""
    parts = enumerate_partitions(n)
    base = n + 1
    codes = np.array([sum(base ** (p - 1) for p in lam) for lam in parts], dtype=np.int64)
    order = np.argsort(codes)
    return codes[order], order.astype(np.int64)


# ---------------------------------------------------------------------------
# colorings


@njit(cache=True)
def _coloring_loop(n, us, vs, proper, codes, code_idx, counts):
    ne = us.shape[0]
    kappa = np.zeros(n, dtype=np.int64)
    pw = np.empty(n, dtype=np.int64)
    p = 1
    for c in range(n):
        pw[c] = p
        p *= n + 1
    total = n**n
    for _ in range(total):
        ok = True
        asc = 0
        for e in range(ne):
            a = kappa[us[e]]
            b = kappa[vs[e]]
            if a == b and proper:
                ok = False
                break
            if a < b:
                asc += 1
        if ok:
            code = 0
            for v in range(n):
                code += pw[kappa[v]]
            k = np.searchsorted(codes, code)
            if k < codes.shape[0] and codes[k] == code:
                counts[code_idx[k], asc] += 1
        # odometer increment
        pos = n - 1
        while pos >= 0:
            kappa[pos] += 1
            if kappa[pos] < n:
                break
            kappa[pos] = 0
            pos -= 1


def _coloring_numpy(n, us, vs, proper, codes, code_idx, counts):
    if n == 0:
        counts[0, 0] += 1
        return
    grid = np.indices((n,) * n, dtype=np.int64).reshape(n, -1).T
    keep = np.ones(grid.shape[0], dtype=bool)
    asc = np.zeros(grid.shape[0], dtype=np.int64)
    for u, v in zip(us, vs):
        a, b = grid[:, u], grid[:, v]
        if proper:
            keep &= a != b
        asc += a < b
    pw = (n + 1) ** np.arange(n, dtype=np.int64)
    code = pw[grid].sum(axis=1)
    k = np.searchsorted(codes, code)
    k_clip = np.minimum(k, codes.shape[0] - 1)
    keep &= codes[k_clip] == code
    flat = code_idx[k_clip[keep]] * counts.shape[1] + asc[keep]
    counts += np.bincount(flat, minlength=counts.size).reshape(counts.shape)


def coloring_histogram(n: int, edges, proper: bool, backend: str | None = None) -> np.ndarray:
    """Histogram of colorings [n] -> [n] with partition-shaped content, by ascents."""
    backend = backend or BACKEND
    us, vs = _edge_arrays(edges)
    codes, code_idx = _content_codes(n)
    counts = np.zeros((len(codes), len(us) + 1), dtype=np.int64)
    if n == 0:
        counts[0, 0] = 1
        return counts
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable")
        _coloring_loop(n, us, vs, proper, codes, code_idx, counts)
    else:
        _coloring_numpy(n, us, vs, proper, codes, code_idx, counts)
    return counts


# ---------------------------------------------------------------------------
# orientations


@njit(cache=True)
def _orientation_loop(n, us, vs, codes, code_idx, counts):
    ne = us.shape[0]
    lrv = np.empty(n, dtype=np.int64)
    size = np.empty(n, dtype=np.int64)
    pw = np.empty(n + 1, dtype=np.int64)
    p = 1
    for s in range(n + 1):
        pw[s] = p
        p *= n + 1
    for mask in range(1 << ne):
        for v in range(n):
            lrv[v] = v
            size[v] = 0
        wt = 0
        # edges are sorted by larger endpoint, so lrv[u] is final when used
        for e in range(ne):
            if (mask >> e) & 1:
                wt += 1
                if lrv[us[e]] < lrv[vs[e]]:
                    lrv[vs[e]] = lrv[us[e]]
        for v in range(n):
            size[lrv[v]] += 1
        code = 0
        for r in range(n):
            if size[r] > 0:
                code += pw[size[r] - 1]
        k = np.searchsorted(codes, code)
        counts[code_idx[k], wt] += 1


def _orientation_numpy(n, us, vs, codes, code_idx, counts):
    ne = us.shape[0]
    masks = np.arange(1 << ne, dtype=np.int64)
    lrv = np.tile(np.arange(n, dtype=np.int64), (masks.shape[0], 1))
    wt = np.zeros(masks.shape[0], dtype=np.int64)
    for e in range(ne):
        left = ((masks >> e) & 1).astype(bool)
        wt += left
        cand = np.minimum(lrv[:, vs[e]], lrv[:, us[e]])
        lrv[:, vs[e]] = np.where(left, cand, lrv[:, vs[e]])
    pw = (n + 1) ** np.arange(n + 1, dtype=np.int64)
    code = np.zeros(masks.shape[0], dtype=np.int64)
    for r in range(n):
        s = (lrv == r).sum(axis=1)
        code += np.where(s > 0, pw[np.maximum(s - 1, 0)], 0)
    k = np.searchsorted(codes, code)
    flat = code_idx[k] * counts.shape[1] + wt
    counts += np.bincount(flat, minlength=counts.size).reshape(counts.shape)


def orientation_histogram(n: int, edges, backend: str | None = None) -> np.ndarray:
    """Histogram of orientations by lowest-reaching-vertex fibre shape and left-edge count."""
    backend = backend or BACKEND
    us, vs = _edge_arrays(edges)
    codes, code_idx = _multiset_codes(n)
    counts = np.zeros((len(codes), len(us) + 1), dtype=np.int64)
    if n == 0:
        counts[0, 0] = 1
        return counts
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable")
        _orientation_loop(n, us, vs, codes, code_idx, counts)
    else:
        _orientation_numpy(n, us, vs, codes, code_idx, counts)
    return counts
