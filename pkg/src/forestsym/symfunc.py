"""Degree-n symmetric functions over QPoly in the e, h, p and rho bases.

``rho`` is a formal multiplicative basis: rho_lambda is the product of the
rho_{lambda_i}, each rho_k being defined through its h-expansion.  Symmetric
functions in different bases are never compared term-by-term; use
``convert`` to a common basis or ``monomial_expand`` to the monomial basis.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations

from .coeffs import ONE, ZERO, QPoly, q_integer, reverse_and_scale
from .partitions import (
    compositions,
    enumerate_partitions,
    partition_index,
    sort_to_partition,
)

BASES = ("e", "h", "p", "rho")

__all__ = [
    "BASES",
    "SymFunc",
    "MonomialSym",
    "XQPoly",
    "basis_unit",
    "multiply",
    "rho_to_h",
    "rho_n_alt",
    "rho_n_via_hall_littlewood",
    "hall_littlewood_P",
    "convert",
    "omega",
    "monomial_expand",
    "plethysm_qminus1",
    "specialize_epsilon",
    "formal_determinant",
    "factorial_h_determinant",
    "rho_determinant",
]


def _scalar(c) -> QPoly:
    return c if isinstance(c, QPoly) else QPoly((c,))


def _concat(lam, mu):
    return tuple(sorted(lam + mu, reverse=True))


class SymFunc:
    """Homogeneous symmetric function: a map partition -> QPoly in one basis."""

    __slots__ = ("degree", "basis", "terms")

    def __init__(self, degree: int, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean = {}
        for lam, c in (terms or {}).items():
            lam = tuple(lam)
            if sum(lam) != degree:
                raise ValueError(f"partition {lam} does not have size {degree}")
            c = _scalar(c)
            if c:
                clean[lam] = c
        self.degree = degree
        self.basis = basis
        self.terms = clean

    @classmethod
    def zero(cls, degree: int, basis: str) -> "SymFunc":
        return cls(degree, basis)

    def coeff(self, lam) -> QPoly:
        return self.terms.get(tuple(lam), ZERO)

    def items(self):
        """Terms in the fixed (reverse lexicographic) partition order."""
        order = partition_index(self.degree)
        return sorted(self.terms.items(), key=lambda kv: order[kv[0]])

    def map_coeffs(self, fn) -> "SymFunc":
        return SymFunc(self.degree, self.basis, {lam: fn(c) for lam, c in self.terms.items()})

    def _check_compatible(self, other: "SymFunc"):
        if not isinstance(other, SymFunc):
            raise TypeError(f"expected SymFunc, got {type(other).__name__}")
        if other.basis != self.basis:
            raise ValueError(
                f"basis mismatch ({self.basis} vs {other.basis}); convert to a common basis first"
            )

    def __add__(self, other):
        self._check_compatible(other)
        if other.degree != self.degree:
            raise ValueError("cannot add symmetric functions of different degrees")
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, ZERO) + c
        return SymFunc(self.degree, self.basis, out)

    def __neg__(self):
        return SymFunc(self.degree, self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        c = _scalar(other)
        return SymFunc(self.degree, self.basis, {lam: c * v for lam, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, SymFunc):
            return NotImplemented
        return self * other

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        self._check_compatible(other)
        return self.degree == other.degree and self.terms == other.terms

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [{"partition": list(lam), "coeff": c.to_json()} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymFunc":
        terms = {tuple(t["partition"]): QPoly.from_json(t["coeff"]) for t in data["terms"]}
        return cls(data["degree"], data["basis"], terms)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for lam, c in self.items():
            name = f"{self.basis}_{{{','.join(map(str, lam))}}}"
            pieces.append(f"({c})*{name}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"SymFunc<{self.basis}, deg {self.degree}>[{self}]"


def basis_unit(basis: str, lam) -> SymFunc:
    lam = tuple(lam)
    return SymFunc(sum(lam), basis, {lam: ONE})


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in a multiplicative basis: partitions concatenate."""
    if f.basis != g.basis:
        raise ValueError(f"basis mismatch ({f.basis} vs {g.basis})")
    out: dict = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            key = _concat(lam, mu)
            out[key] = out.get(key, ZERO) + a * b
    return SymFunc(f.degree + g.degree, f.basis, out)


# ---------------------------------------------------------------------------
# single generators expanded in another basis

@lru_cache(maxsize=None)
def _h_in_p(n: int) -> SymFunc:
    # n h_n = sum_{i=1}^n p_i h_{n-i}
    if n == 0:
        return basis_unit("p", ())
    acc = SymFunc.zero(n, "p")
    for i in range(1, n + 1):
        acc = acc + multiply(basis_unit("p", (i,)), _h_in_p(n - i))
    return acc * Fraction(1, n)


@lru_cache(maxsize=None)
def _e_in_p(n: int) -> SymFunc:
    # n e_n = sum_{i=1}^n (-1)^{i-1} p_i e_{n-i}
    if n == 0:
        return basis_unit("p", ())
    acc = SymFunc.zero(n, "p")
    for i in range(1, n + 1):
        term = multiply(basis_unit("p", (i,)), _e_in_p(n - i))
        acc = acc + (term if i % 2 else -term)
    return acc * Fraction(1, n)


@lru_cache(maxsize=None)
def _p_in_h(n: int) -> SymFunc:
    # the h-recurrence solved for p_n
    acc = basis_unit("h", (n,)) * n
    for i in range(1, n):
        acc = acc - multiply(_p_in_h(i), basis_unit("h", (n - i,)))
    return acc


@lru_cache(maxsize=None)
def _p_in_e(n: int) -> SymFunc:
    # (-1)^{n-1} p_n = n e_n - sum_{i=1}^{n-1} (-1)^{i-1} p_i e_{n-i}
    acc = basis_unit("e", (n,)) * n
    for i in range(1, n):
        term = multiply(_p_in_e(i), basis_unit("e", (n - i,)))
        acc = acc - (term if i % 2 else -term)
    return acc if n % 2 else -acc


@lru_cache(maxsize=None)
def _rho_in_h(n: int) -> SymFunc:
    # [n]_q h_n = sum_{i=1}^n h_{n-i} rho_i
    acc = basis_unit("h", (n,)) * q_integer(n)
    for i in range(1, n):
        acc = acc - multiply(_rho_in_h(i), basis_unit("h", (n - i,)))
    return acc


_GENERATORS = {
    ("h", "p"): _h_in_p,
    ("e", "p"): _e_in_p,
    ("p", "h"): _p_in_h,
    ("p", "e"): _p_in_e,
    ("rho", "h"): _rho_in_h,
}

# routes for pairs without a direct generator expansion
_ROUTES = {
    ("e", "h"): "p",
    ("h", "e"): "p",
    ("rho", "p"): "h",
    ("rho", "e"): "h",
}

_cache_lock = threading.Lock()
_element_cache: dict = {}


def _element_in(src: str, lam: tuple, dst: str) -> SymFunc:
    key = (src, lam, dst)
    hit = _element_cache.get(key)
    if hit is not None:
        return hit
    gen = _GENERATORS[(src, dst)]
    acc = basis_unit(dst, ())
    for part in lam:
        acc = multiply(acc, gen(part))
    with _cache_lock:
        return _element_cache.setdefault(key, acc)


def convert(f: SymFunc, target: str) -> SymFunc:
    """Exact change of basis; target must be one of e, h, p."""
    if target not in ("e", "h", "p"):
        raise ValueError(f"conversion into {target!r} is not supported")
    if f.basis == target:
        return f
    pair = (f.basis, target)
    if pair in _ROUTES:
        return convert(convert(f, _ROUTES[pair]), target)
    out = SymFunc.zero(f.degree, target)
    for lam, c in f.terms.items():
        out = out + _element_in(f.basis, lam, target) * c
    return out


def rho_to_h(f: SymFunc) -> SymFunc:
    if f.basis != "rho":
        raise ValueError("rho_to_h expects a rho-basis symmetric function")
    return convert(f, "h")


def rho_n_alt(n: int) -> SymFunc:
    """rho_n as a signed sum over compositions of n."""
    if n < 1:
        raise ValueError("n must be positive")
    acc = SymFunc.zero(n, "h")
    for alpha in compositions(n):
        sign = 1 if len(alpha) % 2 else -1
        acc = acc + basis_unit("h", sort_to_partition(alpha)) * (q_integer(alpha[0]) * sign)
    return acc


def _hook_schur_in_h(a: int, b: int) -> SymFunc:
    # s_{(a,1^b)} = sum_{j=0}^{b} (-1)^j h_{a+j} e_{b-j}
    acc = SymFunc.zero(a + b, "h")
    for j in range(b + 1):
        term = multiply(basis_unit("h", (a + j,)), convert(basis_unit("e", (b - j,)), "h"))
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def hall_littlewood_P(n: int) -> SymFunc:
    """P_n(q) = sum_{r<n} (-q)^r s_{(n-r,1^r)}, in the h basis."""
    acc = SymFunc.zero(n, "h")
    for r in range(n):
        acc = acc + _hook_schur_in_h(n - r, r) * QPoly.monomial(r, (-1) ** r)
    return acc


def rho_n_via_hall_littlewood(n: int) -> SymFunc:
    if n < 1:
        raise ValueError("n must be positive")
    return hall_littlewood_P(n).map_coeffs(lambda c: reverse_and_scale(c, n - 1))


def omega(f: SymFunc) -> SymFunc:
    if f.basis == "e":
        return SymFunc(f.degree, "h", f.terms)
    if f.basis == "h":
        return SymFunc(f.degree, "e", f.terms)
    if f.basis == "p":
        return SymFunc(
            f.degree,
            "p",
            {lam: (c if (sum(lam) - len(lam)) % 2 == 0 else -c) for lam, c in f.terms.items()},
        )
    raise ValueError("omega is defined here on the e, h and p bases; convert rho first")


def plethysm_qminus1(f: SymFunc) -> SymFunc:
    """f[(q-1)X]: each p_k picks up a factor q^k - 1."""
    if f.basis != "p":
        raise ValueError("plethysm needs the p basis")
    out = {}
    for lam, c in f.terms.items():
        for part in lam:
            c = c * (QPoly.monomial(part) - 1)
        out[lam] = c
    return SymFunc(f.degree, "p", out)


class XQPoly:
    """Polynomial in x with QPoly coefficients (images of the specialization p_n -> x)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [_scalar(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    def __eq__(self, other):
        if not isinstance(other, XQPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def evaluate(self, x, q=None):
        """Value at x; coefficients are evaluated at q when given."""
        acc = ZERO if q is None else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + (c if q is None else c(q))
        return acc

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    def __repr__(self):
        return "XQPoly(" + ", ".join(f"x^{k}: {c}" for k, c in enumerate(self.coeffs)) + ")"


def specialize_epsilon(f: SymFunc) -> XQPoly:
    if f.basis != "p":
        raise ValueError("specialization needs the p basis")
    out = [ZERO] * (f.degree + 1)
    for lam, c in f.terms.items():
        out[len(lam)] = out[len(lam)] + c
    return XQPoly(out)


# ---------------------------------------------------------------------------
# monomial expansion in exactly n variables


def _poly_mul(a: dict, b: dict, maxdeg: int) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if sum(e) <= maxdeg:
                out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _unit_vec(idx, nvars):
    v = [0] * nvars
    for i in idx:
        v[i] += 1
    return tuple(v)


@lru_cache(maxsize=None)
def _generator_poly(basis: str, k: int, nvars: int) -> dict:
    if k == 0:
        return {(0,) * nvars: 1}
    if basis == "e":
        return {_unit_vec(c, nvars): 1 for c in combinations(range(nvars), k)}
    if basis == "h":
        return {_unit_vec(c, nvars): 1 for c in combinations_with_replacement(range(nvars), k)}
    if basis == "p":
        return {_unit_vec((i,) * k, nvars): 1 for i in range(nvars)}
    raise ValueError(f"no explicit generator for basis {basis!r}")


_monomial_rows: dict = {}


def _monomial_row(basis: str, lam: tuple, nvars: int) -> dict:
    key = (basis, lam, nvars)
    hit = _monomial_rows.get(key)
    if hit is not None:
        return hit
    n = sum(lam)
    poly = {(0,) * nvars: 1}
    for part in lam:
        poly = _poly_mul(poly, _generator_poly(basis, part, nvars), n)
    row = {}
    for mu in enumerate_partitions(n):
        if len(mu) > nvars:
            continue
        e = tuple(mu) + (0,) * (nvars - len(mu))
        c = poly.get(e, 0)
        if c:
            row[mu] = c
    with _cache_lock:
        return _monomial_rows.setdefault(key, row)


class MonomialSym:
    """Symmetric polynomial of degree n in n variables, in the monomial basis."""

    __slots__ = ("degree", "nvars", "terms")

    def __init__(self, degree: int, terms=None, nvars: int | None = None):
        self.degree = degree
        self.nvars = degree if nvars is None else nvars
        clean = {}
        for lam, c in (terms or {}).items():
            lam = tuple(lam)
            if sum(lam) != degree or len(lam) > self.nvars:
                raise ValueError(f"invalid monomial index {lam} for degree {degree}")
            c = _scalar(c)
            if c:
                clean[lam] = c
        self.terms = clean

    def coeff(self, lam) -> QPoly:
        return self.terms.get(tuple(lam), ZERO)

    def items(self):
        order = partition_index(self.degree)
        return sorted(self.terms.items(), key=lambda kv: order[kv[0]])

    def map_coeffs(self, fn) -> "MonomialSym":
        return MonomialSym(self.degree, {k: fn(c) for k, c in self.terms.items()}, self.nvars)

    def __eq__(self, other):
        if not isinstance(other, MonomialSym):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return MonomialSym(self.degree, out, self.nvars)

    def __neg__(self):
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MonomialSym):
            c = _scalar(other)
            return self.map_coeffs(lambda v: v * c)
        # multiply explicit polynomials in the combined number of variables
        n = self.degree + other.degree
        a, b = self._explicit(n), other._explicit(n)
        prod: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                if list(e) == sorted(e, reverse=True):
                    prod[e] = prod.get(e, ZERO) + ca * cb
        terms = {tuple(x for x in e if x): c for e, c in prod.items()}
        return MonomialSym(n, terms)

    __rmul__ = __mul__

    def _explicit(self, nvars: int) -> dict:
        out = {}
        for lam, c in self.terms.items():
            padded = tuple(lam) + (0,) * (nvars - len(lam))
            for e in set(permutations(padded)):
                out[e] = c
        return out

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": "m",
            "terms": [{"partition": list(lam), "coeff": c.to_json()} for lam, c in self.items()],
        }

    def __repr__(self):
        return "MonomialSym(" + " + ".join(f"({c})m{list(lam)}" for lam, c in self.items()) + ")"


def monomial_expand(f: SymFunc) -> MonomialSym:
    """Expand f in the monomial basis using exactly ``f.degree`` variables."""
    if f.basis not in ("e", "h", "p"):
        raise ValueError("monomial expansion needs the e, h or p basis")
    n = f.degree
    out: dict = {}
    for lam, c in f.terms.items():
        for mu, k in _monomial_row(f.basis, lam, n).items():
            out[mu] = out.get(mu, ZERO) + c * k
    return MonomialSym(n, out)


# ---------------------------------------------------------------------------
# formal determinants over a multiplicative basis


def _gmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for lam, x in a.items():
        for mu, y in b.items():
            key = _concat(lam, mu)
            out[key] = out.get(key, ZERO) + x * y
    return {k: v for k, v in out.items() if v}


def _gadd(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, ZERO) + (v if sign > 0 else -v)
    return {k: v for k, v in out.items() if v}


def formal_determinant(matrix) -> dict:
    """Laplace expansion of a square matrix whose entries are graded elements.

    An entry is a dict partition -> QPoly (mixed degrees allowed, the empty
    partition carries scalars).  Returns the determinant in the same form.
    """
    size = len(matrix)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple) -> tuple:
        if row == size:
            return (((), ONE),)
        acc: dict = {}
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if not entry:
                continue
            sub = dict(minor(row + 1, cols[:pos] + cols[pos + 1:]))
            if not sub:
                continue
            acc = _gadd(acc, _gmul(entry, sub), 1 if pos % 2 == 0 else -1)
        return tuple(acc.items())

    return dict(minor(0, tuple(range(size))))


def _homogeneous(graded: dict, basis: str, degree: int) -> SymFunc:
    return SymFunc(degree, basis, graded)


def factorial_h_determinant(n: int) -> SymFunc:
    """Determinant in rho_1..rho_n with subdiagonal -[r]_q (should equal n!_q h_n)."""
    mat = []
    for r in range(n):
        row = []
        for c in range(n):
            if r == 0 or c >= r:
                row.append({(c - r + 1,): ONE})
            elif c == r - 1:
                row.append({(): -q_integer(r)})
            else:
                row.append({})
        mat.append(row)
    return _homogeneous(formal_determinant(mat), "rho", n)


def rho_determinant(n: int) -> SymFunc:
    """Determinant with first row [k]_q h_k and unit subdiagonal, in the h basis."""
    mat = []
    for r in range(n):
        row = []
        for c in range(n):
            if r == 0:
                row.append({(c + 1,): q_integer(c + 1)})
            elif c >= r:
                row.append({(c - r + 1,): ONE})
            elif c == r - 1:
                row.append({(): ONE})
            else:
                row.append({})
        mat.append(row)
    return _homogeneous(formal_determinant(mat), "h", n)
