"""Exact univariate polynomials in q over the rationals, and q-analog scalars.

All coefficient rings in the package are QPoly.  Values are immutable; every
operation returns a new polynomial in canonical form (no trailing zeros, zero
is the empty tuple).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational

__all__ = [
    "QPoly",
    "InexactDivision",
    "q_integer",
    "q_factorial",
    "q_binomial",
    "shift_q_plus_one",
    "reverse_and_scale",
    "exact_divide",
    "is_nonneg_integer_coeffs",
]


class InexactDivision(ArithmeticError):
    """Raised when a claimed polynomial divisibility fails."""

    def __init__(self, dividend, divisor, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{divisor} does not divide {dividend}: remainder {remainder}")


def _trim(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    """Polynomial in q; ``coeffs[i]`` is the coefficient of q**i."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        self.coeffs = _trim([c if type(c) is Fraction else Fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "QPoly":
        # caller guarantees Fraction entries and canonical form
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "QPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == _trim([Fraction(other)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    @staticmethod
    def _coerce(other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Rational)):
            return QPoly((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return QPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                return ZERO
            f = Fraction(other)
            return QPoly._raw(tuple(c * f for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Evaluate at x by Horner's rule (exact for exact x)."""
        acc = Fraction(0) if not isinstance(x, QPoly) else ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, d: "QPoly") -> tuple["QPoly", "QPoly"]:
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dc = d.coeffs
        lead = dc[-1]
        if len(rem) < len(dc):
            return ZERO, self
        quot = [Fraction(0)] * (len(rem) - len(dc) + 1)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(dc) - 1] / lead
            quot[k] = c
            if c:
                for j, y in enumerate(dc):
                    rem[k + j] -= c * y
        return QPoly._raw(_trim(quot)), QPoly._raw(_trim(rem[: len(dc) - 1]))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "QPoly":
        return cls(Fraction(s) for s in data)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "q" if i == 1 else f"q^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"QPoly({str(self)!r})"


ZERO = QPoly._raw(())
ONE = QPoly._raw((Fraction(1),))
Q = QPoly._raw((Fraction(0), Fraction(1)))


@lru_cache(maxsize=None)
def q_integer(j: int) -> QPoly:
    """[j]_q = 1 + q + ... + q^(j-1)."""
    if j < 0:
        raise ValueError("q_integer needs j >= 0")
    return QPoly._raw(tuple(Fraction(1) for _ in range(j)))


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    return ONE if n == 0 else q_factorial(n - 1) * q_integer(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial via the Pascal rule C(n,k) = C(n-1,k-1) + q^k C(n-1,k)."""
    if k < 0 or k > n or n < 0:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + QPoly.monomial(k) * q_binomial(n - 1, k)


def shift_q_plus_one(p: QPoly) -> QPoly:
    """p(q+1) expanded in q."""
    out = [Fraction(0)] * len(p.coeffs)
    for i, c in enumerate(p.coeffs):
        if c:
            for k in range(i + 1):
                out[k] += c * comb(i, k)
    return QPoly._raw(_trim(out))


def reverse_and_scale(p: QPoly, n: int) -> QPoly:
    """q^n * p(1/q); requires deg p <= n."""
    if p.degree > n:
        raise ValueError(f"degree {p.degree} exceeds {n}; q^{n} p(1/q) is not a polynomial")
    padded = list(p.coeffs) + [Fraction(0)] * (n + 1 - len(p.coeffs))
    return QPoly._raw(_trim(padded[::-1]))


def exact_divide(p: QPoly, d: QPoly) -> QPoly:
    quot, rem = p.divmod(d)
    if rem:
        raise InexactDivision(p, d, rem)
    return quot


def is_nonneg_integer_coeffs(p: QPoly) -> bool:
    return all(c.denominator == 1 and c >= 0 for c in p.coeffs)
