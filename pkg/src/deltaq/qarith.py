"""
Exact scalars: Laurent polynomials in q with rational coefficients, together
with the usual q-analogs (q-integers, q-binomials, q-multinomials) and
Pochhammer symbols (q^a; q)_k.

Coefficients are ``int`` whenever they are integral and ``fractions.Fraction``
otherwise, so the common all-integer case runs at machine-int speed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import DegreeOverflowError, InexactDivisionError

Scalar = Union[int, Fraction]


def _norm(c) -> Scalar:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"coefficient must be an exact rational, got {type(c).__name__}")


def _parse_rational(text: str) -> Scalar:
    return _norm(Fraction(text))


def _format_rational(c: Scalar) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


class QLaurent:
    """
    A Laurent polynomial in q with exact rational coefficients.

    Stored densely as a lowest exponent plus a tuple of coefficients with no
    zeros at either end. Instances are immutable and hashable.
    """

    __slots__ = ("_lo", "_c", "_hash")

    def __init__(self, terms: Union[Mapping[int, Scalar], Scalar, None] = None):
        if terms is None:
            self._set(0, [])
        elif isinstance(terms, Mapping):
            items = [(int(e), _norm(c)) for e, c in terms.items()]
            items = [(e, c) for e, c in items if c != 0]
            if not items:
                self._set(0, [])
                return
            lo = min(e for e, _ in items)
            hi = max(e for e, _ in items)
            dense = [0] * (hi - lo + 1)
            for e, c in items:
                dense[e - lo] += c
            self._set(lo, dense)
        else:
            self._set(0, [_norm(terms)])

    @classmethod
    def _dense(cls, lo: int, coeffs) -> "QLaurent":
        obj = cls.__new__(cls)
        obj._set(lo, coeffs)
        return obj

    def _set(self, lo: int, coeffs) -> None:
        coeffs = list(coeffs)
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        if start == end:
            self._lo, self._c = 0, ()
        else:
            self._lo = lo + start
            self._c = tuple(_norm(c) for c in coeffs[start:end])
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> "QLaurent":
        return cls._dense(exponent, [coeff])

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], lo: int = 0) -> "QLaurent":
        """Build from a dense coefficient list starting at exponent ``lo``."""
        return cls._dense(lo, coeffs)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        return {self._lo + i: c for i, c in enumerate(self._c) if c != 0}

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def degree(self) -> int:
        """Largest exponent present; raises on the zero polynomial."""
        if not self._c:
            raise ValueError("degree of the zero polynomial is undefined")
        return self._lo + len(self._c) - 1

    @property
    def low_degree(self) -> int:
        if not self._c:
            raise ValueError("low degree of the zero polynomial is undefined")
        return self._lo

    def coeff(self, exponent: int) -> Scalar:
        i = exponent - self._lo
        if 0 <= i < len(self._c):
            return self._c[i]
        return 0

    def is_polynomial(self) -> bool:
        return not self._c or self._lo >= 0

    def has_nonnegative_integer_coeffs(self) -> bool:
        return all(isinstance(c, int) and c >= 0 for c in self._c)

    def is_palindromic(self) -> bool:
        return self._c == self._c[::-1]

    def evaluate(self, value) -> Scalar:
        """Exact evaluation at a rational ``value`` (nonzero if exponents are negative)."""
        value = _norm(value)
        total: Scalar = 0
        for c in reversed(self._c):
            total = total * value + c
        if self._lo:
            total = total * Fraction(value) ** self._lo
        return _norm(total)

    def at_one(self) -> Scalar:
        return _norm(sum(self._c))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "QLaurent":
        if isinstance(other, QLaurent):
            return other
        return QLaurent(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        lo = min(self._lo, other._lo)
        hi = max(self._lo + len(self._c), other._lo + len(other._c))
        out = [0] * (hi - lo)
        for i, c in enumerate(self._c, self._lo - lo):
            out[i] = c
        for i, c in enumerate(other._c, other._lo - lo):
            out[i] += c
        return QLaurent._dense(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent._dense(self._lo, [-c for c in self._c])

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QLaurent):
            try:
                c = _norm(other)
            except TypeError:
                return NotImplemented
            if c == 0:
                return ZERO
            return QLaurent._dense(self._lo, [x * c for x in self._c])
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, y in enumerate(b):
            if y:
                for i, x in enumerate(a, j):
                    out[i] += x * y
        return QLaurent._dense(self._lo + other._lo, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, d: int) -> "QLaurent":
        """Multiply by q^d."""
        if not self._c:
            return self
        return QLaurent._dense(self._lo + d, self._c)

    def exact_div(self, other: "QLaurent") -> "QLaurent":
        """
        Quotient ``self / other``; raises InexactDivisionError unless the
        quotient is itself a Laurent polynomial.
        """
        other = self._coerce(other)
        if not other._c:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self._c:
            return ZERO
        num = [Fraction(c) for c in self._c]
        den = other._c
        lead = Fraction(den[-1])
        qlen = len(num) - len(den) + 1
        if qlen <= 0:
            raise InexactDivisionError(f"{self!r} is not divisible by {other!r}")
        quot = [Fraction(0)] * qlen
        for i in range(qlen - 1, -1, -1):
            c = num[i + len(den) - 1] / lead
            quot[i] = c
            if c:
                for j, d in enumerate(den):
                    num[i + j] -= c * d
        if any(num[: len(den) - 1]):
            raise InexactDivisionError(f"{self!r} is not divisible by {other!r}")
        return QLaurent._dense(self._lo - other._lo, quot)

    def reverse(self, d: int) -> "QLaurent":
        return reverse_coeffs(self, d)

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QLaurent):
            return self._lo == other._lo and self._c == other._c
        try:
            other = QLaurent(other)
        except TypeError:
            return NotImplemented
        return self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._lo, self._c))
        return self._hash

    def __repr__(self):
        return f"QLaurent({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in self.terms.items():
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            else:
                mono = f"q^{e}"
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                body = f"{c}*{mono}" if isinstance(c, Fraction) else f"{c}{mono}"
            parts.append(body)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    # -- JSON ----------------------------------------------------------------

    def to_json(self) -> list:
        return [[e, _format_rational(c)] for e, c in self.terms.items()]

    @classmethod
    def from_json(cls, data) -> "QLaurent":
        terms: dict = {}
        last = None
        for pair in data:
            e, c = pair
            if not isinstance(e, int) or (last is not None and e <= last):
                raise ValueError("QLaurent JSON exponents must be strictly ascending integers")
            last = e
            terms[e] = _parse_rational(c)
        return cls(terms)


ZERO = QLaurent._dense(0, [])
ONE = QLaurent._dense(0, [1])
Q = QLaurent._dense(1, [1])


def reverse_coeffs(f: QLaurent, d: int) -> QLaurent:
    """Return q^d * f(1/q); ``d`` must be at least the degree of ``f``."""
    if f.is_zero():
        return f
    if f.degree > d:
        raise DegreeOverflowError(f"degree {f.degree} of {f} exceeds reversal degree {d}")
    return QLaurent._dense(d - f.degree, f._c[::-1])


# -- q-analogs ------------------------------------------------------------


@lru_cache(maxsize=None)
def q_int(n: int) -> QLaurent:
    if n < 0:
        raise ValueError(f"q_int needs n >= 0, got {n}")
    return QLaurent._dense(0, [1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QLaurent:
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    result = ONE
    for i in range(2, n + 1):
        result = result * q_int(i)
    return result


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QLaurent:
    # Exact division on purpose: a remainder would expose an arithmetic bug.
    if n < 0:
        raise ValueError(f"q_binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return ZERO
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


def q_multinomial(parts: Iterable[int]) -> QLaurent:
    parts = tuple(parts)
    return _q_multinomial(tuple(sorted(parts)))


@lru_cache(maxsize=None)
def _q_multinomial(parts: tuple) -> QLaurent:
    if any(p < 0 for p in parts):
        raise ValueError(f"q_multinomial needs nonnegative parts, got {parts}")
    den = ONE
    for p in parts:
        den = den * q_factorial(p)
    return q_factorial(sum(parts)).exact_div(den)


@lru_cache(maxsize=None)
def pochhammer(a: int, k: int) -> QLaurent:
    """(q^a; q)_k = prod_{i<k} (1 - q^{a+i})."""
    if k < 0:
        raise ValueError(f"pochhammer needs k >= 0, got {k}")
    result = ONE
    for i in range(k):
        e = a + i
        if e == 0:
            return ZERO
        result = result * (ONE - QLaurent.monomial(e))
    return result


def binom2(n: int) -> int:
    """Ordinary C(n, 2), valid for every integer n."""
    return n * (n - 1) // 2
