"""
Homogeneous symmetric functions with QLaurent coefficients, kept in the
Schur basis, plus the two-alphabet tables used for S_m x S_n Frobenius
images.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Optional

from .errors import DegreeOverflowError, SizeMismatchError
from .partitions import (
    EMPTY,
    Partition,
    conjugate,
    enumerate_partitions,
    vertical_strip_additions,
    vertical_strip_removals,
    weak_compositions,
)
from .qarith import ONE, ZERO, QLaurent, reverse_coeffs
from .tableaux import kostka_foulkes, kostka_number


class SymFunc:
    """
    A homogeneous symmetric function of a fixed degree, stored as a map from
    partitions to nonzero Schur coefficients.
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Optional[Mapping] = None):
        self.degree = degree
        clean = {}
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            if lam.size != degree:
                raise SizeMismatchError(f"s_{list(lam)} does not have degree {degree}")
            c = c if isinstance(c, QLaurent) else QLaurent(c)
            if c:
                clean[lam] = clean[lam] + c if lam in clean else c
        self._terms = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def schur(cls, lam: Iterable[int], coeff=ONE) -> "SymFunc":
        lam = Partition(lam)
        return cls(lam.size, {lam: coeff})

    @classmethod
    def zero(cls, degree: int) -> "SymFunc":
        return cls(degree)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in descending-lex partition order."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, lam: Iterable[int]) -> QLaurent:
        return self._terms.get(Partition(lam), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other: "SymFunc"):
        if not isinstance(other, SymFunc):
            raise TypeError("expected a SymFunc")
        if other.degree != self.degree and self._terms and other._terms:
            raise SizeMismatchError(f"degrees {self.degree} and {other.degree} differ")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for lam, c in other._terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymFunc(self.degree, out)

    def __neg__(self):
        return SymFunc(self.degree, {lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, scalar) -> "SymFunc":
        if isinstance(scalar, SymFunc):
            return NotImplemented
        return SymFunc(self.degree, {lam: c * scalar for lam, c in self._terms.items()})

    __rmul__ = __mul__

    def shift(self, d: int) -> "SymFunc":
        """Multiply every coefficient by q^d."""
        return SymFunc(self.degree, {lam: c.shift(d) for lam, c in self._terms.items()})

    def map_coeffs(self, fn) -> "SymFunc":
        return SymFunc(self.degree, {lam: fn(c) for lam, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        return hash((self.degree, frozenset(self._terms.items())))

    def q_degree(self) -> int:
        """Largest q-exponent over all coefficients."""
        return max(c.degree for c in self._terms.values())

    def q_low_degree(self) -> int:
        return min(c.low_degree for c in self._terms.values())

    def is_schur_positive(self) -> bool:
        """Every coefficient lies in Z_{>=0}[q]."""
        return all(c.is_polynomial() and c.has_nonnegative_integer_coeffs()
                   for c in self._terms.values())

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for lam, c in self.items():
            name = "s" + str(tuple(lam)).replace(",)", ")").replace(" ", "")
            parts.append(name if c == ONE else f"({c})*{name}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "basis": "schur",
            "degree": self.degree,
            "terms": [{"mu": list(lam), "coeff": c.to_json()} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        if data.get("basis") != "schur":
            raise ValueError("only the schur basis is supported")
        return cls(data["degree"], {Partition(t["mu"]): QLaurent.from_json(t["coeff"])
                                    for t in data["terms"]})


def omega(f: SymFunc) -> SymFunc:
    return SymFunc(f.degree, {conjugate(lam): c for lam, c in f.terms.items()})


def hall_inner(f: SymFunc, g: SymFunc) -> QLaurent:
    if f.degree != g.degree:
        raise SizeMismatchError(f"degrees {f.degree} and {g.degree} differ")
    total = ZERO
    for lam, c in f.terms.items():
        d = g.terms.get(lam)
        if d is not None:
            total = total + c * d
    return total


def e_multiply(j: int, f: SymFunc) -> SymFunc:
    out: dict = {}
    for mu, c in f.terms.items():
        for lam in vertical_strip_additions(mu, j):
            out[lam] = out[lam] + c if lam in out else c
    return SymFunc(f.degree + j, out)


def e_perp(j: int, f: SymFunc) -> SymFunc:
    out: dict = {}
    for lam, c in f.terms.items():
        for mu in vertical_strip_removals(lam, j):
            out[mu] = out[mu] + c if mu in out else c
    return SymFunc(max(f.degree - j, 0), out)


def elementary(j: int) -> SymFunc:
    return SymFunc.schur([1] * j)


def complete(j: int) -> SymFunc:
    return SymFunc.schur([j] if j else [])


def e_product(alpha: Iterable[int]) -> SymFunc:
    """Schur expansion of e_{alpha_1} ... e_{alpha_p} via iterated dual Pieri."""
    f = SymFunc.schur(EMPTY)
    for a in alpha:
        f = e_multiply(a, f)
    return f


@lru_cache(maxsize=None)
def qprime(mu: Iterable[int]) -> SymFunc:
    """Dual Hall-Littlewood Q'_mu = sum_lam K_{lam,mu}(q) s_lam."""
    mu = Partition(mu)
    n = mu.size
    return SymFunc(n, {lam: kostka_foulkes(lam, mu) for lam in enumerate_partitions(n)})


def rev_q_sym(f: SymFunc, d: int) -> SymFunc:
    """Apply q^d * c(1/q) to every coefficient c of f."""
    out = {}
    for lam, c in f.terms.items():
        if not c.is_polynomial():
            raise DegreeOverflowError(f"coefficient of s_{list(lam)} has negative exponents: {c}")
        try:
            out[lam] = reverse_coeffs(c, d)
        except DegreeOverflowError as exc:
            raise DegreeOverflowError(f"coefficient of s_{list(lam)}: {exc}") from None
    return SymFunc(f.degree, out)


def expand_in_vars(f: SymFunc, N: int) -> dict:
    """
    Monomial coefficient table of f(x_1, ..., x_N), keyed by weak compositions
    of the degree into N parts. Zero entries are omitted.
    """
    table = {}
    sorted_coeffs: dict = {}
    for comp in weak_compositions(f.degree, N):
        key = tuple(sorted((a for a in comp if a), reverse=True))
        if key not in sorted_coeffs:
            total = ZERO
            for lam, c in f.terms.items():
                if len(lam) <= N:
                    k = kostka_number(lam, key)
                    if k:
                        total = total + c * k
            sorted_coeffs[key] = total
        if sorted_coeffs[key]:
            table[comp] = sorted_coeffs[key]
    return table


class BiSymFunc:
    """
    An element of Lambda(y) (x) Lambda(x) of bidegree (ydegree, xdegree),
    stored as a map (y-partition, x-partition) -> coefficient.
    """

    __slots__ = ("ydegree", "xdegree", "_terms")

    def __init__(self, ydegree: int, xdegree: int, terms: Optional[Mapping] = None):
        self.ydegree = ydegree
        self.xdegree = xdegree
        clean: dict = {}
        for (nu, mu), c in (terms or {}).items():
            nu, mu = Partition(nu), Partition(mu)
            if nu.size != ydegree or mu.size != xdegree:
                raise SizeMismatchError(f"term {list(nu)}, {list(mu)} has the wrong bidegree")
            clean[(nu, mu)] = clean[(nu, mu)] + c if (nu, mu) in clean else c
        self._terms = {k: c for k, c in clean.items() if c}

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "BiSymFunc") -> "BiSymFunc":
        if not other._terms:
            return self
        if not self._terms:
            return other
        if (self.ydegree, self.xdegree) != (other.ydegree, other.xdegree):
            raise SizeMismatchError("bidegrees differ")
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return BiSymFunc(self.ydegree, self.xdegree, out)

    def __mul__(self, scalar) -> "BiSymFunc":
        return BiSymFunc(self.ydegree, self.xdegree,
                         {k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def shift(self, d: int) -> "BiSymFunc":
        return BiSymFunc(self.ydegree, self.xdegree,
                         {k: c.shift(d) for k, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, BiSymFunc):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return ((self.ydegree, self.xdegree) == (other.ydegree, other.xdegree)
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.ydegree, self.xdegree, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*s{tuple(nu)}(y)s{tuple(mu)}(x)" for (nu, mu), c in self.items())

    def to_json(self) -> dict:
        return {
            "basis": "schur",
            "ydegree": self.ydegree,
            "xdegree": self.xdegree,
            "terms": [{"ynu": list(nu), "xmu": list(mu), "coeff": c.to_json()}
                      for (nu, mu), c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "BiSymFunc":
        return cls(data["ydegree"], data["xdegree"],
                   {(Partition(t["ynu"]), Partition(t["xmu"])): QLaurent.from_json(t["coeff"])
                    for t in data["terms"]})


def bisym_product(fy: SymFunc, fx: SymFunc) -> BiSymFunc:
    out = {}
    for nu, c in fy.terms.items():
        for mu, d in fx.terms.items():
            out[(nu, mu)] = c * d
    return BiSymFunc(fy.degree, fx.degree, out)


def bisym_y_coefficient(F: BiSymFunc, nu: Iterable[int]) -> SymFunc:
    nu = Partition(nu)
    if nu.size != F.ydegree:
        raise SizeMismatchError(f"|nu| = {nu.size} but the y-degree is {F.ydegree}")
    return SymFunc(F.xdegree, {mu: c for (n, mu), c in F.terms.items() if n == nu})
