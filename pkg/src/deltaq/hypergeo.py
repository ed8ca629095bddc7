"""
Terminating 3phi2 series at integer powers of q, evaluated exactly as
quotients of Laurent polynomials, and the two q-series identities that feed
the e_j^perp recursion for Delta'_{e_{k-1}} e_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from .errors import RangeError, VanishingDenominatorError
from .qarith import ONE, ZERO, QLaurent, binom2, pochhammer, q_binomial


class QRatFunc:
    """numerator / denominator; equality is decided by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = num if isinstance(num, QLaurent) else QLaurent(num)
        den = den if isinstance(den, QLaurent) else QLaurent(den)
        if den.is_zero():
            raise VanishingDenominatorError("zero denominator")
        self.num = num
        self.den = den

    def __add__(self, other):
        other = other if isinstance(other, QRatFunc) else QRatFunc(other)
        if self.den == other.den:
            return QRatFunc(self.num + other.num, self.den)
        return QRatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        other = other if isinstance(other, QRatFunc) else QRatFunc(other)
        return QRatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = other if isinstance(other, QRatFunc) else QRatFunc(other)
        if other.num.is_zero():
            raise VanishingDenominatorError("division by zero rational function")
        return QRatFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if not isinstance(other, QRatFunc):
            try:
                other = QRatFunc(other)
            except TypeError:
                return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __repr__(self):
        return f"QRatFunc(({self.num}) / ({self.den}))"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "QRatFunc":
        return cls(QLaurent.from_json(data["num"]), QLaurent.from_json(data["den"]))


def phi32(a1: int, a2: int, a3: int, b1: int, b2: int, zexp: int, j: int) -> QRatFunc:
    """
    Terminating 3phi2(q^a1, q^a2, q^a3; q^b1, q^b2; q, q^zexp) with a1 = -j.

    All terms are put over the common denominator
    (q^b1)_j (q^b2)_j (q;q)_j; the n-th term's cofactor is the tail
    (q^{b1+n})_{j-n} (q^{b2+n})_{j-n} (q^{1+n})_{j-n}.
    """
    if j < 0 or a1 != -j:
        raise RangeError(f"phi32 needs a1 = -j with j >= 0, got a1={a1}, j={j}")
    for b in (b1, b2):
        if pochhammer(b, j).is_zero():
            n = next(n for n in range(1, j + 1) if pochhammer(b, n).is_zero())
            raise VanishingDenominatorError(f"(q^{b}; q)_{n} vanishes")
    den = pochhammer(b1, j) * pochhammer(b2, j) * pochhammer(1, j)
    num = ZERO
    for n in range(j + 1):
        top = pochhammer(a1, n) * pochhammer(a2, n) * pochhammer(a3, n)
        if top.is_zero():
            continue
        tail = pochhammer(b1 + n, j - n) * pochhammer(b2 + n, j - n) * pochhammer(1 + n, j - n)
        num = num + (top * tail).shift(zexp * n)
    return QRatFunc(num, den)


def phi32_bruteforce(a1, a2, a3, b1, b2, zexp, j) -> QRatFunc:
    """Term-by-term sum of rational functions; an independent check on phi32."""
    total = QRatFunc(ZERO)
    for n in range(j + 1):
        term = QRatFunc(pochhammer(a1, n) * pochhammer(a2, n) * pochhammer(a3, n),
                        pochhammer(b1, n) * pochhammer(b2, n) * pochhammer(1, n))
        total = total + term * QRatFunc(QLaurent.monomial(zexp * n))
    return total


def lemma32_factors(j: int, alpha: int, x: int, y: int, z: int) -> list:
    """Every Pochhammer that must be nonzero for the transformation to be defined."""
    return [
        ("(q^{alpha-y-j+1})_j", alpha - y - j + 1, j),
        ("(q^{alpha-x-j+1})_j", alpha - x - j + 1, j),
        ("(q^y)_j", y, j),
        ("(q^x)_j", x, j),
        ("(q^{x+z})_j", x + z, j),
    ]


def lemma32_admissible(j: int, alpha: int, x: int, y: int, z: int) -> bool:
    return all(not pochhammer(a, k).is_zero() for _, a, k in lemma32_factors(j, alpha, x, y, z))


@dataclass(frozen=True)
class Lemma32Verdict:
    y_form: bool
    x_form: bool


def lemma32_sides(j: int, alpha: int, x: int, y: int, z: int) -> tuple:
    """
    Returns (lhs, rhs_y_form, rhs_x_form). The two right sides differ
    only in the factor (q^{-y-z-j+1})_j versus (q^{-x-z-j+1})_j.
    """
    bad = [name for name, a, k in lemma32_factors(j, alpha, x, y, z)
           if pochhammer(a, k).is_zero()]
    if bad:
        raise VanishingDenominatorError("vanishing factors: " + ", ".join(bad))
    lhs = phi32(-j, alpha, alpha + z, alpha - y - j + 1, alpha - x - j + 1, 1, j)
    series = phi32(-j, x + y + z + j - 1, x - alpha, x, x + z, 1 + alpha - y, j)
    common = QRatFunc(
        pochhammer(-y - j + 1, j) * pochhammer(-x - j + 1, j),
        pochhammer(alpha - y - j + 1, j) * pochhammer(alpha - x - j + 1, j) * pochhammer(y, j),
    ) * series * QRatFunc(QLaurent.monomial((alpha + x + y + z + j - 1) * j))
    y_form = common * QRatFunc(pochhammer(-y - z - j + 1, j))
    x_form = common * QRatFunc(pochhammer(-x - z - j + 1, j))
    return lhs, y_form, x_form


def lemma32_check(j: int, alpha: int, x: int, y: int, z: int) -> Lemma32Verdict:
    lhs, y_form, x_form = lemma32_sides(j, alpha, x, y, z)
    return Lemma32Verdict(y_form=lhs == y_form, x_form=lhs == x_form)


def lemma33_admissible(j: int, k: int, n: int, p: int) -> bool:
    return 1 <= j <= k <= n and k - j <= p <= n - j


def qbin_ext(n: int, k: int) -> QLaurent:
    """
    Gaussian binomial extended to negative n by reflection:
    [n; k] = (-1)^k q^{nk - C(k,2)} [k-n-1; k] for k >= 0, and
    [n; k] = [n; n-k] for k <= n < 0. Zero in every other case.
    Agrees with q_binomial when n >= 0.
    """
    if n >= 0:
        return q_binomial(n, k)
    if k >= 0:
        return q_binomial(k - n - 1, k).shift(n * k - binom2(k)) * (-1 if k % 2 else 1)
    if k <= n:
        return qbin_ext(n, n - k)
    return ZERO


def lemma33_sides(j: int, k: int, n: int, p: int) -> tuple:
    if not lemma33_admissible(j, k, n, p):
        raise RangeError(f"(j,k,n,p)=({j},{k},{n},{p}) violates 1<=j<=k<=n, k-j<=p<=n-j")
    sign = lambda e: -1 if e % 2 else 1  # noqa: E731
    lhs = ZERO
    for r in range(p, p + j + 1):
        term = (qbin_ext(r - 1, k - 1) * qbin_ext(r, j) * qbin_ext(j, r - p)).shift(
            binom2(r + 1) - n * r + (r - p) * (n - j - p))
        lhs = lhs + term * sign(n - r)
    lhs = lhs.shift(binom2(k) + binom2(j))
    rhs = ZERO
    for r in range(k - p, j + 1):
        term = (qbin_ext(k, r) * qbin_ext(k + j - r - 1, j - r) * qbin_ext(p - 1, k - r - 1)).shift(
            binom2(r) + binom2(k - r) + binom2(p + 1) - (n - j) * p)
        rhs = rhs + term * sign(n - j - p)
    return lhs, rhs


def lemma33_check(j: int, k: int, n: int, p: int) -> bool:
    lhs, rhs = lemma33_sides(j, k, n, p)
    return lhs == rhs


def lemma33_instances(max_n: int):
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            for j in range(1, k + 1):
                for p in range(k - j, n - j + 1):
                    yield (j, k, n, p)
