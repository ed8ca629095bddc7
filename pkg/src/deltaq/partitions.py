"""Integer partitions, their statistics, and strip relations between them."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional


class Partition(tuple):
    """
    A weakly decreasing tuple of positive integers. The empty tuple is the
    unique partition of 0.

    Partitions compare as tuples, so ``sorted(..., reverse=True)`` is the
    descending-lexicographic order used for every listing in the package.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> tuple:
        """Nonzero part multiplicities (m_1, m_2, ...) with zeros dropped."""
        return tuple(m for _, m in sorted(Counter(self).items()))

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def b(self) -> int:
        return b_stat(self)

    def bbar(self) -> int:
        return bbar_stat(self)

    def dominates(self, other: "Partition") -> bool:
        return dominates(self, other)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(o <= s for s, o in zip(self, other))

    def __repr__(self):
        return f"Partition({list(self)})"

    def to_json(self) -> list:
        return list(self)


EMPTY = Partition()


def b_stat(lam: Iterable[int]) -> int:
    return sum(part * i for i, part in enumerate(lam))


def bbar_stat(lam: Iterable[int]) -> int:
    return sum((part - 1) * i for i, part in enumerate(lam))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int, length: Optional[int] = None) -> list:
    """All partitions of n in descending-lex order, optionally with exactly ``length`` parts."""
    if n < 0:
        return []
    parts = (Partition(p) for p in _partitions(n, n))
    if length is None:
        return list(parts)
    return [p for p in parts if len(p) == length]


@lru_cache(maxsize=None)
def conjugate(lam: tuple) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for part in lam if part > c) for c in range(lam[0]))


def dominates(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """lam >= mu in dominance order (sizes assumed equal)."""
    lam, mu = tuple(lam), tuple(mu)
    s = t = 0
    for i in range(max(len(lam), len(mu))):
        s += lam[i] if i < len(lam) else 0
        t += mu[i] if i < len(mu) else 0
        if s < t:
            return False
    return True


@lru_cache(maxsize=None)
def vertical_strip_removals(lam: tuple, j: int) -> tuple:
    """
    All mu inside lam with |lam/mu| = j and at most one cell of lam/mu per row.
    Returned in descending-lex order.
    """
    lam = tuple(lam)
    if j < 0 or j > len(lam):
        return ()
    out = set()
    for mask in product((0, 1), repeat=len(lam)):
        if sum(mask) != j:
            continue
        mu = [p - m for p, m in zip(lam, mask)]
        if all(a >= b for a, b in zip(mu, mu[1:])):
            out.add(Partition(mu))
    return tuple(sorted(out, reverse=True))


@lru_cache(maxsize=None)
def vertical_strip_additions(mu: tuple, j: int) -> tuple:
    """All lam containing mu with lam/mu a vertical strip of size j."""
    mu = tuple(mu)
    if j < 0:
        return ()
    rows = len(mu) + j
    padded = list(mu) + [0] * j
    out = set()
    for mask in product((0, 1), repeat=rows):
        if sum(mask) != j:
            continue
        lam = [p + m for p, m in zip(padded, mask)]
        if all(a >= b for a, b in zip(lam, lam[1:])):
            out.add(Partition(lam))
    return tuple(sorted(out, reverse=True))


def is_horizontal_strip(outer: Iterable[int], inner: Iterable[int]) -> bool:
    """True if inner is contained in outer and outer/inner has at most one cell per column."""
    outer, inner = tuple(outer), tuple(inner)
    if len(inner) > len(outer):
        return False
    inner = inner + (0,) * (len(outer) - len(inner))
    for i, (o, n) in enumerate(zip(outer, inner)):
        if n > o:
            return False
        # interlacing: outer_{i+1} <= inner_i
        if i + 1 < len(outer) and outer[i + 1] > n:
            return False
    return True


@lru_cache(maxsize=None)
def horizontal_strip_removals(nu: tuple) -> tuple:
    """
    Every rho (of any size, including nu itself and the result of removing the
    largest possible strip) with nu/rho a horizontal strip, descending-lex.
    """
    nu = tuple(nu)
    if not nu:
        return (EMPTY,)
    # rho_i ranges over [nu_{i+1}, nu_i]
    ranges = [range(nu[i + 1] if i + 1 < len(nu) else 0, nu[i] + 1) for i in range(len(nu))]
    out = {Partition(rho) for rho in product(*ranges)}
    return tuple(sorted(out, key=lambda p: (-p.size, tuple(-x for x in p))))


@lru_cache(maxsize=None)
def horizontal_strip_additions(mu: tuple, j: int) -> tuple:
    """All lam containing mu with lam/mu a horizontal strip of size j."""
    mu = tuple(mu)
    if j < 0:
        return ()
    rows = len(mu) + 1
    padded = list(mu) + [0]
    out = []

    def rec(i, remaining, acc):
        if i == rows:
            if remaining == 0:
                out.append(Partition(acc))
            return
        upper = padded[i] + remaining
        if i > 0:
            upper = min(upper, padded[i - 1])
        for v in range(padded[i], upper + 1):
            rec(i + 1, remaining - (v - padded[i]), acc + [v])

    rec(0, j, [])
    return tuple(sorted(out, reverse=True))


def weak_compositions(n: int, parts: int):
    """Weak compositions of n into exactly ``parts`` nonnegative entries, lex-descending."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first,) + rest


def compositions(n: int):
    """Strict compositions of n (all entries positive)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated list like ``"3,2,1"``; an empty string is the empty partition."""
    text = text.strip()
    if not text:
        return EMPTY
    return Partition(int(x) for x in text.split(","))
