"""
Semistandard tableaux, the charge statistic, Kostka-Foulkes polynomials and
principal specializations of Schur functions.

Tableaux are generated as chains of horizontal strips: the cells holding
entry i form the strip lam^(i) / lam^(i-1).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Optional

from .errors import SizeMismatchError
from .partitions import EMPTY, Partition, horizontal_strip_additions
from .qarith import ONE, ZERO, QLaurent


class Tableau(tuple):
    """A semistandard Young tableau stored as a tuple of rows (top row first)."""

    __slots__ = ()

    def __new__(cls, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(r) for r in rows if len(r))
        for r in rows:
            if any(a > b for a, b in zip(r, r[1:])):
                raise ValueError(f"row not weakly increasing: {r}")
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper):
                raise ValueError("row lengths must be weakly decreasing")
            if any(lower[c] <= upper[c] for c in range(len(lower))):
                raise ValueError("columns must strictly increase downward")
        return super().__new__(cls, rows)

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self)

    @property
    def content(self) -> tuple:
        counts = Counter(x for r in self for x in r)
        top = max(counts, default=0)
        return tuple(counts.get(i, 0) for i in range(1, top + 1))

    def reading_word(self) -> tuple:
        """Rows left to right, bottom row first."""
        return tuple(x for r in reversed(self) for x in r)


def _fill(shape: tuple, strips: list) -> Tableau:
    rows = [[] for _ in shape]
    for entry, (inner, outer) in enumerate(strips, 1):
        for i, o in enumerate(outer):
            start = inner[i] if i < len(inner) else 0
            rows[i].extend([entry] * (o - start))
    return Tableau(rows)


def enumerate_ssyt(shape: Iterable[int], content: Iterable[int]) -> list:
    """All SSYT of the given shape whose entry i occurs content[i-1] times."""
    shape = Partition(shape)
    content = tuple(content)
    if shape.size != sum(content):
        raise SizeMismatchError(f"|shape| = {shape.size} but |content| = {sum(content)}")
    out = []

    def rec(i, current, strips):
        if i == len(content):
            if current == shape:
                out.append(_fill(shape, strips))
            return
        for nxt in horizontal_strip_additions(current, content[i]):
            if shape.contains(nxt):
                rec(i + 1, nxt, strips + [(current, nxt)])

    rec(0, EMPTY, [])
    return out


def charge(word: Iterable[int]) -> int:
    """
    Lascoux-Schutzenberger charge of a word whose content is a partition.

    Standard subwords are extracted by scanning leftward cyclically from the
    right end for 1, 2, 3, ...; within a subword the index rises by one each
    time the scan has to wrap around (i+1 sits to the right of i).
    """
    word = list(word)
    if not word:
        return 0
    counts = Counter(word)
    top = max(counts)
    mult = [counts.get(i, 0) for i in range(1, top + 1)]
    if min(word) < 1 or any(a < b for a, b in zip(mult, mult[1:])):
        raise ValueError(f"content of {word} is not a partition")
    used = [False] * len(word)
    total = 0
    remaining = len(word)
    while remaining:
        letters = [i for i in range(1, top + 1) if any(
            not used[p] and word[p] == i for p in range(len(word)))]
        size = 0
        while size < len(letters) and letters[size] == size + 1:
            size += 1
        pos = len(word)
        index = 0
        for letter in range(1, size + 1):
            # leftward from pos-1, wrapping to the right end if needed
            found = None
            for p in range(pos - 1, -1, -1):
                if not used[p] and word[p] == letter:
                    found = p
                    break
            if found is None:
                for p in range(len(word) - 1, pos - 1, -1):
                    if not used[p] and word[p] == letter:
                        found = p
                        break
                if letter > 1:
                    index += 1
            total += index
            used[found] = True
            pos = found
        remaining -= size
    return total


_kf_store: Optional[dict] = None


def set_kostka_foulkes_store(store: Optional[dict]) -> None:
    """
    Install a mutable mapping ``{(lam, mu): QLaurent}`` consulted before and
    filled after each Kostka-Foulkes computation. ``None`` disables it.
    """
    global _kf_store
    _kf_store = store


def kostka_foulkes(lam: Iterable[int], mu: Iterable[int]) -> QLaurent:
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatchError(f"|lam| = {lam.size} but |mu| = {mu.size}")
    store = _kf_store
    if store is not None:
        hit = store.get((lam, mu))
        if hit is not None:
            return hit
    value = _kostka_foulkes(lam, mu)
    if store is not None:
        store[(lam, mu)] = value
    return value


@lru_cache(maxsize=None)
def _kostka_foulkes(lam: Partition, mu: Partition) -> QLaurent:
    if not lam.dominates(mu):
        return ZERO
    terms: dict = {}
    for t in enumerate_ssyt(lam, mu):
        c = charge(t.reading_word())
        terms[c] = terms.get(c, 0) + 1
    return QLaurent(terms)


def kostka_number(lam: Iterable[int], mu: Iterable[int]) -> int:
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatchError(f"|lam| = {lam.size} but |mu| = {mu.size}")
    return _kostka_number(lam, tuple(mu))


@lru_cache(maxsize=None)
def _kostka_number(lam: Partition, content: tuple) -> int:
    return len(enumerate_ssyt(lam, content))


def principal_spec_schur(nu: Iterable[int], count: int, start: int = 0) -> QLaurent:
    """s_nu evaluated at q^start, q^(start+1), ..., q^(start+count-1)."""
    return _principal_spec(Partition(nu), count, start)


@lru_cache(maxsize=None)
def _principal_spec(nu: Partition, count: int, start: int) -> QLaurent:
    if not nu:
        return ONE
    if count < len(nu):
        return ZERO
    # layer-by-layer over entries 1..count; an entry-i cell contributes q^(start+i-1)
    layer = {EMPTY: ONE}
    for i in range(1, count + 1):
        nxt: dict = {}
        for inner, weight in layer.items():
            for size in range(0, nu.size - inner.size + 1):
                for outer in horizontal_strip_additions(inner, size):
                    if nu.contains(outer):
                        w = weight.shift(size * (start + i - 1))
                        nxt[outer] = nxt.get(outer, ZERO) + w
        layer = nxt
    return layer.get(nu, ZERO)
