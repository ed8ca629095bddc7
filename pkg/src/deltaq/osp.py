"""
Ordered set partitions and the two constructions of C_{n,k}: the
quasisymmetric one summed over OP_{n,k}, and the dual Hall-Littlewood one.
Also D_{n,k} = (rev_q o omega) C_{n,k}.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import RangeError, SizeMismatchError
from .partitions import EMPTY, enumerate_partitions, weak_compositions
from .qarith import ZERO, QLaurent, binom2, q_multinomial
from .symfun import SymFunc, e_product, hall_inner, omega, qprime, rev_q_sym


class OrderedSetPartition(tuple):
    """A tuple of blocks; each block is a sorted tuple, and the blocks partition {1..n}."""

    __slots__ = ()

    def __new__(cls, blocks: Iterable[Iterable[int]]):
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        seen = [x for b in blocks for x in b]
        if sorted(seen) != list(range(1, len(seen) + 1)):
            raise ValueError(f"blocks {blocks} do not partition 1..{len(seen)}")
        return super().__new__(cls, blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self)

    @property
    def k(self) -> int:
        return len(self)

    def __str__(self):
        return "(" + " | ".join("".join(map(str, b)) if max(b) < 10 else ",".join(map(str, b))
                               for b in self) + ")"

    def to_json(self) -> list:
        return [list(b) for b in self]


def enumerate_osp(n: int, k: int) -> list:
    """All of OP_{n,k}, ordered by the block index assigned to 1, 2, ..., n."""
    if k < 1 or k > n:
        raise RangeError(f"need 1 <= k <= n, got n={n}, k={k}")
    out = []
    for assign in product(range(k), repeat=n):
        if len(set(assign)) == k:
            blocks = [[] for _ in range(k)]
            for x, b in enumerate(assign, 1):
                blocks[b].append(x)
            out.append(OrderedSetPartition(blocks))
    return out


def _iter_blocks(n: int, k: int):
    # same order as enumerate_osp, without object construction
    for assign in product(range(k), repeat=n):
        if len(set(assign)) == k:
            yield assign


def inv(sigma: Sequence[Sequence[int]]) -> int:
    """Pairs i < j with i minimal in its block and i's block strictly right of j's."""
    where = {x: b for b, block in enumerate(sigma) for x in block}
    count = 0
    for block in sigma:
        i = min(block)
        count += sum(1 for j, bj in where.items() if j > i and bj < where[i])
    return count


def reading_word(sigma: Sequence[Sequence[int]]) -> tuple:
    """
    Group each element by its rank from the bottom of its block (1 for the
    block minimum); read the groups from the highest rank down to rank 1,
    each group left to right across the blocks.
    """
    blocks = [sorted(b) for b in sigma]
    depth = max((len(b) for b in blocks), default=0)
    word = []
    for r in range(depth - 1, -1, -1):
        word.extend(b[r] for b in blocks if len(b) > r)
    return tuple(word)


def _check_permutation(pi: Sequence[int]) -> None:
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValueError(f"{list(pi)} is not a permutation of 1..{len(pi)}")


def ides(pi: Sequence[int]) -> frozenset:
    """Inverse descent set: i such that i+1 appears to the left of i."""
    _check_permutation(pi)
    pos = {v: p for p, v in enumerate(pi)}
    return frozenset(i for i in range(1, len(pi)) if pos[i] > pos[i + 1])


def _forced_rises(comp: Sequence[int]) -> frozenset:
    # positions j where the weakly increasing word with content comp rises
    n = sum(comp)
    out, s = set(), 0
    for a in comp:
        s += a
        if 0 < s < n:
            out.add(s)
    return frozenset(out)


def fundamental_qsym_expand(n: int, S: Iterable[int], N: int) -> dict:
    """Monomial table of F_{n,S}(x_1..x_N); every nonzero coefficient is 1."""
    S = frozenset(S)
    if any(s < 1 or s > n - 1 for s in S):
        raise RangeError(f"S = {sorted(S)} is not a subset of 1..{n - 1}")
    one = QLaurent(1)
    return {comp: one for comp in weak_compositions(n, N) if S <= _forced_rises(comp)}


def osp_statistics(n: int, k: int) -> Counter:
    """Counter {(inv, iDes(rword)): multiplicity} over OP_{n,k}."""
    if k < 1 or k > n:
        raise RangeError(f"need 1 <= k <= n, got n={n}, k={k}")
    return Counter(dict(_osp_statistics(n, k)))


@lru_cache(maxsize=None)
def _osp_statistics(n: int, k: int) -> tuple:
    stats: Counter = Counter()
    for assign in _iter_blocks(n, k):
        blocks = [[] for _ in range(k)]
        for x, b in enumerate(assign, 1):
            blocks[b].append(x)
        stats[(inv(blocks), ides(reading_word(blocks)))] += 1
    return tuple(stats.items())


def c_via_osp(n: int, k: int, N: int) -> dict:
    """Monomial table of C_{n,k}(x_1..x_N) from the ordered-set-partition expansion."""
    if k < 1 or k > n or N < 1:
        raise RangeError(f"need 1 <= k <= n and N >= 1, got n={n}, k={k}, N={N}")
    by_set: dict = {}
    for (i, S), mult in osp_statistics(n, k).items():
        by_set[S] = by_set.get(S, ZERO) + QLaurent.monomial(i, mult)
    table = {}
    for comp in weak_compositions(n, N):
        rises = _forced_rises(comp)
        total = ZERO
        for S, coeff in by_set.items():
            if S <= rises:
                total = total + coeff
        if total:
            table[comp] = total
    return table


@lru_cache(maxsize=None)
def c_via_qprime(n: int, k: int) -> SymFunc:
    """C_{n,k} in Schur coordinates, from omega C = sum q^bbar [k; m(mu)] Q'_mu."""
    if n == 0 and k == 0:
        return SymFunc.schur(EMPTY)
    if k < 1 or k > n:
        raise RangeError(f"need 1 <= k <= n, got n={n}, k={k}")
    total = SymFunc.zero(n)
    for mu in enumerate_partitions(n, k):
        total = total + qprime(mu) * q_multinomial(mu.multiplicities()).shift(mu.bbar())
    return omega(total)


def c_or_zero(n: int, k: int) -> SymFunc:
    """C_{n,k} with C_{0,0} = 1 and zero outside 1 <= k <= n."""
    if (n, k) == (0, 0) or 1 <= k <= n:
        return c_via_qprime(n, k)
    return SymFunc.zero(max(n, 0))


def c_qdegree(n: int, k: int) -> int:
    """q-degree of C_{n,k}: (k-1)n - C(k,2)."""
    return (k - 1) * n - binom2(k)


@lru_cache(maxsize=None)
def d_poly(n: int, k: int) -> SymFunc:
    """D_{n,k} = (rev_q o omega) C_{n,k}; D_{0,0} = 1 and zero outside 1 <= k <= n."""
    if n == 0 and k == 0:
        return SymFunc.schur(EMPTY)
    if k < 1 or k > n:
        return SymFunc.zero(max(n, 0))
    return rev_q_sym(omega(c_via_qprime(n, k)), c_qdegree(n, k))


def is_shuffle(word: Sequence[int], alpha: Sequence[int]) -> bool:
    """
    True if word interleaves the decreasing runs (a1..1), (a1+a2..a1+1), ...
    """
    pos = {v: p for p, v in enumerate(word)}
    lo = 0
    for a in alpha:
        run = range(lo + a, lo, -1)
        places = [pos[v] for v in run]
        if any(x > y for x, y in zip(places, places[1:])):
            return False
        lo += a
    return True


def shuffle_inner(n: int, k: int, alpha: Sequence[int]) -> QLaurent:
    """<C_{n,k}, e_alpha> as the inv generating function over alpha-shuffle reading words."""
    alpha = tuple(alpha)
    if sum(alpha) != n or any(a <= 0 for a in alpha):
        raise SizeMismatchError(f"{list(alpha)} is not a composition of {n}")
    terms: dict = {}
    for assign in _iter_blocks(n, k):
        blocks = [[] for _ in range(k)]
        for x, b in enumerate(assign, 1):
            blocks[b].append(x)
        if is_shuffle(reading_word(blocks), alpha):
            i = inv(blocks)
            terms[i] = terms.get(i, 0) + 1
    return QLaurent(terms)


def shuffle_inner_via_schur(n: int, k: int, alpha: Sequence[int]) -> QLaurent:
    return hall_inner(c_via_qprime(n, k), e_product(alpha))
