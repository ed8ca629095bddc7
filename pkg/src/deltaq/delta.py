"""
Delta operators at t = 0 in Schur coordinates, the dual Hall-Littlewood
side of their expansion, and the two-alphabet Frobenius bookkeeping for
V_{n,m} and R_{n,nu}.

Every expansion runs over the q-reversed Q' basis with Laurent coefficients;
only the assembled results are required to be polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import NegativityError, RangeError
from .osp import c_or_zero, d_poly
from .partitions import (
    EMPTY,
    Partition,
    b_stat,
    enumerate_partitions,
    horizontal_strip_removals,
)
from .qarith import ONE, ZERO, QLaurent, binom2, q_binomial, q_multinomial
from .symfun import (
    BiSymFunc,
    SymFunc,
    bisym_product,
    bisym_y_coefficient,
    omega,
    qprime,
    rev_q_sym,
)
from .tableaux import kostka_foulkes, principal_spec_schur


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


@lru_cache(maxsize=None)
def rev_qprime(mu: Partition) -> SymFunc:
    """rev_q(Q'_mu) at degree b(mu), i.e. the modified Macdonald function at t = 0."""
    return rev_q_sym(qprime(mu), mu.b())


def _mu_weight(mu: Partition, n: int) -> QLaurent:
    # (-1)^{n-l(mu)} q^{-n - 2b(mu) + sum_i C(m_i+1, 2)} [l(mu); m(mu)]_q
    mults = mu.multiplicities()
    e = -n - 2 * mu.b() + sum(binom2(m + 1) for m in mults)
    return q_multinomial(mults).shift(e) * _sign(n - len(mu))


def _assert_positive(f: SymFunc, what: str) -> SymFunc:
    if not f.is_schur_positive():
        bad = [(list(lam), str(c)) for lam, c in f.items()
               if not (c.is_polynomial() and c.has_nonnegative_integer_coeffs())]
        raise NegativityError(f"{what} is not in Z_{{>=0}}[q] at {bad[:3]}")
    return f


@lru_cache(maxsize=None)
def _delta_prime_schur(nu: Partition, n: int) -> SymFunc:
    total = SymFunc.zero(n)
    for mu in enumerate_partitions(n):
        spec = principal_spec_schur(nu, len(mu) - 1, 1)
        if not spec:
            continue
        total = total + rev_qprime(mu) * (spec * _mu_weight(mu, n))
    return _assert_positive(total, f"Delta'_s{list(nu)} e_{n} at t=0")


def delta_prime_schur_t0(nu: Iterable[int], n: int) -> SymFunc:
    """Delta'_{s_nu} e_n at t = 0, expanded over rev_q(Q'_mu) for mu |- n."""
    if n < 1:
        raise RangeError(f"need n >= 1, got {n}")
    return _delta_prime_schur(Partition(nu), n)


@lru_cache(maxsize=None)
def delta_prime_elem_t0(k: int, n: int) -> SymFunc:
    """Delta'_{e_{k-1}} e_n at t = 0, using e_{k-1}[B_lam - 1] = q^C(k,2) [l(lam)-1; k-1]_q."""
    if not 1 <= k <= n:
        raise RangeError(f"need 1 <= k <= n, got k={k}, n={n}")
    total = SymFunc.zero(n)
    for lam in enumerate_partitions(n):
        ev = q_binomial(len(lam) - 1, k - 1)
        if not ev:
            continue
        total = total + rev_qprime(lam) * (ev.shift(binom2(k)) * _mu_weight(lam, n))
    return _assert_positive(total, f"Delta'_e{k - 1} e_{n} at t=0")


def lemma41_rhs(k: int, n: int) -> SymFunc:
    """q^C(k,2) sum_{r=k}^{n} (-1)^{n-r} q^{C(r+1,2) - nr} [r-1; k-1]_q D_{n,r}."""
    if not 1 <= k <= n:
        raise RangeError(f"need 1 <= k <= n, got k={k}, n={n}")
    total = SymFunc.zero(n)
    for r in range(k, n + 1):
        coeff = q_binomial(r - 1, k - 1).shift(binom2(k) + binom2(r + 1) - n * r) * _sign(n - r)
        total = total + d_poly(n, r) * coeff
    return total


def p_coeff(nu: Iterable[int], k: int) -> QLaurent:
    """q^{|nu| - C(k,2)} sum_{|rho|=|nu|, l(rho)=k-1} q^{b(rho)} [k-1; m(rho)]_q K_{nu,rho}(q)."""
    nu = Partition(nu)
    if not len(nu) + 1 <= k <= nu.size + 1:
        raise RangeError(f"k={k} outside [{len(nu) + 1}, {nu.size + 1}] for nu={list(nu)}")
    total = ZERO
    for rho in enumerate_partitions(nu.size, k - 1):
        kf = kostka_foulkes(nu, rho)
        if kf:
            total = total + kf * q_multinomial(rho.multiplicities()).shift(rho.b())
    return total.shift(nu.size - binom2(k))


def _omega_c_sum(n: int, k: int) -> SymFunc:
    # sum_{mu |- n, l(mu)=k} q^bbar(mu) [k; m(mu)]_q Q'_mu
    total = SymFunc.zero(n)
    for mu in enumerate_partitions(n, k):
        total = total + qprime(mu) * q_multinomial(mu.multiplicities()).shift(mu.bbar())
    return total


def theorem12_rhs(nu: Iterable[int], n: int) -> SymFunc:
    """The dual Hall-Littlewood side: sum_k P_{nu,k-1}(q) sum_{l(mu)=k} q^bbar [k; m]_q Q'_mu."""
    nu = Partition(nu)
    if n < 1:
        raise RangeError(f"need n >= 1, got {n}")
    total = SymFunc.zero(n)
    for k in range(len(nu) + 1, min(nu.size + 1, n) + 1):
        total = total + _omega_c_sum(n, k) * p_coeff(nu, k)
    return total


def delta_unprimed_schur_t0(nu: Iterable[int], n: int) -> SymFunc:
    """Delta_{s_nu} e_n at t = 0 as the sum of Delta'_{s_rho} over horizontal-strip removals."""
    nu = Partition(nu)
    total = SymFunc.zero(n)
    for rho in horizontal_strip_removals(nu):
        total = total + delta_prime_schur_t0(rho, n)
    return _assert_positive(total, f"Delta_s{list(nu)} e_{n} at t=0")


def simple2_rhs(nu: Iterable[int], j: int) -> QLaurent:
    """sum_{k, l(rho)=k-1, |rho|=|nu|} q^b(rho) [j; k-1]_q [k-1; m(rho)]_q K_{nu,rho}(q)."""
    nu = Partition(nu)
    if not nu:
        return ONE
    total = ZERO
    for rho in enumerate_partitions(nu.size):
        kf = kostka_foulkes(nu, rho)
        if not kf:
            continue
        l = len(rho)
        total = total + kf * q_binomial(j, l) * q_multinomial(rho.multiplicities()).shift(rho.b())
    return total


def delta_qdegree(nu: Iterable[int], n: int) -> int:
    """The claimed q-degree (n-1)|nu| - b(nu) of Delta'_{s_nu} e_n at t = 0."""
    nu = Partition(nu)
    return (n - 1) * nu.size - b_stat(nu)


@dataclass(frozen=True)
class DeltaResult:
    value: SymFunc
    nu: Partition
    n: int
    claimed_qdegree: int

    @property
    def degree_claim_holds(self) -> bool:
        return self.value.is_zero() or self.value.q_degree() == self.claimed_qdegree


def delta_result(nu: Iterable[int], n: int) -> DeltaResult:
    nu = Partition(nu)
    return DeltaResult(delta_prime_schur_t0(nu, n), nu, n, delta_qdegree(nu, n))


# -- two alphabets -----------------------------------------------------------


def prop51_lhs(m: int, n: int) -> BiSymFunc:
    """sum_{nu |- m} s_nu(y) . omega_x Delta'_{s_nu} e_n(x) at t = 0."""
    total = BiSymFunc(m, n)
    for nu in enumerate_partitions(m):
        total = total + bisym_product(SymFunc.schur(nu), omega(delta_prime_schur_t0(nu, n)))
    return total


def prop51_rhs(m: int, n: int) -> BiSymFunc:
    """sum_k q^{m-k+1} omega C_{m,k-1}(y) . omega C_{n,k}(x)."""
    total = BiSymFunc(m, n)
    for k in range(1, min(n, m + 1) + 1):
        left = c_or_zero(m, k - 1)
        if left.is_zero():
            continue
        total = total + bisym_product(omega(left), omega(c_or_zero(n, k))).shift(m - k + 1)
    return total


def prop52_lhs(m: int, n: int) -> BiSymFunc:
    """sum_{nu |- m} q^b(nu) s_nu(y) . (rev_q o omega_x) Delta'_{s_nu} e_n(x), reversed at (n-1)m - b(nu)."""
    total = BiSymFunc(m, n)
    for nu in enumerate_partitions(m):
        rev = rev_q_sym(omega(delta_prime_schur_t0(nu, n)), delta_qdegree(nu, n))
        total = total + bisym_product(SymFunc.schur(nu), rev).shift(nu.b())
    return total


def _v_shift(m: int, n: int, k: int) -> int:
    return m * n - k * m - k * n + n + k * (k - 1)


def prop52_rhs(m: int, n: int) -> BiSymFunc:
    """sum_k q^{mn - km - kn + n + k(k-1)} D_{m,k-1}(y) . D_{n,k}(x)."""
    total = BiSymFunc(m, n)
    for k in range(1, min(n, m + 1) + 1):
        left = d_poly(m, k - 1)
        if left.is_zero():
            continue
        total = total + bisym_product(left, d_poly(n, k)).shift(_v_shift(m, n, k))
    return total


def prop52_check(m: int, n: int) -> tuple:
    return prop52_lhs(m, n), prop52_rhs(m, n)


def grfrob_V(n: int, m: int) -> BiSymFunc:
    """Graded Frobenius image of V_{n,m} = (+)_k (R_{m,k-1} (x) R_{n,k}) with its degree shift."""
    return prop52_rhs(m, n)


def grfrob_R_nnu(nu: Iterable[int], n: int) -> SymFunc:
    """
    Graded Frobenius image of R_{n,nu} = Hom_{S_m}(S^nu, V_{n,m}){b(nu)}:
    the s_nu(y) coefficient of grFrob(V_{n,m}) lowered by q^b(nu).
    """
    nu = Partition(nu)
    return bisym_y_coefficient(grfrob_V(n, nu.size), nu).shift(-nu.b())


def rev_omega_delta(nu: Iterable[int], n: int) -> SymFunc:
    """(rev_q o omega) Delta'_{s_nu} e_n at t = 0, reversed at (n-1)|nu| - b(nu)."""
    nu = Partition(nu)
    return rev_q_sym(omega(delta_prime_schur_t0(nu, n)), delta_qdegree(nu, n))
