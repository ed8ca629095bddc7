"""
Identity sweeps. Each identity enumerates its instances from a set of bounds
and checks one instance at a time; a run aggregates the per-instance outcomes
into a VerifyReport sorted by instance key, whatever the completion order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import tableaux
from .delta import (
    delta_prime_elem_t0,
    delta_prime_schur_t0,
    delta_qdegree,
    delta_unprimed_schur_t0,
    grfrob_R_nnu,
    lemma41_rhs,
    prop51_lhs,
    prop51_rhs,
    prop52_lhs,
    prop52_rhs,
    rev_omega_delta,
    simple2_rhs,
    theorem12_rhs,
)
from .errors import DeltaqError
from .hypergeo import lemma32_admissible, lemma32_check, lemma33_check, lemma33_instances
from .osp import c_or_zero, c_via_osp, c_via_qprime, d_poly, shuffle_inner, shuffle_inner_via_schur
from .partitions import Partition, compositions, enumerate_partitions
from .qarith import binom2, q_binomial
from .symfun import SymFunc, e_multiply, e_perp, expand_in_vars, hall_inner, omega
from .tableaux import principal_spec_schur


@dataclass
class VerifyReport:
    identity: str
    instances_checked: int
    failures: list
    elapsed: float
    bounds: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "passed": self.passed,
            "instances_checked": self.instances_checked,
            "failures": self.failures,
            "elapsed_seconds": round(self.elapsed, 3),
            "bounds": self.bounds,
            "details": self.details,
        }


@dataclass(frozen=True)
class Identity:
    name: str
    description: str
    defaults: dict
    instances: Callable[..., Iterable[tuple]]
    check: Callable[..., Optional[str]]
    finalize: Optional[Callable[[list], tuple]] = None


def _diff(lhs, rhs) -> str:
    return f"lhs={lhs!r} rhs={rhs!r}"


def _partitions_upto(max_size: int):
    for s in range(max_size + 1):
        yield from enumerate_partitions(s)


# -- instance generators and checks ------------------------------------------


def _kn_pairs(max_n, **_):
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            yield (k, n)


def _check_theorem42(k, n):
    delta = delta_prime_elem_t0(k, n)
    c = c_via_qprime(n, k)
    if delta != c:
        return "Delta' e_n != C_{n,k}: " + _diff(delta, c)
    schur_table = expand_in_vars(c, n)
    osp_table = c_via_osp(n, k, n)
    if schur_table != osp_table:
        bad = sorted(set(schur_table) ^ set(osp_table)
                     | {a for a in schur_table if osp_table.get(a) != schur_table[a]})
        return f"monomial tables differ at {bad[:3]}"
    return None


def _check_lemma41(k, n):
    lhs, rhs = delta_prime_elem_t0(k, n), lemma41_rhs(k, n)
    return None if lhs == rhs else _diff(lhs, rhs)


def _nu_n(max_m, max_n, **_):
    for nu in _partitions_upto(max_m):
        for n in range(1, max_n + 1):
            yield (nu, n)


def _check_theorem12(nu, n):
    lhs = omega(delta_prime_schur_t0(nu, n))
    rhs = theorem12_rhs(nu, n)
    return None if lhs == rhs else _diff(lhs, rhs)


def _jkn(max_n, **_):
    for n in range(2, max_n + 1):
        for j in range(1, n):
            for k in range(1, n + 1):
                yield (j, k, n)


def lemma31_rhs(j, k, n) -> SymFunc:
    total = SymFunc.zero(n - j)
    for r in range(0, j + 1):
        coeff = (q_binomial(k, r) * q_binomial(k + j - r - 1, j - r)).shift(binom2(r))
        if coeff:
            total = total + c_or_zero(n - j, k - r) * coeff
    return total


def _check_lemma31(j, k, n):
    lhs = e_perp(j, c_via_qprime(n, k))
    rhs = lemma31_rhs(j, k, n)
    return None if lhs == rhs else _diff(lhs, rhs)


def lemma23_rhs(j, k, n) -> SymFunc:
    total = SymFunc.zero(n - j)
    for m in range(max(1, k - j), min(k, n - j) + 1):
        total = total + d_poly(n - j, m) * q_binomial(j, k - m).shift((k - m) * (n - j - m))
    return total * q_binomial(k, j).shift(binom2(j))


def _check_lemma23(j, k, n):
    lhs = e_perp(j, d_poly(n, k))
    rhs = lemma23_rhs(j, k, n)
    return None if lhs == rhs else _diff(lhs, rhs)


def _lemma33_instances(max_n, **_):
    return lemma33_instances(max_n)


def _check_lemma33(j, k, n, p):
    return None if lemma33_check(j, k, n, p) else "LHS != RHS"


LEMMA32_RANGE = range(-3, 6)


def _lemma32_instances(max_j, **_):
    for j in range(0, max_j + 1):
        for alpha in LEMMA32_RANGE:
            for x in LEMMA32_RANGE:
                for y in LEMMA32_RANGE:
                    for z in LEMMA32_RANGE:
                        if lemma32_admissible(j, alpha, x, y, z):
                            yield (j, alpha, x, y, z)


def _check_lemma32(j, alpha, x, y, z):
    v = lemma32_check(j, alpha, x, y, z)
    # encoded as a record; _finalize_lemma32 decides pass/fail over the sweep
    return {"y_form": v.y_form, "x_form": v.x_form}


def _finalize_lemma32(results: list) -> tuple:
    """
    results: [(instance, record)]. Passes iff exactly one right-hand form
    holds at every tuple.
    """
    holds = {
        "y_form": all(r["y_form"] for _, r in results),
        "x_form": all(r["x_form"] for _, r in results),
    }
    counts = {name: sum(1 for _, r in results if r[name]) for name in holds}
    winners = [name for name, ok in holds.items() if ok]
    details = {"holds_everywhere": holds, "tuples_where_form_holds": counts,
               "identified_form": winners[0] if len(winners) == 1 else None}
    failures = []
    if len(winners) != 1:
        for inst, r in results:
            if not (r["y_form"] or r["x_form"]) or len(winners) == 2:
                failures.append((inst, f"y_form={r['y_form']} x_form={r['x_form']}"))
        if not failures:
            failures.append(((), "no single form holds across the sweep"))
    return failures, details


def _mn_pairs(max_m, max_n, **_):
    for m in range(0, max_m + 1):
        for n in range(1, max_n + 1):
            yield (m, n)


def _check_prop51(m, n):
    lhs, rhs = prop51_lhs(m, n), prop51_rhs(m, n)
    return None if lhs == rhs else _diff(lhs, rhs)


def _check_prop52(m, n):
    lhs, rhs = prop52_lhs(m, n), prop52_rhs(m, n)
    return None if lhs == rhs else _diff(lhs, rhs)


def _nu_j(max_m, max_j, **_):
    for nu in _partitions_upto(max_m):
        for j in range(0, max_j + 1):
            yield (nu, j)


def _check_simple2(nu, j):
    lhs, rhs = principal_spec_schur(nu, j, 0), simple2_rhs(nu, j)
    return None if lhs == rhs else _diff(lhs, rhs)


def _check_degree(nu, n):
    value = delta_prime_schur_t0(nu, n)
    if value.is_zero():
        return None
    got, claimed = value.q_degree(), delta_qdegree(nu, n)
    return None if got == claimed else f"q-degree {got}, claimed {claimed}"


def _check_positivity(nu, n):
    try:
        primed = delta_prime_schur_t0(nu, n)
        unprimed = delta_unprimed_schur_t0(nu, n)
    except DeltaqError as exc:
        return str(exc)
    if not (primed.is_schur_positive() and unprimed.is_schur_positive()):
        return "negative coefficient"
    return None


def _check_osp_vs_qprime(k, n):
    osp_table = c_via_osp(n, k, n)
    for comp, c in osp_table.items():
        if osp_table.get(tuple(sorted(comp, reverse=True))) != c:
            return f"OSP table not symmetric at {comp}"
    schur_table = expand_in_vars(c_via_qprime(n, k), n)
    return None if osp_table == schur_table else "monomial tables differ"


def _shuffle_instances(max_n, **_):
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            for alpha in compositions(n):
                yield (n, k, alpha)


def _check_shuffle(n, k, alpha):
    lhs, rhs = shuffle_inner(n, k, alpha), shuffle_inner_via_schur(n, k, alpha)
    return None if lhs == rhs else _diff(lhs, rhs)


def _adjoint_instances(max_n, **_):
    for lam in _partitions_upto(max_n):
        for j in range(0, lam.size + 1):
            for mu in enumerate_partitions(lam.size - j):
                yield (lam, mu, j)


def _check_adjoint(lam, mu, j):
    f, g = SymFunc.schur(lam), SymFunc.schur(mu)
    lhs = hall_inner(e_perp(j, f), g)
    rhs = hall_inner(f, e_multiply(j, g))
    return None if lhs == rhs else _diff(lhs, rhs)


def _check_theorem13(nu, n):
    lhs, rhs = grfrob_R_nnu(nu, n), rev_omega_delta(nu, n)
    if lhs != rhs:
        return _diff(lhs, rhs)
    if not lhs.is_schur_positive():
        return "graded Frobenius image has a negative coefficient"
    return None


IDENTITIES = {
    i.name: i for i in [
        Identity("theorem-4-2", "Delta'_{e_{k-1}} e_n|t=0 = C_{n,k}, with the OSP monomial table",
                 {"max_n": 7}, _kn_pairs, _check_theorem42),
        Identity("theorem-1-2", "omega Delta'_{s_nu} e_n|t=0 = dual Hall-Littlewood expansion",
                 {"max_m": 4, "max_n": 6}, _nu_n, _check_theorem12),
        Identity("theorem-1-3", "grFrob(R_{n,nu}) = (rev_q o omega) Delta'_{s_nu} e_n|t=0",
                 {"max_m": 3, "max_n": 5}, _nu_n, _check_theorem13),
        Identity("lemma-2-3", "e_j^perp D_{n,k} recursion",
                 {"max_n": 7}, _jkn, _check_lemma23),
        Identity("lemma-3-1", "e_j^perp C_{n,k} recursion",
                 {"max_n": 7}, _jkn, _check_lemma31),
        Identity("lemma-3-2", "3phi2 transformation; reports which right-hand form holds",
                 {"max_j": 3}, _lemma32_instances, _check_lemma32, _finalize_lemma32),
        Identity("lemma-3-3", "q-binomial identity behind the D-coefficient matching",
                 {"max_n": 8}, _lemma33_instances, _check_lemma33),
        Identity("lemma-4-1", "Delta'_{e_{k-1}} e_n|t=0 as an alternating D-expansion",
                 {"max_n": 7}, _kn_pairs, _check_lemma41),
        Identity("prop-5-1", "two-alphabet identity in terms of omega C",
                 {"max_m": 3, "max_n": 5}, _mn_pairs, _check_prop51),
        Identity("prop-5-2", "q-reversed two-alphabet identity in terms of D",
                 {"max_m": 3, "max_n": 5}, _mn_pairs, _check_prop52),
        Identity("simple-2", "s_nu(1,q,...,q^{j-1}) Kostka-Foulkes expansion",
                 {"max_m": 5, "max_j": 6}, _nu_j, _check_simple2),
        Identity("degree-claim", "q-degree of Delta'_{s_nu} e_n|t=0 is (n-1)|nu| - b(nu)",
                 {"max_m": 4, "max_n": 6}, _nu_n, _check_degree),
        Identity("positivity", "primed and unprimed Delta_{s_nu} e_n|t=0 are Schur positive",
                 {"max_m": 4, "max_n": 6}, _nu_n, _check_positivity),
        Identity("osp-vs-qprime", "OSP quasisymmetric C_{n,k} = dual Hall-Littlewood C_{n,k}",
                 {"max_n": 6}, _kn_pairs, _check_osp_vs_qprime),
        Identity("shuffle-inner", "<C_{n,k}, e_alpha> via alpha-shuffles = Hall inner product",
                 {"max_n": 6}, _shuffle_instances, _check_shuffle),
        Identity("adjointness", "<e_j^perp f, g> = <f, e_j g> on Schur functions",
                 {"max_n": 6}, _adjoint_instances, _check_adjoint),
    ]
}


def _encode(value):
    if isinstance(value, tuple) and not isinstance(value, Partition):
        return [_encode(v) for v in value]
    if isinstance(value, Partition):
        return list(value)
    return value


def _sort_key(instance):
    return tuple((len(v), tuple(v)) if isinstance(v, tuple) else (0, (v,)) for v in instance)


def _run_instance(identity: Identity, instance: tuple):
    try:
        return identity.check(*instance)
    except DeltaqError as exc:
        return f"{type(exc).__name__}: {exc}"


_worker_store: Optional[dict] = None


def _worker_init(snapshot: Optional[dict]) -> None:
    global _worker_store
    if snapshot is not None:
        _worker_store = dict(snapshot)
        tableaux.set_kostka_foulkes_store(_worker_store)


def _run_chunk(name: str, chunk: list) -> tuple:
    identity = IDENTITIES[name]
    before = set(_worker_store) if _worker_store is not None else None
    results = [(inst, _run_instance(identity, inst)) for inst in chunk]
    new_entries = {}
    if _worker_store is not None:
        new_entries = {k: v for k, v in _worker_store.items() if k not in before}
    return results, new_entries


def run_identity(name: str, max_n: Optional[int] = None, max_m: Optional[int] = None,
                 max_j: Optional[int] = None, jobs: int = 1,
                 kf_store: Optional[dict] = None) -> VerifyReport:
    """
    Run the full sweep for one identity. ``kf_store`` (if given) is installed
    as the Kostka-Foulkes memo and receives every entry computed during the run.
    """
    identity = IDENTITIES[name]
    bounds = dict(identity.defaults)
    for key, value in (("max_n", max_n), ("max_m", max_m), ("max_j", max_j)):
        if value is not None and key in bounds:
            if value < 0:
                raise ValueError(f"{key} must be nonnegative")
            bounds[key] = value
    instances = sorted(identity.instances(**bounds), key=_sort_key)
    start = time.perf_counter()
    previous = tableaux._kf_store
    if kf_store is not None:
        tableaux.set_kostka_foulkes_store(kf_store)
    try:
        if jobs <= 1 or len(instances) < 2:
            results = [(inst, _run_instance(identity, inst)) for inst in instances]
        else:
            size = max(1, len(instances) // (jobs * 4))
            chunks = [instances[i:i + size] for i in range(0, len(instances), size)]
            snapshot = dict(kf_store) if kf_store is not None else None
            results = []
            with ProcessPoolExecutor(max_workers=jobs, initializer=_worker_init,
                                     initargs=(snapshot,)) as pool:
                for chunk_results, new_entries in pool.map(_run_chunk, [name] * len(chunks), chunks):
                    results.extend(chunk_results)
                    if kf_store is not None:
                        for key, value in new_entries.items():
                            dict.__setitem__(kf_store, key, value)
    finally:
        tableaux.set_kostka_foulkes_store(previous)
    results.sort(key=lambda r: _sort_key(r[0]))
    details: dict = {}
    if identity.finalize is not None:
        failures, details = identity.finalize(results)
    else:
        failures = [(inst, diff) for inst, diff in results if diff is not None]
    elapsed = time.perf_counter() - start
    return VerifyReport(
        identity=name,
        instances_checked=len(instances),
        failures=[{"instance": _encode(inst), "diff": diff} for inst, diff in failures],
        elapsed=elapsed,
        bounds=bounds,
        details=details,
    )
