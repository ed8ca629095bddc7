"""
``deltaq`` command line: ``compute`` prints one exact value as JSON,
``verify`` sweeps an identity and prints a JSON report.

Exit codes: 0 success or pass, 1 identity failure, 2 usage or invalid input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Callable, Optional

from . import delta, osp, symfun, tableaux
from .cache import kf_cache_load, kf_cache_store, resolve_cache_path
from .errors import DeltaqError
from .partitions import parse_partition
from .qarith import q_binomial
from .verify import IDENTITIES, run_identity


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.target} requires " + ", ".join("--" + m for m in missing))
    return [getattr(args, n) for n in names]


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _compute_qbinomial(a):
    n, k = _need(a, "n", "k")
    return q_binomial(n, k)


def _compute_kf(a):
    lam, mu = _need(a, "lam", "mu")
    return tableaux.kostka_foulkes(lam, mu)


def _compute_qprime(a):
    (mu,) = _need(a, "mu")
    return symfun.qprime(mu)


def _compute_c(a):
    n, k = _need(a, "n", "k")
    return osp.c_via_qprime(n, k)


def _compute_d(a):
    n, k = _need(a, "n", "k")
    if not 1 <= k <= n:
        raise UsageError(f"need 1 <= k <= n, got n={n}, k={k}")
    return osp.d_poly(n, k)


def _compute_dpe(a):
    n, k = _need(a, "n", "k")
    return delta.delta_prime_elem_t0(k, n)


def _compute_dps(a):
    nu, n = _need(a, "nu", "n")
    return delta.delta_prime_schur_t0(nu, n)


def _compute_ds(a):
    nu, n = _need(a, "nu", "n")
    return delta.delta_unprimed_schur_t0(nu, n)


def _compute_pcoeff(a):
    nu, k = _need(a, "nu", "k")
    return delta.p_coeff(nu, k)


def _compute_grfrob_v(a):
    n, m = _need(a, "n", "m")
    if n < 1 or m < 0:
        raise UsageError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    return delta.grfrob_V(n, m)


def _compute_grfrob_r(a):
    nu, n = _need(a, "nu", "n")
    if n < 1:
        raise UsageError(f"need n >= 1, got {n}")
    return delta.grfrob_R_nnu(nu, n)


TARGETS: dict[str, Callable] = {
    "qbinomial": _compute_qbinomial,
    "kostka-foulkes": _compute_kf,
    "qprime": _compute_qprime,
    "c": _compute_c,
    "d": _compute_d,
    "delta-prime-elem": _compute_dpe,
    "delta-prime-schur": _compute_dps,
    "delta-schur": _compute_ds,
    "p-coeff": _compute_pcoeff,
    "grfrob-v": _compute_grfrob_v,
    "grfrob-rnnu": _compute_grfrob_r,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="deltaq", description="Exact delta-operator computations at t = 0.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    comp = sub.add_parser("compute", help="print one value as JSON")
    comp.add_argument("target", choices=sorted(TARGETS))
    for name in ("n", "k", "m", "j", "p", "alpha", "x", "y", "z"):
        comp.add_argument(f"--{name}", type=int)
    for name in ("lam", "mu", "nu"):
        comp.add_argument(f"--{name}", type=_partition_arg, help="comma-separated, e.g. 2,1")
    fmt = comp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="compact JSON (default)")
    fmt.add_argument("--pretty", action="store_true", help="indented JSON")

    ver = sub.add_parser("verify", help="sweep an identity over bounded instances")
    ver.add_argument("identity", choices=sorted(IDENTITIES))
    ver.add_argument("--max-n", type=int)
    ver.add_argument("--max-m", type=int)
    ver.add_argument("--max-j", type=int)
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--cache", help="JSON-lines Kostka-Foulkes cache (or $DELTAQ_CACHE)")
    ver.add_argument("--paranoid", action="store_true",
                     help="recompute cached entries on first use")
    return parser


def _dump(obj, pretty: bool) -> str:
    if pretty:
        return json.dumps(obj, indent=2)
    return json.dumps(obj, separators=(",", ":"))


def _fail_usage(message: str) -> int:
    print(_dump({"error": message}, False))
    return 2


def cmd_compute(args) -> int:
    try:
        value = TARGETS[args.target](args)
    except UsageError as exc:
        return _fail_usage(str(exc))
    except (DeltaqError, ValueError) as exc:
        return _fail_usage(f"{type(exc).__name__}: {exc}")
    print(_dump(value.to_json(), args.pretty))
    return 0


def cmd_verify(args) -> int:
    for key in ("max_n", "max_m", "max_j"):
        value = getattr(args, key)
        if value is not None and value < 0:
            return _fail_usage(f"--{key.replace('_', '-')} must be nonnegative")
    if args.jobs < 1:
        return _fail_usage("--jobs must be at least 1")
    path = resolve_cache_path(args.cache)
    cache = None
    if path is not None:
        try:
            cache = kf_cache_load(path, paranoid=args.paranoid)
        except OSError as exc:
            return _fail_usage(str(exc))
    report = run_identity(args.identity, max_n=args.max_n, max_m=args.max_m,
                          max_j=args.max_j, jobs=args.jobs, kf_store=cache)
    if cache is not None:
        report.details["cache"] = dict(cache.stats(), path=path)
        try:
            kf_cache_store(path, cache)
        except OSError as exc:
            print(f"warning: {exc}", file=sys.stderr)
    print(_dump(report.to_json(), False))
    verdict = "PASS" if report.passed else "FAIL"
    print(f"{verdict} {report.identity}: {report.instances_checked} instances, "
          f"{len(report.failures)} failures, {report.elapsed:.2f}s", file=sys.stderr)
    return 0 if report.passed else 1


def main(argv: Optional[list] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail_usage(str(exc))
    if args.command == "compute":
        return cmd_compute(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
