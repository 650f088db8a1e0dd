"""Command line entry point: ``mccool <command> [options]``.

Exit codes: 0 every check passed, 1 a check failed, 2 usage error,
3 capacity exceeded. JSON output carries ``"schema": "1"``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, Dict, List, Optional

from . import __version__
from .algebra import (
    FULL,
    PLUS,
    CapacityError,
    closed_form_poincare,
    monomial_to_json,
    rewrite_oracle_check,
    verify_claimed_basis,
)
from .cache import SCHEMA, BasisCache, default_cache_dir, get_basis
from .freegroup import verify_center, verify_mccool_presentation, verify_semidirect_action
from .koszul import freeness_decomposition_check, koszul_consistency_test
from .tc import FAMILIES, GroupId, tc_report
from .zerodiv import certificate_M, certificate_N, cup_length, zcl_search

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class Run:
    """Collects results of the checks executed by one command."""

    def __init__(self, args):
        self.args = args
        self.results: List[dict] = []
        self.capacity: List[str] = []

    @property
    def cache_dir(self):
        return self.args.cache_dir or default_cache_dir()

    def basis(self, n: int, variant: str):
        return get_basis(n, variant, self.cache_dir, self.args.capacity)

    def record(self, name: str, fn: Callable[[], dict]) -> None:
        t0 = time.perf_counter()
        try:
            res = fn()
        except CapacityError as exc:
            self.capacity.append(f"{name}: {exc}")
            res = {"pass": None, "skipped": "capacity", "reason": str(exc)}
        res = {"step": name, **res}
        if self.args.timings:
            res["seconds"] = round(time.perf_counter() - t0, 3)
        self.results.append(res)

    @property
    def failures(self) -> List[str]:
        return [r["step"] for r in self.results if r.get("pass") is False]

    def exit_code(self) -> int:
        if self.failures:
            return EXIT_FAIL
        if self.capacity:
            return EXIT_CAPACITY
        return EXIT_OK


# ------------------------------------------------------------------ checks


def _presentation(run: Run, n: int, variant: str) -> dict:
    return verify_mccool_presentation(n, variant).to_dict()


def _basis(run: Run, n: int, variant: str) -> dict:
    b = run.basis(n, variant)
    return {"check": "basis", "n": n, "variant": variant, "dims": b.dims(),
            "top_degree": b.top_degree, "pass": True,
            "basis": {str(q): [monomial_to_json(m) for m in b.basis(q)] for q in range(b.vanishing_degree)}}


def _poincare(run: Run, n: int, variant: str) -> dict:
    b = run.basis(n, variant)
    expected = closed_form_poincare(n, variant)
    vanishes = all(b.dim(q) == 0 for q in range(n, n + 2))
    return {"check": "poincare", "n": n, "variant": variant, "dims": b.dims(),
            "closed_form": expected, "vanishes_from_n": vanishes,
            "pass": b.dims() == expected and vanishes}


def _verify_basis(run: Run, n: int, variant: str) -> dict:
    b = run.basis(n, variant)
    return verify_claimed_basis(b.pres, b).to_dict()


def _cup_length(run: Run, n: int, variant: str) -> dict:
    b = run.basis(n, variant)
    cl = cup_length(b)
    return {"check": "cup-length", "n": n, "variant": variant, "cup_length": cl, "pass": cl == n - 1}


def _certificate(run: Run, n: int, variant: str, kind: str) -> dict:
    if kind == "M":
        d = certificate_M(run.basis(n, FULL)).to_dict(run.args.product)
    elif kind == "N":
        d = certificate_N(run.basis(n, PLUS)).to_dict(run.args.product)
    else:
        cert = zcl_search(run.basis(n, variant), run.args.budget)
        d = cert.to_dict(run.args.product)
        d["pass"] = cert.nonzero and all(cert.checks.values())
    return d


def _koszul(run: Run, n: int, variant: str) -> dict:
    b = run.basis(n, variant)
    return koszul_consistency_test(b.pres, run.args.max_degree, b, run.args.dual_capacity).to_dict()


def _freeness(run: Run, n: int) -> dict:
    b = run.basis(n, PLUS)
    sub = run.basis(n - 1, PLUS)
    return freeness_decomposition_check(n, b, sub).to_dict()


def _tc(run: Run, family: str, n: int) -> dict:
    rep = tc_report(GroupId(family, n), run.cache_dir, run.args.allow_unverified, run.args.capacity)
    d = rep.to_dict()
    d["pass"] = rep.passed if family in ("full", "plus") else True
    return d


def _rewrite(run: Run, n: int, variant: str) -> dict:
    b = run.basis(n, variant)
    return rewrite_oracle_check(b, run.args.samples, run.args.seed).to_dict()


def _center(run: Run, n: int) -> dict:
    return verify_center(n, run.args.power_bound).to_dict()


def _action(run: Run, n: int) -> dict:
    return verify_semidirect_action(n).to_dict()


def _all(run: Run, n: int) -> None:
    for v in (FULL, PLUS):
        run.record(f"verify-presentation/{v}", lambda v=v: _presentation(run, n, v))
    run.record("verify-center", lambda: _center(run, n))
    if n >= 3:
        run.record("verify-action", lambda: _action(run, n))
    for v in (FULL, PLUS):
        run.record(f"poincare/{v}", lambda v=v: _poincare(run, n, v))
        run.record(f"verify-basis/{v}", lambda v=v: _verify_basis(run, n, v))
        run.record(f"cup-length/{v}", lambda v=v: _cup_length(run, n, v))
        run.record(f"rewrite-check/{v}", lambda v=v: _rewrite(run, n, v))
    run.record("zcl-certificate/M", lambda: _certificate(run, n, FULL, "M"))
    run.record("zcl-certificate/N", lambda: _certificate(run, n, PLUS, "N"))
    run.record("koszul-test/plus", lambda: _koszul(run, n, PLUS))
    if n >= 3:
        run.record("freeness", lambda: _freeness(run, n))
    for fam in ("full", "plus"):
        run.record(f"tc-report/{fam}", lambda fam=fam: _tc(run, fam, n))


def _cache(run: Run) -> dict:
    directory = run.cache_dir
    if not directory:
        raise UsageError("cache commands need --cache-dir or $MCCOOL_CACHE_DIR")
    cache = BasisCache(directory)
    action = run.args.action
    if action == "list":
        return {"check": "cache", "action": "list", "entries": cache.list(), "pass": True}
    if run.args.n is None:
        raise UsageError(f"cache {action} needs --n")
    n, v = run.args.n, run.args.variant
    if action == "evict":
        removed = cache.evict(n, v)
        return {"check": "cache", "action": "evict", "n": n, "variant": v,
                "status": "removed" if removed else "no-op", "pass": True}
    basis = cache.rebuild(n, v, run.args.capacity)
    return {"check": "cache", "action": "rebuild", "n": n, "variant": v,
            "file": cache.path(n, v).name, "dims": basis.dims(), "pass": True}


class UsageError(ValueError):
    pass


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--variant", choices=(FULL, PLUS), default=FULL)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--capacity", type=int, default=None, help="override the n tier bound")
    common.add_argument("--max-degree", "-D", type=int, default=4)
    common.add_argument("--dual-capacity", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=1000)
    common.add_argument("--budget", type=int, default=100_000)
    common.add_argument("--power-bound", type=int, default=16)
    common.add_argument("--product", action="store_true", help="include expanded products")
    common.add_argument("--timings", action="store_true", help="add wall times (breaks byte identity)")
    common.add_argument("--allow-unverified", action="store_true")

    p = argparse.ArgumentParser(prog="mccool", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("verify-presentation", "verify-center", "verify-action", "basis", "poincare",
                 "verify-basis", "cup-length", "koszul-test", "freeness", "rewrite-check", "all"):
        sub.add_parser(name, parents=[common])
    z = sub.add_parser("zcl-certificate", parents=[common])
    z.add_argument("kind", choices=("M", "N", "search"))
    t = sub.add_parser("tc-report", parents=[common])
    t.add_argument("--family", choices=FAMILIES, default="full")
    c = sub.add_parser("cache", parents=[common])
    c.add_argument("action", choices=("list", "evict", "rebuild"))
    return p


def _need_n(args, minimum: int = 2) -> int:
    if args.n is None:
        raise UsageError(f"{args.command} needs --n")
    if args.n < minimum:
        raise UsageError(f"{args.command} needs n >= {minimum}")
    return args.n


def execute(args) -> Run:
    run = Run(args)
    cmd = args.command
    v = args.variant
    if cmd == "all":
        _all(run, _need_n(args))
    elif cmd == "cache":
        run.record(f"cache/{args.action}", lambda: _cache(run))
        # cache failures are usage problems, surfaced below
    elif cmd == "tc-report":
        n = args.n if args.n is not None else 1
        if args.family != "integers":
            n = _need_n(args, 1 if args.family == "free" else 2)
        run.record(f"tc-report/{args.family}", lambda: _tc(run, args.family, n))
    elif cmd == "verify-action":
        n = _need_n(args, 3)
        run.record(cmd, lambda: _action(run, n))
    elif cmd == "freeness":
        n = _need_n(args, 3)
        run.record(cmd, lambda: _freeness(run, n))
    else:
        n = _need_n(args)
        table: Dict[str, Callable[[], dict]] = {
            "verify-presentation": lambda: _presentation(run, n, v),
            "verify-center": lambda: _center(run, n),
            "basis": lambda: _basis(run, n, v),
            "poincare": lambda: _poincare(run, n, v),
            "verify-basis": lambda: _verify_basis(run, n, v),
            "cup-length": lambda: _cup_length(run, n, v),
            "koszul-test": lambda: _koszul(run, n, v),
            "rewrite-check": lambda: _rewrite(run, n, v),
            "zcl-certificate": lambda: _certificate(run, n, v, args.kind),
        }
        name = cmd if cmd != "zcl-certificate" else f"{cmd}/{args.kind}"
        run.record(name, table[cmd])
    return run


def render_json(run: Run) -> str:
    doc = {
        "schema": SCHEMA,
        "version": __version__,
        "command": run.args.command,
        "n": run.args.n,
        "pass": not run.failures and not run.capacity,
        "failures": run.failures,
        "capacity": run.capacity,
        "results": run.results,
    }
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)


def _text_line(r: dict) -> str:
    status = {True: "PASS", False: "FAIL", None: "SKIP"}[r.get("pass")]
    step = r["step"]
    if step == "poincare" and "dims" in r:
        return " ".join(map(str, r["dims"]))
    bits = []
    for key in ("dims", "cup_length", "tc_exact", "tc_lower", "tc_upper", "zcl_exact", "length",
                "coefficient", "dual_hilbert", "count", "status", "note", "reason", "file"):
        if key in r and r[key] is not None:
            bits.append(f"{key}={r[key]}")
    if "entries" in r:
        bits.append(f"entries={len(r['entries'])}")
        bits.extend(e["file"] for e in r["entries"])
    return f"{status} {step} " + " ".join(bits)


def render_text(run: Run) -> str:
    lines = [_text_line(r) for r in run.results]
    if len(run.results) > 1:
        lines.append(f"{len(run.results) - len(run.failures) - len(run.capacity)}/{len(run.results)} passed")
    return "\n".join(lines)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run = execute(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = render_json(run) if args.format == "json" else render_text(run)
    print(out)
    return run.exit_code()


if __name__ == "__main__":
    sys.exit(main())
