"""Command-line interface: ``p2motive {hilb,moduli,verify,euler,cache}``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .hilb import CACHE_FILENAME, CACHE_VERSION, HilbCache, euler_oracle
from .lpoly import eval_at_one, is_palindromic, render, to_json
from .moduli import (
    CoprimalityError,
    betti_tail,
    motivic_tail,
    verify_chi_independence,
)

SCHEMA_VERSION = "1"
CACHE_ENV = "P2MOTIVE_CACHE_DIR"


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "p2motive"


def resolve_cache_dir(flag: str | None) -> Path:
    if flag:
        return Path(flag)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return default_cache_dir()


def envelope(command: str, inputs: dict, result, warnings=()) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "warnings": list(warnings),
    }


def dump_envelope(env: dict) -> str:
    """Canonical JSON text; ``dump_envelope(json.loads(s)) == s`` for its own output."""
    return json.dumps(env, sort_keys=True, indent=2, ensure_ascii=True)


# --- argument types ----------------------------------------------------------


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    if a < 3:
        raise argparse.ArgumentTypeError(f"d_min must be at least 3, got {a}")
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


# --- commands ----------------------------------------------------------------


def _open_cache(args) -> HilbCache:
    if args.no_cache:
        return HilbCache()
    return HilbCache(resolve_cache_dir(args.cache_dir) / CACHE_FILENAME)


def cmd_hilb(args, out) -> int:
    cache = _open_cache(args)
    h = cache.get(args.n)
    cache.save()
    euler = eval_at_one(h)
    pal = is_palindromic(h, 0, 2 * args.n)
    if args.format == "json":
        result = {
            "n": args.n,
            "class": to_json(h),
            "euler": str(euler),
            "palindromic": pal,
        }
        out.write(dump_envelope(envelope("hilb", {"n": args.n}, result)) + "\n")
    else:
        out.write(f"{render(h)} (euler {euler})\n")
        out.write(f"palindromic on [0, {2 * args.n}]: {'yes' if pal else 'no'}\n")
    return 0


def cmd_moduli(args, out) -> int:
    cache = _open_cache(args)
    mt = motivic_tail(args.d, args.chi, cache)
    warnings = list(mt.warnings)
    try:
        bt = betti_tail(args.d, args.chi, cache)
    except CoprimalityError as exc:
        bt = None
        warnings.append(f"no Betti table: {exc}")
    cache.save()
    p = mt.params
    if args.format == "json":
        result = {
            "params": p.as_dict(),
            "motivic_tail": {
                "level": mt.level,
                "tail": to_json(mt.tail),
                "semistable_only": mt.semistable_only,
                "vacuous": mt.vacuous,
            },
            "betti_tail": None
            if bt is None
            else {
                "entries": [{"i": i, "b": str(b)} for i, b in bt.entries],
                "hodge_diag": [{"p": q, "h": str(h)} for q, h in bt.hodge_diag],
            },
        }
        inputs = {"d": args.d, "chi": args.chi}
        out.write(dump_envelope(envelope("moduli", inputs, result, warnings)) + "\n")
        return 0
    out.write(
        f"d={p.d} chi={p.chi} chi0={p.chi0} rho={p.rho} dbar={p.dbar} "
        f"shift={p.shift} dim={p.dim_m} level={p.level_scheme} "
        f"stable_threshold={p.stable_threshold} coprime={'yes' if p.coprime else 'no'}\n"
    )
    label = "M^ss" if mt.semistable_only else "M"
    if mt.vacuous:
        out.write(f"[{label}(d,chi)]: nothing determined\n")
    else:
        out.write(f"[{label}(d,chi)] mod A_{mt.level}: {render(mt.tail)} + ...\n")
    if bt is not None:
        for i, b in reversed(bt.entries):
            out.write(f"b_{i}={b}\n")
        for q, h in reversed(bt.hodge_diag):
            out.write(f"h^{{{q},{q}}}={h}\n")
    for w in warnings:
        sys.stderr.write(f"warning: {w}\n")
    return 0


def cmd_verify(args, out) -> int:
    cache = _open_cache(args)
    lo, hi = args.d
    reports = [verify_chi_independence(d, cache) for d in range(lo, hi + 1)]
    cache.save()
    ok = all(r.passed for r in reports)
    if args.format == "json":
        result = {
            "passed": ok,
            "reports": [
                {
                    "d": r.d,
                    "passed": r.passed,
                    "vacuous": r.vacuous,
                    "min_degree": r.min_degree,
                    "chi0_values": list(r.chi0_values),
                    "first_discrepancy": r.first_discrepancy,
                }
                for r in reports
            ],
        }
        inputs = {"d_min": lo, "d_max": hi}
        out.write(dump_envelope(envelope("verify", inputs, result)) + "\n")
    else:
        for r in reports:
            if r.passed:
                tag = "pass (vacuous)" if r.vacuous else "pass"
                out.write(
                    f"d={r.d} {tag}: chi0 in {list(r.chi0_values)} agree "
                    f"in degrees >= {r.min_degree}\n"
                )
            else:
                a, b = r.discrepant_pair
                out.write(
                    f"d={r.d} FAIL: chi0={a} and chi0={b} differ at degree "
                    f"{r.first_discrepancy}\n"
                )
    return 0 if ok else 1


def cmd_euler(args, out) -> int:
    e = euler_oracle(args.n)
    cache = None if args.no_cache else _open_cache(args)
    verdict = None
    if cache is not None and cache.loaded and args.n in cache:
        verdict = eval_at_one(cache.get(args.n)) == e
    if args.format == "json":
        result = {"n": args.n, "euler": str(e), "matches_hilb_class": verdict}
        out.write(dump_envelope(envelope("euler", {"n": args.n}, result)) + "\n")
    elif verdict is None:
        out.write(f"{e}\n")
    else:
        out.write(f"{e} ({'matches' if verdict else 'DOES NOT match'} hilb_class)\n")
    return 0 if verdict is not False else 1


def cmd_cache(args, out) -> int:
    path = resolve_cache_dir(args.cache_dir) / CACHE_FILENAME
    if args.action == "clear":
        existed = path.exists()
        if existed:
            path.unlink()
        out.write(f"{'removed' if existed else 'nothing at'} {path}\n")
        return 0
    if args.action == "warm":
        cache = HilbCache(path)
        cache.get(args.n)
        cache.save()
    cache = HilbCache(path)
    info = {
        "path": str(path),
        "exists": path.exists(),
        "version": CACHE_VERSION,
        "max_n": cache.max_n if path.exists() else None,
    }
    if args.format == "json":
        out.write(dump_envelope(envelope("cache", {"action": args.action}, info)) + "\n")
    else:
        for k, v in info.items():
            out.write(f"{k}: {v}\n")
    return 0


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json"), default="plain")
    common.add_argument(
        "--cache-dir",
        help=f"cache directory (overrides ${CACHE_ENV}; default {default_cache_dir()})",
    )
    common.add_argument("--no-cache", action="store_true", help="do not touch the disk cache")

    parser = argparse.ArgumentParser(
        prog="p2motive",
        description="Motivic classes of Hilbert schemes of points on P^2 and the "
        "stable-range Betti numbers of moduli of one-dimensional sheaves.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilb", parents=[common], help="class of Hilb^n(P^2)")
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_hilb)

    p = sub.add_parser("moduli", parents=[common], help="parameters and tail of M(d,chi)")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.set_defaults(func=cmd_moduli)

    p = sub.add_parser("verify", parents=[common], help="chi-independence of the tail")
    p.add_argument("--d", type=_range, required=True, metavar="A..B")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("euler", parents=[common], help="triple-partition Euler number")
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("cache", parents=[common], help="inspect or clear the class cache")
    p.add_argument("action", choices=("info", "clear", "warm"))
    p.add_argument("--n", type=_nonneg, default=100, help="order for 'warm'")
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args, out or sys.stdout)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
