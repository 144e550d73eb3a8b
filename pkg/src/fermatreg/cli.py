"""Command-line surface: table reproduction, single evaluations, self checks.

Subcommands
-----------
hyp3f2   evaluate 3F2(a1,a2,a3;b1,b2;1) from exact-rational flags
reg      holomorphic or mixed regulator pairing for given indices
f-table  the f(i, N) indecomposability table for a list of moduli
hodge    Hodge test for a wedge of holomorphic forms, or enumerate all pairs
verify   run the invariant suites and print pass/fail per property

Every record is one JSON object per line (tables can switch to CSV); output
is bitwise deterministic for identical flags.  Exit codes: 0 success,
1 numerical failure (budget exceeded, failed verification), 2 usage or
domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__, fermat, regulator, verify
from .specialfn import (
    BudgetExceededError,
    DomainError,
    EvalConfig,
    Hyp3F2Params,
    STRATEGIES,
    disable_eval_cache,
    enable_eval_cache,
    hyp3f2_unit,
)

_CACHE_FORMAT = "fermatreg-cache-v1"
_ENV_PREFIX = "FERMATREG_"


def _cfg_from_args(args) -> EvalConfig:
    def pick(flag_value, env_name, cast, default):
        if flag_value is not None:
            return cast(flag_value)
        env = os.environ.get(_ENV_PREFIX + env_name)
        if env is not None:
            return cast(env)
        return default

    return EvalConfig(
        tol=pick(args.tol, "TOL", float, 1e-8),
        max_terms=pick(args.max_terms, "MAX_TERMS", int, 500_000),
        quad_depth=pick(args.quad_depth, "QUAD_DEPTH", int, 10),
        strategy=pick(args.strategy, "STRATEGY", str, "both-cross-check"),
    )


def _add_cfg_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=None,
                   help="absolute tolerance (default 1e-8)")
    p.add_argument("--max-terms", type=int, default=None,
                   help="series term budget (default 500000)")
    p.add_argument("--quad-depth", type=int, default=None,
                   help="quadrature halving levels (default 10)")
    p.add_argument("--strategy", choices=STRATEGIES, default=None,
                   help="3F2 evaluation route (default both-cross-check)")
    p.add_argument("--cache", default=None, metavar="PATH",
                   help="JSON memoization file for 3F2 values (safe to delete)")


def _load_cache(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if data.get("format") == _CACHE_FORMAT and isinstance(data.get("entries"), dict):
            return data["entries"]
    except (OSError, ValueError):
        pass
    return {}


def _save_cache(path: str, entries: dict) -> None:
    payload = {"format": _CACHE_FORMAT, "entries": entries}
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True)
    os.replace(tmp, path)


def _record(inputs: dict, value: float, err: float, provenance: str,
            effort: int, hodge=None) -> str:
    rec = {"inputs": inputs, "value": value, "err": err,
           "provenance": provenance, "effort": int(effort)}
    if hodge is not None:
        rec["hodge"] = bool(hodge)
    return json.dumps(rec)


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r} ({exc})") from exc


def _cmd_hyp3f2(args) -> int:
    cfg = _cfg_from_args(args)
    raw = {k: getattr(args, k) for k in ("a1", "a2", "a3", "b1", "b2")}
    params = Hyp3F2Params(*(_parse_rational(raw[k]) for k in ("a1", "a2", "a3", "b1", "b2")))
    try:
        res = hyp3f2_unit(params, cfg)
    except BudgetExceededError as exc:
        best = exc.result
        print(_record(raw, best.value, best.err, cfg.strategy, best.effort))
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 1
    print(_record(raw, res.value, res.err, cfg.strategy, res.effort))
    return 0


def _cmd_reg(args) -> int:
    cfg = _cfg_from_args(args)
    if args.kind == "holo":
        rv = regulator.reg_holomorphic(args.N_a, args.N_b, args.N, cfg)
        inputs = {"N": args.N, "a": args.N_a, "b": args.N_b}
        print(_record(inputs, rv.value, rv.err, rv.provenance, rv.effort))
        return 0
    if args.N_c is None or args.N_d is None:
        raise DomainError("reg mixed requires --c and --d")
    rv = regulator.im_reg_mixed(args.N_a, args.N_b, args.N_c, args.N_d, args.N, cfg)
    inputs = {"N": args.N, "a": args.N_a, "b": args.N_b, "c": args.N_c, "d": args.N_d}
    hodge = None
    if fermat.is_prime(args.N) and args.N >= 5:
        w = fermat.WedgeIndex(fermat.FormIndex(args.N, args.N_a, args.N_b),
                              fermat.FormIndex(args.N, args.N_c, args.N_d))
        hodge = fermat.is_hodge(w)
    print(_record(inputs, rv.value, rv.err, rv.provenance, rv.effort, hodge=hodge))
    return 0


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError as exc:
        raise DomainError(f"not a comma-separated integer list: {text!r}") from exc


def _cmd_f_table(args) -> int:
    cfg = _cfg_from_args(args)
    moduli = sorted(set(_parse_int_list(args.N)))
    if not moduli:
        raise DomainError("--N needs at least one modulus")
    for N in moduli:
        if N < 5:
            raise DomainError(f"f-table needs N >= 5, got {N}")
        if not fermat.is_prime(N):
            raise DomainError(f"f-table needs prime N, got {N}")
    explicit_i = _parse_int_list(args.i) if args.i else None

    rows = []
    for N in moduli:
        i_values = explicit_i if explicit_i is not None else list(range(2, N // 4 + 1))
        for i in sorted(set(i_values)):
            rows.append((i, N))

    def fmt(x: float) -> str:
        return repr(x) if args.full else f"{x:.6f}"

    wrote = 0
    failed = 0
    lines = []
    for (i, N) in rows:
        try:
            res = regulator.f_indec(i, N, cfg)
        except (DomainError, BudgetExceededError) as exc:
            failed += 1
            if args.format == "json":
                lines.append(json.dumps({"inputs": {"i": i, "N": N},
                                         "error": str(exc)}))
            else:
                lines.append(f"{i},{N},,,{exc!s}".replace("\n", " "))
            continue
        wrote += 1
        if args.format == "json":
            rec = {"inputs": {"i": i, "N": N},
                   "value": float(fmt(res.value)) if not args.full else res.value,
                   "err": res.err, "provenance": "closed-form",
                   "effort": res.effort, "hodge": res.hodge}
            lines.append(json.dumps(rec))
        else:
            lines.append(f"{i},{N},{fmt(res.value)},{res.err:.3e},"
                         f"{str(res.hodge).lower()}")

    if args.format == "csv":
        sys.stdout.write("i,N,f,err,hodge\n")
    for line in lines:
        sys.stdout.write(line + "\n")
    if wrote == 0 and failed > 0:
        return 1
    return 0


def _cmd_hodge(args) -> int:
    N = args.N
    if args.list:
        labels = [(a, b) for a in range(1, N) for b in range(1, N)
                  if fermat.is_in_IN(a, b, N) and a + b < N]
        count = 0
        for idx1 in range(len(labels)):
            for idx2 in range(idx1, len(labels)):
                a, b = labels[idx1]
                c, d = labels[idx2]
                w = fermat.WedgeIndex(fermat.FormIndex(N, a, b), fermat.FormIndex(N, c, d))
                if fermat.is_hodge(w):
                    print(json.dumps({"inputs": {"N": N, "a": a, "b": b, "c": c, "d": d},
                                      "hodge": True}))
                    count += 1
        print(f"listed {count} Hodge pairs for N={N}", file=sys.stderr)
        return 0
    for name in ("a", "b", "c", "d"):
        if getattr(args, name) is None:
            raise DomainError("hodge needs --list or all of --a --b --c --d")
    w = fermat.WedgeIndex(fermat.FormIndex(N, args.a, args.b),
                          fermat.FormIndex(N, args.c, args.d))
    print(json.dumps({"inputs": {"N": N, "a": args.a, "b": args.b,
                                 "c": args.c, "d": args.d},
                      "hodge": fermat.is_hodge(w)}))
    return 0


def _cmd_verify(args) -> int:
    cfg = _cfg_from_args(args)
    results = verify.run_suite(args.suite, cfg)
    for r in results:
        print(r.line())
    failures = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failures}/{len(results)} properties passed")
    return 0 if failures == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermatreg",
        description="Regulator pairings on Fermat Jacobians via 3F2 values")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hyp3f2", help="evaluate 3F2 at unit argument")
    for name in ("a1", "a2", "a3", "b1", "b2"):
        p.add_argument(f"--{name}", required=True, metavar="p/q")
    _add_cfg_flags(p)
    p.set_defaults(func=_cmd_hyp3f2)

    p = sub.add_parser("reg", help="regulator pairing for given indices")
    p.add_argument("kind", choices=("holo", "mixed"))
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--a", dest="N_a", type=int, required=True)
    p.add_argument("--b", dest="N_b", type=int, required=True)
    p.add_argument("--c", dest="N_c", type=int, default=None)
    p.add_argument("--d", dest="N_d", type=int, default=None)
    _add_cfg_flags(p)
    p.set_defaults(func=_cmd_reg)

    p = sub.add_parser("f-table", help="indecomposability statistics f(i, N)")
    p.add_argument("--N", required=True, metavar="N1,N2,...")
    p.add_argument("--i", default=None, metavar="i1,i2,...",
                   help="row indices (default 2..floor(N/4) per modulus)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--full", action="store_true",
                   help="full float precision instead of six decimals")
    _add_cfg_flags(p)
    p.set_defaults(func=_cmd_f_table)

    p = sub.add_parser("hodge", help="Hodge test for wedges of holomorphic forms")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--list", action="store_true",
                   help="enumerate all unordered Hodge pairs for this modulus")
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.set_defaults(func=_cmd_hodge)

    p = sub.add_parser("verify", help="run invariant and oracle suites")
    p.add_argument("--suite", choices=("special", "fermat", "regulator", "all"),
                   default="all")
    _add_cfg_flags(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cache_path = getattr(args, "cache", None)
    entries = None
    if cache_path:
        entries = _load_cache(cache_path)
        enable_eval_cache(entries)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if cache_path and entries is not None:
            disable_eval_cache()
            try:
                _save_cache(cache_path, entries)
            except OSError as exc:
                print(f"warning: could not write cache: {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
