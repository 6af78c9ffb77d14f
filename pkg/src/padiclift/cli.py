"""Command-line surface: one subcommand per operation plus verify suites.

Machine-readable output (json, csv, or text key=value rows) goes to stdout;
a one-line human summary goes to stderr.  Exit codes: 0 all good, 1 a
verification failed, 2 usage or domain error, 3 precision or series
truncation error.  Reports are byte-identical across runs with the same
flags and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import charsum, gamma
from .buium import p_derivation
from .errors import PrecisionError
from .gfq import fq_make
from .suites import CheckRecord, RunConfig, jsonable, run_suites
from .witt_zq import frobenius_lift, parse_zq, teichmuller, zq_ring
from .zp_ring import from_integer, parse_padic


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(fmt: str, rows: list[dict]) -> None:
    if fmt == "json":
        out = rows[0] if len(rows) == 1 else rows
        print(_dumps(out))
    elif fmt == "csv":
        keys = sorted({k for row in rows for k in row})
        print(",".join(keys))
        for row in rows:
            cells = []
            for k in keys:
                v = row.get(k, "")
                if isinstance(v, (dict, list)):
                    v = _dumps(v).replace(",", ";")
                cells.append(str(v))
            print(",".join(cells))
    elif fmt == "text":
        for row in rows:
            print(" ".join(f"{k}={_dumps(row[k]) if isinstance(row[k], (dict, list)) else row[k]}"
                           for k in sorted(row)))
    else:
        raise ValueError(f"unknown format {fmt!r}")


def _parse_element(args):
    """Build a Z_q element from --elem text or -x (integer / comma coeffs)."""
    if args.elem:
        return parse_zq(args.elem)
    ring = zq_ring(fq_make(args.p, args.n), args.N)
    raw = args.x
    if raw is None:
        raise ValueError("provide -x or --elem")
    if ";" in raw:
        return parse_zq(raw)
    if "," in raw:
        return ring.element([int(c) for c in raw.split(",")])
    return ring.from_int(int(raw))


# ---------------------------------------------------------------------------
# handlers

def cmd_teich(args) -> int:
    field = fq_make(args.p, args.n)
    if "," in args.v:
        v = field.element([int(c) for c in args.v.split(",")])
    else:
        v = field.from_int(int(args.v))
    t = teichmuller(v, args.N)
    payload = {"op": "teichmuller", **jsonable(t), "v": list(v.coeffs)}
    if args.n == 1:
        payload["digits"] = payload["coeffs"][0]
    _emit(args.format, [payload])
    print(f"teichmuller({v.to_int()}) in Z_{args.p}^{args.n} at N={args.N}: "
          f"{[c.value for c in t.coeffs]}", file=sys.stderr)
    return 0


def cmd_frobenius(args) -> int:
    x = _parse_element(args)
    y = frobenius_lift(x)
    _emit(args.format, [{"op": "frobenius_lift", **jsonable(y), "input": jsonable(x)}])
    print(f"frobenius_lift -> {[c.value for c in y.coeffs]}", file=sys.stderr)
    return 0


def cmd_delta(args) -> int:
    x = _parse_element(args)
    d = p_derivation(x)
    _emit(args.format, [{"op": "p_derivation", **jsonable(d), "input": jsonable(x)}])
    print(f"p_derivation -> {[c.value for c in d.coeffs]}", file=sys.stderr)
    return 0


def cmd_gamma(args) -> int:
    rows = []
    if not args.sweep and args.x is None:
        raise ValueError("provide -x or --sweep")
    if args.sweep:
        lo, _, hi = args.sweep.partition(":")
        for m in range(int(lo), int(hi)):
            v = gamma.gamma_p_integer(m, args.p, args.N)
            rows.append({"op": "gamma_p", "m": m, **jsonable(v)})
    else:
        x = from_integer(int(args.x), args.p, args.N) if ";" not in args.x \
            else parse_padic(args.x)
        v = gamma.gamma_p(x)
        rows.append({"op": "gamma_p", "x": jsonable(x), **jsonable(v)})
    _emit(args.format, rows)
    print(f"gamma_p: {len(rows)} value(s) at p={args.p}, N={args.N}", file=sys.stderr)
    return 0


def cmd_beta(args) -> int:
    a = from_integer(args.a, args.p, args.N)
    b = from_integer(args.b, args.p, args.N)
    v = gamma.beta_p(a, b)
    _emit(args.format, [{"op": "beta_p", "a": args.a, "b": args.b, **jsonable(v)}])
    print(f"beta_p({args.a},{args.b}) = {v.value} mod {args.p}^{args.N}", file=sys.stderr)
    return 0


def cmd_jacobi(args) -> int:
    if not args.q and not args.p:
        raise ValueError("provide -q or -p")
    field = charsum.field_for_order(args.q) if args.q else fq_make(args.p, args.n)
    v = charsum.jacobi_sum(args.a, args.b, field, args.N)
    _emit(args.format, [{"op": "jacobi_sum", "a": args.a, "b": args.b,
                         "q": field.q, **jsonable(v)}])
    print(f"jacobi_sum({args.a},{args.b}) over F_{field.q}: "
          f"{[c.value for c in v.coeffs]}", file=sys.stderr)
    return 0


def cmd_gauss(args) -> int:
    v = charsum.gauss_sum(args.a, args.p, args.N, args.K)
    used = charsum.series_terms_used(args.p, args.N, args.K)
    _emit(args.format, [{"op": "gauss_sum", "a": args.a, "K": used, **jsonable(v)}])
    print(f"gauss_sum({args.a}) at p={args.p}, N={args.N}: pi-coeffs "
          f"{list(v.coeffs)}", file=sys.stderr)
    return 0


def cmd_gk(args) -> int:
    exps = [args.a] if args.a is not None else list(range(1, args.p - 1))
    used = charsum.series_terms_used(args.p, args.N, args.K)
    rows = []
    ok = True
    for a in exps:
        rep = charsum.gross_koblitz_check(a, args.p, args.N, args.K)
        ok = ok and rep.passed
        rows.append({"op": "gross_koblitz_check", "a": a, "K": used,
                     "passed": rep.passed,
                     "lhs": jsonable(rep.lhs), "rhs": jsonable(rep.rhs)})
    _emit(args.format, rows)
    print(f"gross_koblitz_check p={args.p}: "
          f"{sum(r['passed'] for r in rows)}/{len(rows)} passed", file=sys.stderr)
    return 0 if ok else 1


def cmd_fermat(args) -> int:
    brute = charsum.count_fermat_brute(args.q, args.m)
    precision = args.N or charsum.fermat_precision(args.q, args.m)
    viaj = charsum.count_fermat_jacobi(args.q, args.m, precision)
    field = charsum.field_for_order(args.q)
    payload = {"op": "fermat_count", "q": args.q, "m": args.m,
               "p": field.p, "n": field.n, "N": precision,
               "brute": brute, "jacobi": viaj, "match": brute == viaj}
    _emit(args.format, [payload])
    print(f"fermat q={args.q} m={args.m}: brute={brute} jacobi={viaj}",
          file=sys.stderr)
    return 0 if brute == viaj else 1


def cmd_verify(args) -> int:
    cfg = RunConfig(p=args.p, n=args.n, precision=args.N, terms=args.K,
                    seed=args.seed, count=args.count, suite=args.suite,
                    fmt=args.format, fixtures=args.fixtures)
    records = run_suites(cfg)
    report = {
        "config": {"suite": cfg.suite, "p": cfg.p, "n": cfg.n, "N": cfg.precision,
                   "K": cfg.terms, "seed": cfg.seed, "count": cfg.count},
        "records": [asdict(r) for r in records],
        "passed": all(r.passed for r in records),
    }
    if args.format == "json":
        print(_dumps(report))
    else:
        _emit(args.format, [asdict(r) for r in records])

    by_suite: dict[str, list[CheckRecord]] = {}
    for r in records:
        by_suite.setdefault(r.suite, []).append(r)
    for name, rs in by_suite.items():
        checks = sum(r.checks for r in rs)
        fails = sum(r.failures for r in rs)
        status = "ok" if fails == 0 else "FAILED"
        print(f"suite {name}: {checks - fails}/{checks} checks passed [{status}]",
              file=sys.stderr)

    if args.fixtures:
        import os
        if os.path.exists(args.fixtures):
            with open(args.fixtures, "r", encoding="utf-8") as fh:
                expected = json.load(fh)
            if expected != json.loads(_dumps(report)):
                print(f"fixtures mismatch against {args.fixtures}", file=sys.stderr)
                return 1
            print(f"fixtures match {args.fixtures}", file=sys.stderr)
        else:
            with open(args.fixtures, "w", encoding="utf-8") as fh:
                fh.write(_dumps(report) + "\n")
            print(f"fixtures written to {args.fixtures}", file=sys.stderr)

    return 0 if report["passed"] else 1


# ---------------------------------------------------------------------------

def _add_common(sp, *, p=True, n=False, N=True, K=False):
    if p:
        sp.add_argument("-p", type=int, required=True, help="prime")
    if n:
        sp.add_argument("-n", type=int, default=1, help="extension degree")
    if N:
        sp.add_argument("-N", type=int, required=True, help="p-adic precision")
    if K:
        sp.add_argument("-K", type=int, default=0, help="series term hint")
    sp.add_argument("--format", choices=("json", "csv", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padiclift",
        description="Exact truncated p-adic arithmetic, Frobenius lifts, "
                    "p-adic Gamma/Beta, and character sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("teich", help="Teichmuller lift of a field element")
    _add_common(sp, n=True)
    sp.add_argument("-v", required=True, help="field element: integer or comma coeffs")
    sp.set_defaults(handler=cmd_teich)

    for name, handler, hint in (("frobenius", cmd_frobenius, "canonical Frobenius lift"),
                                ("delta", cmd_delta, "p-derivation (phi(x) - x^p)/p")):
        sp = sub.add_parser(name, help=hint)
        _add_common(sp, n=True)
        sp.add_argument("-x", help="element: integer, comma coeffs, or canonical text")
        sp.add_argument("--elem", help="canonical text form p=..;n=..;N=..;coeffs=[..]")
        sp.set_defaults(handler=handler)

    sp = sub.add_parser("gamma", help="Morita p-adic Gamma")
    _add_common(sp)
    sp.add_argument("-x", help="argument: integer or canonical text")
    sp.add_argument("--sweep", help="emit a table for m in lo:hi")
    sp.set_defaults(handler=cmd_gamma)

    sp = sub.add_parser("beta", help="p-adic Beta unit")
    _add_common(sp)
    sp.add_argument("-a", type=int, required=True)
    sp.add_argument("-b", type=int, required=True)
    sp.set_defaults(handler=cmd_beta)

    sp = sub.add_parser("jacobi", help="Jacobi sum as a character convolution")
    _add_common(sp, p=False, n=False)
    sp.add_argument("-q", type=int, help="field order (prime power)")
    sp.add_argument("-p", type=int, help="prime (with -n)")
    sp.add_argument("-n", type=int, default=1)
    sp.add_argument("-a", type=int, required=True)
    sp.add_argument("-b", type=int, required=True)
    sp.set_defaults(handler=cmd_jacobi)

    sp = sub.add_parser("gauss", help="Gauss sum in the pi-ring")
    _add_common(sp, K=True)
    sp.add_argument("-a", type=int, required=True)
    sp.set_defaults(handler=cmd_gauss)

    sp = sub.add_parser("gk-check", aliases=["gk"],
                        help="Gross-Koblitz cross-check")
    _add_common(sp, K=True)
    sp.add_argument("-a", type=int, help="single exponent; default all 0<a<p-1")
    sp.set_defaults(handler=cmd_gk)

    sp = sub.add_parser("fermat-count", aliases=["fermat"],
                        help="Fermat curve point count, brute vs Jacobi")
    sp.add_argument("-q", type=int, required=True)
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("-N", type=int, default=0, help="0 = auto precision")
    sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sp.set_defaults(handler=cmd_fermat)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", default="all",
                    choices=("carry", "buium", "gamma", "charsum", "all"))
    sp.add_argument("-p", type=int)
    sp.add_argument("-n", type=int)
    sp.add_argument("-N", type=int)
    sp.add_argument("-K", type=int, default=0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=200,
                    help="random cases per seeded sweep")
    sp.add_argument("--fixtures", help="JSON regression file to write or compare")
    sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sp.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except PrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
