"""Command-line front end: ``tribospin <command> [options]``.

Exit codes: 0 success, 1 usage error, 2 math error (zero denominator,
zero divisor, repeated roots), 3 verification findings that contradict
the known-discrepancy manifest (or any discrepancy under ``--strict``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import gtn, spinor
from .errors import MathError, TribospinError
from .families import family_lookup, registry
from .identities import report_json, unexpected, verify_all
from .poly_spinor import PolySequenceParams, poly_spinor_term
from .quaternion import gtn_quaternion
from .ring import Polynomial, format_rational

DEFAULT_MAX_N = 10 ** 6
DEFAULT_MAX_DET_N = 12

CSV_HELP = """\
CSV columns:
  terms       n,value
  quaternion  n,q0,q1,q2,q3
  spinor      n,c1_re,c1_j,c2_re,c2_j
  binet       n,re,im                  (scalar)
              n,c1_re,c1_j,c2_re,c2_j  (--spinor; real parts)
  sum         kind,m,value  |  kind,m,c1_re,c1_j,c2_re,c2_j
  det         method,n,value  |  method,n,c1_re,c1_j,c2_re,c2_j
  families    name,group,a,b,c,r,s,t
  verify      theorem,identity_index,family,n_max,status,detail
  poly        n,slot,coefficients (space separated, lowest degree first)

Environment:
  TRIBOSPIN_MAX_N      cap on n; defaults to 1000000 for term commands
                       and 12 for determinants
"""


class UsageError(TribospinError):
    pass


def _max_n(det=False):
    """``TRIBOSPIN_MAX_N`` when set, else the per-command default."""
    raw = os.environ.get("TRIBOSPIN_MAX_N")
    if raw is None:
        return DEFAULT_MAX_DET_N if det else DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise UsageError("TRIBOSPIN_MAX_N must be an integer") from None


def parse_range(text: str, det=False) -> list[int]:
    """``"5"`` or ``"0..7"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or LO..HI") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"bad range {text!r}; need 0 <= LO <= HI")
    cap = _max_n(det)
    if hi > cap:
        raise UsageError(f"n={hi} exceeds the cap {cap} (set TRIBOSPIN_MAX_N to raise it)")
    return list(range(lo, hi + 1))


def _fmt_float(x: float) -> str:
    return format(x, ".12g")


def _complex_json(z: complex):
    return {"re": _fmt_float(z.real), "im": _fmt_float(z.imag)}


def resolve_params(args) -> gtn.SequenceParams:
    """Exactly one of ``--family`` / ``--params``; ``--a/--b/--c`` override initials."""
    if (args.family is None) == (args.params is None):
        raise UsageError("give exactly one of --family or --params")
    overrides = [None if v is None else Fraction(v) for v in (args.a, args.b, args.c)]
    if args.family is not None:
        return family_lookup(args.family).instantiate(*overrides)
    try:
        p = gtn.SequenceParams.parse(args.params)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    vals = [p.initials[i] if v is None else v for i, v in enumerate(overrides)]
    return p.with_initials(*vals)


def _spinor_row(sp):
    return [format_rational(x) for x in sp.components]


def _emit(out, fmt, payload_json, header, rows, pretty_lines):
    if fmt == "json":
        out.write(json.dumps(payload_json, indent=None if not isinstance(payload_json, list) else 2))
        out.write("\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        out.write(buf.getvalue())
    else:
        for line in pretty_lines:
            out.write(line + "\n")


def _one_or_list(ns, objs):
    return objs[0] if len(ns) == 1 else [{"n": n, **o} if isinstance(o, dict) else {"n": n, "value": o}
                                         for n, o in zip(ns, objs)]


# -- command handlers ------------------------------------------------------------

def cmd_terms(args, out):
    p = resolve_params(args)
    ns = parse_range(args.n)
    if args.method == "matrix":
        vals = [gtn.term(p, n) if n < 2 else gtn.term_by_matrix(p, n) for n in ns]
    else:
        vals = gtn.terms(p, ns[-1] + 1)[ns[0]:]
    strs = [format_rational(v) for v in vals]
    _emit(out, args.format or "pretty", strs, ["n", "value"], zip(ns, strs), [",".join(strs)])


def cmd_quaternion(args, out):
    p = resolve_params(args)
    ns = parse_range(args.n)
    qs = [gtn_quaternion(p, n) for n in ns]
    _emit(out, args.format or "json", _one_or_list(ns, [q.to_json() for q in qs]),
          ["n", "q0", "q1", "q2", "q3"],
          ([n, *(format_rational(x) for x in q.components)] for n, q in zip(ns, qs)),
          [f"{n}: {q}" for n, q in zip(ns, qs)])


def cmd_spinor(args, out):
    p = resolve_params(args)
    ns = parse_range(args.n)
    if args.method == "matrix":
        sps = [spinor.spinor_term_by_matrix(p, n) for n in ns]
    else:
        sps = spinor.spinor_terms(p, ns[-1] + 1)[ns[0]:]
    _emit(out, args.format or "json", _one_or_list(ns, [s.to_json() for s in sps]),
          ["n", "c1_re", "c1_j", "c2_re", "c2_j"],
          ([n, *_spinor_row(s)] for n, s in zip(ns, sps)),
          [f"{n}: {s}" for n, s in zip(ns, sps)])


def cmd_binet(args, out):
    p = resolve_params(args)
    ns = parse_range(args.n)
    if args.spinor:
        vals = [spinor.spinor_binet(p, n) for n in ns]
        js = [{"c1": {"re": _complex_json(a.re), "j": _complex_json(a.jpart)},
               "c2": {"re": _complex_json(b.re), "j": _complex_json(b.jpart)}} for a, b in vals]
        rows = ([n, *(_fmt_float(z.real) for z in (a.re, a.jpart, b.re, b.jpart))]
                for n, (a, b) in zip(ns, vals))
        pretty = [f"{n}: [{a}; {b}]" for n, (a, b) in zip(ns, vals)]
        header = ["n", "c1_re", "c1_j", "c2_re", "c2_j"]
    else:
        vals = [gtn.binet_term(p, n) for n in ns]
        js = [_complex_json(z) for z in vals]
        rows = ([n, _fmt_float(z.real), _fmt_float(z.imag)] for n, z in zip(ns, vals))
        pretty = [f"{n}: {_fmt_float(z.real)}{z.imag:+.12g}i" for n, z in zip(ns, vals)]
        header = ["n", "re", "im"]
    _emit(out, args.format or "json", _one_or_list(ns, js), header, rows, pretty)


_SCALAR_SUMS = {
    "first": gtn.sum_first,
    "even": gtn.sum_even,
    "odd": gtn.sum_odd,
    "even-s1": lambda p, m: gtn.sum_special_s1(p, m, "even"),
    "odd-s1": lambda p, m: gtn.sum_special_s1(p, m, "odd"),
}
_SPINOR_SUMS = {
    "first": spinor.spinor_sum_first,
    "even": spinor.spinor_sum_even,
    "odd": spinor.spinor_sum_odd,
    "even-s1": lambda p, m: spinor.spinor_sum_special_s1(p, m, "even"),
    "odd-s1": lambda p, m: spinor.spinor_sum_special_s1(p, m, "odd"),
}


def cmd_sum(args, out):
    p = resolve_params(args)
    m = args.m
    if m < 0:
        raise UsageError("--m must be non-negative")
    if m > _max_n():
        raise UsageError(f"m={m} exceeds the cap {_max_n()}")
    if args.spinor:
        v = _SPINOR_SUMS[args.kind](p, m)
        _emit(out, args.format or "json", v.to_json(), ["kind", "m", "c1_re", "c1_j", "c2_re", "c2_j"],
              [[args.kind, m, *_spinor_row(v)]], [str(v)])
    else:
        v = format_rational(_SCALAR_SUMS[args.kind](p, m))
        _emit(out, args.format or "pretty", v, ["kind", "m", "value"], [[args.kind, m, v]], [v])


def cmd_det(args, out):
    p = resolve_params(args)
    ns = parse_range(args.n, det=True)
    if args.spinor:
        fn = spinor.spinor_det_hessenberg if args.method == "hessenberg" else spinor.spinor_det_cereceda
        vals = [fn(p, n) for n in ns]
        _emit(out, args.format or "json", _one_or_list(ns, [v.to_json() for v in vals]),
              ["method", "n", "c1_re", "c1_j", "c2_re", "c2_j"],
              ([args.method, n, *_spinor_row(v)] for n, v in zip(ns, vals)),
              [f"{n}: {v}" for n, v in zip(ns, vals)])
    else:
        fn = gtn.det_term_hessenberg if args.method == "hessenberg" else gtn.det_term_cereceda
        vals = [format_rational(fn(p, n)) for n in ns]
        _emit(out, args.format or "pretty", vals, ["method", "n", "value"],
              ([args.method, n, v] for n, v in zip(ns, vals)), [",".join(vals)])


def cmd_gf_check(args, out):
    p = resolve_params(args)
    ok = spinor.generating_function_check(p, args.N)
    num = spinor.gf_numerator(p)
    polys = spinor.gf_numerator_polynomials(p)
    slots = ("c1_re", "c1_j", "c2_re", "c2_j")
    payload = {"ok": ok, "N": args.N, "numerator": [s.to_json() for s in num],
               "denominator": [format_rational(x) for x in (1, -p.r, -p.s, -p.t)]}
    _emit(out, args.format or "json", payload, ["slot", "numerator_coefficients", "ok"],
          ([slot, " ".join(poly.to_json()), ok] for slot, poly in zip(slots, polys)),
          [f"ok: {ok}", *(f"{slot}: {' '.join(poly.to_json())}" for slot, poly in zip(slots, polys))])
    return 0 if ok else 3


def cmd_verify(args, out):
    fams = None
    if args.family:
        fams = [family_lookup(name) for name in args.family]
        for f in fams:
            if f.generic:
                raise UsageError(f"family {f.name!r} is generic; pick a concrete family")
    report = verify_all(args.n_max, fams)
    bad = unexpected(report)
    fmt = args.format or "json"
    if fmt == "json":
        out.write(report_json(report) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["theorem", "identity_index", "family", "n_max", "status", "detail"])
        for e in report:
            w.writerow([e.theorem, e.identity_index, e.family, e.n_max, e.status, e.detail])
        out.write(buf.getvalue())
    else:
        for e in report:
            out.write(f"{e.status:<10} {e.family:<32} {e.theorem}#{e.identity_index}\n")
        out.write(f"{len(report)} checks, {sum(e.status == 'DISCREPANT' for e in report)} discrepant, "
                  f"{len(bad)} unexpected\n")
    if bad:
        for e in bad:
            print(f"unexpected: {e.theorem}#{e.identity_index} {e.family}: {e.status} {e.detail}",
                  file=sys.stderr)
        return 3
    if args.strict and any(e.status != "PASS" for e in report):
        return 3
    return 0


def cmd_families(args, out):
    fams = registry()
    rows = [[f.to_json()[k] for k in ("name", "group", "a", "b", "c", "r", "s", "t")] for f in fams]
    fmt = args.format or "pretty"
    if fmt == "json":
        out.write(json.dumps([f.to_json() for f in fams], indent=2) + "\n")
    else:
        width = max(len(f.name) for f in fams)
        _emit(out, fmt, None, ["name", "group", "a", "b", "c", "r", "s", "t"], rows,
              [f"{r[0]:<{width}}  V({r[2]},{r[3]},{r[4]};{r[5]},{r[6]},{r[7]})" for r in rows])


def _parse_poly(text):
    try:
        return Polynomial([Fraction(x) for x in text.split(",") if x.strip()])
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad polynomial {text!r}; give comma-separated coefficients, lowest first") from None


def cmd_poly(args, out):
    params = PolySequenceParams(*(_parse_poly(getattr(args, k)) for k in "abcrst"))
    ns = parse_range(args.n)
    vals = [poly_spinor_term(params, n) for n in ns]
    if args.at is not None:
        x0 = Fraction(args.at)
        sps = [v.evaluate(x0) for v in vals]
        _emit(out, args.format or "json", _one_or_list(ns, [s.to_json() for s in sps]),
              ["n", "c1_re", "c1_j", "c2_re", "c2_j"],
              ([n, *_spinor_row(s)] for n, s in zip(ns, sps)), [f"{n}: {s}" for n, s in zip(ns, sps)])
        return
    slots = ("c1re", "c1j", "c2re", "c2j")
    _emit(out, args.format or "json", _one_or_list(ns, [v.to_json() for v in vals]),
          ["n", "slot", "coefficients"],
          ([n, slot, " ".join(getattr(v, slot).to_json())] for n, v in zip(ns, vals) for slot in slots),
          [f"{n}: " + "; ".join(f"{slot}=[{', '.join(getattr(v, slot).to_json())}]" for slot in slots)
           for n, v in zip(ns, vals)])


# -- parser ------------------------------------------------------------------------

def _seq_opts(p):
    p.add_argument("--family", help="registry name, e.g. tribonacci, perrin, 3-primes")
    p.add_argument("--params", help="explicit a,b,c,r,s,t (rationals as p/q)")
    p.add_argument("--a", help="override V0 (required for generic families)")
    p.add_argument("--b", help="override V1")
    p.add_argument("--c", help="override V2")


def _fmt_opt(p):
    p.add_argument("--format", choices=("json", "csv", "pretty"))
    p.add_argument("--output", "-o", help="write to this file instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tribospin", description="Generalized Tribonacci numbers, split quaternions and hyperbolic spinors.",
        epilog=CSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("terms", help="sequence terms V(n)")
    _seq_opts(p)
    p.add_argument("--n", default="0..9", help="index or inclusive range LO..HI")
    p.add_argument("--method", choices=("recurrence", "matrix"), default="recurrence")
    _fmt_opt(p)
    p.set_defaults(func=cmd_terms)

    p = sub.add_parser("quaternion", help="split quaternions V(n) + V(n+1)i + V(n+2)j + V(n+3)k")
    _seq_opts(p)
    p.add_argument("--n", default="0")
    _fmt_opt(p)
    p.set_defaults(func=cmd_quaternion)

    p = sub.add_parser("spinor", help="hyperbolic spinors phi(n)")
    _seq_opts(p)
    p.add_argument("--n", default="0")
    p.add_argument("--method", choices=("recurrence", "matrix"), default="recurrence")
    _fmt_opt(p)
    p.set_defaults(func=cmd_spinor)

    p = sub.add_parser("binet", help="Binet closed form (floating point)")
    _seq_opts(p)
    p.add_argument("--n", default="0")
    p.add_argument("--spinor", action="store_true", help="evaluate the spinor form")
    _fmt_opt(p)
    p.set_defaults(func=cmd_binet)

    p = sub.add_parser("sum", help="closed-form partial sums")
    _seq_opts(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--kind", choices=tuple(_SCALAR_SUMS), default="first")
    p.add_argument("--spinor", action="store_true")
    _fmt_opt(p)
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("det", help="terms as determinants")
    _seq_opts(p)
    p.add_argument("--n", default="0")
    p.add_argument("--method", choices=("hessenberg", "cereceda"), default="hessenberg")
    p.add_argument("--spinor", action="store_true")
    _fmt_opt(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("gf-check", help="verify the spinor generating function exactly")
    _seq_opts(p)
    p.add_argument("--N", type=int, default=64)
    _fmt_opt(p)
    p.set_defaults(func=cmd_gf_check)

    p = sub.add_parser("verify", help="run the conjugation-identity suite")
    p.add_argument("--family", action="append", help="restrict to these families (repeatable)")
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--strict", action="store_true", help="exit 3 on any discrepancy, known or not")
    _fmt_opt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("families", help="list the family registry")
    p.add_argument("--list", action="store_true", help="list all families (the default)")
    _fmt_opt(p)
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("poly", help="polynomial spinors; coefficients lowest degree first")
    for k, d in zip("abcrst", ("0", "1", "1", "1", "1", "1")):
        p.add_argument(f"--{k}", default=d, help=f"polynomial {k}(x), e.g. 1,0,1 for 1+x^2")
    p.add_argument("--n", default="0")
    p.add_argument("--at", help="evaluate at this rational x instead of printing polynomials")
    _fmt_opt(p)
    p.set_defaults(func=cmd_poly)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    buf = io.StringIO()
    try:
        code = args.func(args, buf) or 0
    except MathError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TribospinError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
