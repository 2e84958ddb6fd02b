"""Command-line front end.

    berndt-lab verify --suite <name> [--k <real> | --k2 <p/q>] [--tol t]
                     [--max-n N] [--out report.json]
    berndt-lab eval <kind> [flags]     kind: integral moment zeta lambert eisenstein
    berndt-lab table --max-n N [--out polys.json]

Numeric flags accept decimals or rational p/q syntax.  Exit codes:
0 all pass, 1 any failure, 2 usage error.
"""

import argparse
import json
import math
import sys
from fractions import Fraction

from . import barnes, lambert, moments, quadrature, suites
from ._kernels import BACKEND
from .elliptic import modulus_from_k
from .errors import DomainError
from .exact import polys_to_json
from .quadrature import IntegralSpec

USAGE_EXIT = 2


def parse_real(text):
    if "/" in text:
        return float(Fraction(text))
    return float(text)


def parse_rational(text):
    return Fraction(text)


def _print_report(report, out_path=None):
    width = max((len(e["identity_id"]) for e in report.entries), default=10)
    for e in report.entries:
        status = "PASS" if e["pass"] else "FAIL"
        if e["policy"] == "exact":
            detail = "exact"
        else:
            detail = f"abs={e['abs_err']:.3e} rel={e['rel_err']:.3e} tol={e['tolerance']:.1e} ({e['policy']})"
        print(f"[{status}] {e['identity_id']:<{width}}  {detail}")
    n_pass = sum(1 for e in report.entries if e["pass"])
    print(f"-- suite '{report.suite_id}': {n_pass}/{len(report.entries)} pass (backend: {BACKEND})")
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(report.to_json())
        print(f"-- report written to {out_path}")
    return 0 if report.all_pass else 1


def _cmd_verify(args):
    report = suites.run_suite(args.suite, max_n=args.max_n)
    return _print_report(report, args.out)


def _emit(value, err, extra=None):
    payload = {"value": value if not isinstance(value, complex) else {"re": value.real, "im": value.imag}}
    payload["err_estimate"] = err
    payload.update(extra or {})
    print(json.dumps(payload, default=str))
    return 0


def _cmd_eval(args):
    kind = args.kind
    if kind == "integral":
        spec = IntegralSpec(args.sign, parse_real(args.s), args.p, parse_real(args.a), parse_real(args.b))
        r = quadrature.berndt_integral(spec, tol=args.tol)
        print(f"I_{args.sign}(s={args.s}, p={args.p}) = {r.value!r}")
        return _emit(r.value, r.err_estimate, {"evaluations": r.evaluations})
    if kind == "moment":
        k2 = parse_rational(args.k2)
        if args.method == "exact":
            v = (
                moments.moment_plus_exact(args.n, k2)
                if args.family == "plus"
                else moments.moment_minus_exact(args.n, k2)
            )
            print(f"I_{args.n}({args.family}) = {v}")
            return _emit(str(v), 0.0, {"route": "exact"})
        if args.method == "recur":
            v = (
                moments.moment_plus_recur(args.n, k2)
                if args.family == "plus"
                else moments.moment_minus_recur(args.n, k2)
            )
            print(f"I_{args.n}({args.family}) = {v}")
            return _emit(str(v), 0.0, {"route": "recurrence"})
        m = modulus_from_k(math.sqrt(float(k2)))
        if args.method == "lambert":
            v = (
                lambert.moment_plus_lambert(args.n + 1, m)
                if args.family == "plus"
                else lambert.moment_minus_lambert(args.n, m)
            )
            print(f"I_{args.n}({args.family}) ~ {v}")
            return _emit(v, 1e-12 * max(1.0, abs(v)), {"route": "lambert"})
        if args.method == "eisenstein":
            win = lambert.LatticeWindow(args.M)
            v = (
                lambert.eisenstein_plus(args.n, m, win)
                if args.family == "plus"
                else lambert.eisenstein_minus(args.n, m, win)
            )
            print(f"I_{args.n}({args.family}) ~ {v}")
            return _emit(v, float("nan"), {"route": "eisenstein", "M": args.M})
        r = quadrature.kuznetsov_moment_quad(args.family, args.n, m, tol=args.tol)
        print(f"I_{args.n}({args.family}) ~ {r.value}")
        return _emit(r.value, r.err_estimate, {"route": "quadrature"})
    if kind == "zeta":
        z = barnes.barnes_zeta_repeated(
            parse_real(args.s),
            complex(parse_real(args.w)),
            complex(parse_real(args.a), parse_real(args.ai)),
            complex(parse_real(args.b), parse_real(args.bi)),
            args.p,
            alternating=args.alternating,
            tol=args.tol,
        )
        print(f"zeta = {z.value!r}  (err <= {z.err_estimate:.2e}, {z.terms_used} terms)")
        return _emit(z.value, z.err_estimate, {"terms": z.terms_used})
    if kind == "lambert":
        if args.k is not None:
            q = modulus_from_k(parse_real(args.k)).nome
        else:
            q = parse_real(args.q)
        s = lambert.lambert_sum(args.exp, q, args.variant)
        print(f"lambert({args.variant}, exp={args.exp}, q={q:.6g}) = {s.value!r}")
        return _emit(s.value, s.err_estimate, {"terms": s.terms_used})
    if kind == "eisenstein":
        m = modulus_from_k(parse_real(args.k))
        win = lambert.LatticeWindow(args.M)
        v = (
            lambert.eisenstein_plus(args.n, m, win)
            if args.family == "plus"
            else lambert.eisenstein_minus(args.n, m, win)
        )
        print(f"I_{args.n}({args.family}) ~ {v}  (M={args.M})")
        return _emit(v, float("nan"), {"M": args.M})
    raise DomainError(f"unknown eval kind {kind!r}")


def _cmd_table(args):
    names, polys = [], []
    for n in range(args.max_n + 1):
        names.append(f"P{n}")
        polys.append(moments.p_poly(n))
    for n in range(args.max_n + 1):
        names.append(f"Q{n}")
        polys.append(moments.q_poly(n))
    text = polys_to_json(polys, names)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="berndt-lab", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run an identity suite")
    v.add_argument("--suite", required=True, choices=suites.SUITE_NAMES + ("all",))
    v.add_argument("--k", type=parse_real, default=None, help="override modulus (informational)")
    v.add_argument("--k2", type=parse_rational, default=None)
    v.add_argument("--tol", type=parse_real, default=None)
    v.add_argument("--max-n", type=int, default=40, dest="max_n")
    v.add_argument("--out", default=None)
    v.set_defaults(fn=_cmd_verify)

    e = sub.add_parser("eval", help="single evaluations")
    es = e.add_subparsers(dest="kind", required=True)

    ei = es.add_parser("integral")
    ei.add_argument("--sign", required=True, choices=("plus", "minus"))
    ei.add_argument("--s", required=True)
    ei.add_argument("--p", type=int, default=1)
    ei.add_argument("--a", default="1")
    ei.add_argument("--b", default="1")
    ei.add_argument("--tol", type=parse_real, default=1e-10)

    em = es.add_parser("moment")
    em.add_argument("--family", required=True, choices=("plus", "minus"))
    em.add_argument("--n", type=int, required=True)
    em.add_argument("--k2", required=True)
    em.add_argument("--exact", dest="method", action="store_const", const="exact")
    em.add_argument(
        "--method", choices=("exact", "recur", "lambert", "eisenstein", "quad"), default="exact"
    )
    em.add_argument("--M", type=int, default=200)
    em.add_argument("--tol", type=parse_real, default=1e-8)

    ez = es.add_parser("zeta")
    ez.add_argument("--s", required=True)
    ez.add_argument("--w", default="1")
    ez.add_argument("--a", default="1")
    ez.add_argument("--ai", default="0")
    ez.add_argument("--b", default="1")
    ez.add_argument("--bi", default="0")
    ez.add_argument("--p", type=int, default=1)
    ez.add_argument("--alternating", action="store_true")
    ez.add_argument("--tol", type=parse_real, default=1e-10)

    el = es.add_parser("lambert")
    el.add_argument("--exp", type=int, required=True)
    el.add_argument("--q", default=None)
    el.add_argument("--k", default=None)
    el.add_argument("--variant", default="plus_alt", choices=("plus_alt", "minus_alt", "even_den", "sinh"))

    ee = es.add_parser("eisenstein")
    ee.add_argument("--family", required=True, choices=("plus", "minus"))
    ee.add_argument("--n", type=int, required=True)
    ee.add_argument("--k", required=True)
    ee.add_argument("--M", type=int, default=200)

    e.set_defaults(fn=_cmd_eval)

    t = sub.add_parser("table", help="emit exact polynomial tables as JSON")
    t.add_argument("--max-n", type=int, required=True, dest="max_n")
    t.add_argument("--out", default=None)
    t.set_defaults(fn=_cmd_table)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return USAGE_EXIT if exc.code not in (0,) else 0
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
