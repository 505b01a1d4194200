"""Command-line surface: every computation as a reproducible one-line record.

Usage examples:

    cupcurve weil --curve p:7,l:3,a:0,b:9 --P 0,3 --Q 3,1
    cupcurve cup --curve p:7,l:3,a:0,b:9 --a "P=0,3;c=0" --b "P=3,1;c=1"
    cupcurve triple --curve p:7,l:3,a:0,b:9 --t "t0=1;phi=0,1" \
        --a "P=inf;c=1" --b "P=0,3;c=0"
    cupcurve dlegendre --curve p:7,l:3,a:0,b:-3 --point 0,2
    cupcurve span --curve p:7,l:3,a:0,b:9
    cupcurve genus2 verify 439
    cupcurve genus2 scan 10000 --csv --output report.csv

Exit codes: 0 success, 1 usage/parse error, 2 computation error (cap exceeded
or a violated precondition).  Identical argv produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys

from . import cohomology, genus2, pairing
from .cohomology import CohomologyError, h1_new
from .curve import BudgetError, CurveError, curve_new
from .field import ExtensionCapError, FieldError, make_context
from .frobenius import PicHom, legendre_derivative, restrict_hom


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_kv(spec, keys, what):
    parts = {}
    for chunk in spec.split(","):
        if ":" not in chunk:
            raise UsageError(f"bad {what} spec {spec!r}: expected key:value pairs")
        k, v = chunk.split(":", 1)
        parts[k.strip()] = v.strip()
    missing = [k for k in keys if k not in parts]
    if missing:
        raise UsageError(f"bad {what} spec {spec!r}: missing {','.join(missing)}")
    return parts


def parse_curve(spec, ext_cap):
    """Curve spec "p:<prime>,l:<ell>,a:<int>,b:<int>" (ints reduced mod p)."""
    parts = _parse_kv(spec, ("p", "l", "a", "b"), "curve")
    try:
        p, ell = int(parts["p"]), int(parts["l"])
        a, b = int(parts["a"]), int(parts["b"])
    except ValueError as exc:
        raise UsageError(f"bad curve spec {spec!r}: {exc}") from None
    ctx = make_context(p, ell, 1)
    return curve_new(ctx, a, b, ext_cap=ext_cap)


def parse_field(spec):
    """Field spec "p:<prime>,l:<ell>,m:<degree>"."""
    parts = _parse_kv(spec, ("p", "l", "m"), "field")
    return make_context(int(parts["p"]), int(parts["l"]), int(parts["m"]))


def parse_point(curve, text):
    text = text.strip()
    if text == "inf":
        return curve.infinity()
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"bad point {text!r}: expected x,y or inf")
    try:
        x, y = int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"bad point {text!r}: expected integers") from None
    return curve.point(x, y)  # off-curve input is a computation error


def parse_h1(curve, text):
    """H1 class "P=<x,y|inf>;c=<int>"."""
    point = None
    c = 0
    for chunk in text.split(";"):
        if "=" not in chunk:
            raise UsageError(f"bad class spec {text!r}")
        k, v = chunk.split("=", 1)
        if k.strip() == "P":
            point = parse_point(curve, v)
        elif k.strip() == "c":
            c = int(v)
        else:
            raise UsageError(f"bad class key {k!r} in {text!r}")
    if point is None:
        raise UsageError(f"class spec {text!r} needs P=...")
    return h1_new(curve, point, c)


def parse_pichom(curve, text):
    """PicHom "t0=<int>;phi=<comma ints>"."""
    t0 = 0
    phi = ()
    for chunk in text.split(";"):
        if "=" not in chunk:
            raise UsageError(f"bad hom spec {text!r}")
        k, v = chunk.split("=", 1)
        if k.strip() == "t0":
            t0 = int(v)
        elif k.strip() == "phi":
            phi = tuple(int(x) for x in v.split(",")) if v.strip() else ()
        else:
            raise UsageError(f"bad hom key {k!r} in {text!r}")
    return PicHom(curve, t0, phi)


def format_h2(h2):
    pic0 = ",".join(str(c) for c in h2.pic0)
    return f"deg={h2.deg_coeff};pic0={pic0};zeta0={h2.curve.ctx.zeta0}"


def _build_parser():
    top = _Parser(prog="cupcurve", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    def add_curve_opts(p):
        p.add_argument("--curve", required=True,
                       help="curve spec p:<prime>,l:<ell>,a:<int>,b:<int>")
        p.add_argument("--ext-cap", type=int, default=64,
                       help="extension-degree cap for division-field searches")
        p.add_argument("--output", help="write the record(s) to this path")

    p = sub.add_parser("weil", help="Weil pairing of two torsion points")
    add_curve_opts(p)
    p.add_argument("--P", required=True)
    p.add_argument("--Q", required=True)
    p.add_argument("--level", type=int, default=1, help="pairing level ell^n")

    p = sub.add_parser("cup", help="cup product of two H1 classes")
    add_curve_opts(p)
    p.add_argument("--a", required=True, help='first class "P=<x,y|inf>;c=<int>"')
    p.add_argument("--b", required=True, help='second class "P=<x,y|inf>;c=<int>"')

    p = sub.add_parser("triple", help="triple product t cup a cup b")
    add_curve_opts(p)
    p.add_argument("--t", required=True, help='hom "t0=<int>;phi=<comma ints>"')
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("dlegendre", help="Legendre derivative of a torsion point")
    add_curve_opts(p)
    p.add_argument("--point", required=True)
    p.add_argument("--precision", type=int, default=None,
                   help="override the working ell-adic precision")

    p = sub.add_parser("span", help="normalized cup span report")
    add_curve_opts(p)

    p = sub.add_parser("genus2", help="counterexample family checks")
    gsub = p.add_subparsers(dest="genus2_command", required=True)
    pv = gsub.add_parser("verify", help="verify one admissible prime")
    pv.add_argument("q", type=int)
    pv.add_argument("--ext-cap", type=int, default=64)
    pv.add_argument("--output")
    ps = gsub.add_parser("scan", help="scan all primes up to a bound")
    ps.add_argument("q_max", type=int)
    ps.add_argument("--csv", action="store_true", help="full CSV schema output")
    ps.add_argument("--ext-cap", type=int, default=64)
    ps.add_argument("--output")
    return top


def _emit(lines, output):
    text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _bool(x):
    return "true" if x else "false"


def run(argv):
    """Entry point on an argv list; returns the process exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        if ns.command == "genus2":
            return _run_genus2(ns)
        curve = parse_curve(ns.curve, ns.ext_cap)
        if ns.command == "weil":
            P = parse_point(curve, ns.P)
            Q = parse_point(curve, ns.Q)
            root = pairing.weil_pairing(curve, P, Q, ns.level)
            val = pow(curve.ctx.zeta0, root.exp, curve.q)
            _emit([f"exponent={root.exp} zeta0={curve.ctx.zeta0} value={val}"],
                  ns.output)
        elif ns.command == "cup":
            ha = parse_h1(curve, ns.a)
            hb = parse_h1(curve, ns.b)
            h2 = cohomology.cup_product(curve, ha, hb)
            _emit([format_h2(h2)], ns.output)
        elif ns.command == "triple":
            t = parse_pichom(curve, ns.t)
            ha = parse_h1(curve, ns.a)
            hb = parse_h1(curve, ns.b)
            root = cohomology.triple_product(curve, t, ha, hb)
            val = pow(curve.ctx.zeta0, root.exp, curve.q)
            _emit([f"exponent={root.exp} zeta0={curve.ctx.zeta0} value={val}"],
                  ns.output)
        elif ns.command == "dlegendre":
            P = parse_point(curve, ns.point)
            vec = legendre_derivative(curve, P, precision=ns.precision)
            _emit(["dl=" + ",".join(str(c) for c in vec)], ns.output)
        elif ns.command == "span":
            dim, cond = cohomology.normalized_cup_span(curve)
            _emit([f"dimension={dim} condition_ii={_bool(cond)}"], ns.output)
        else:  # pragma: no cover - argparse enforces the choices
            raise UsageError(f"unknown command {ns.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ExtensionCapError, BudgetError) as exc:
        print(f"computation error (cap/budget): {exc}", file=sys.stderr)
        return 2
    except (CurveError, FieldError, CohomologyError, ValueError) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 2
    return 0


def _run_genus2(ns):
    try:
        if ns.genus2_command == "verify":
            ce = genus2.verify_counterexample(ns.q, ext_cap=ns.ext_cap)
            _emit([f"q={ce.q} torsion_e={ce.torsion_e} "
                   f"torsion_eprime={ce.torsion_eprime} "
                   f"p1_divisible={_bool(ce.p1_divisible)} "
                   f"conclusion={_bool(ce.conclusion)}"], ns.output)
        else:
            rows, density = genus2.scan(ns.q_max, ext_cap=ns.ext_cap)
            if ns.csv:
                lines = genus2.csv_rows(rows)
            else:
                lines = []
                for rep, ce in rows:
                    if ce is None:
                        continue
                    lines.append(f"q={rep.q} torsion_e={ce.torsion_e} "
                                 f"torsion_eprime={ce.torsion_eprime} "
                                 f"p1_divisible={_bool(ce.p1_divisible)} "
                                 f"conclusion={_bool(ce.conclusion)}")
                lines.append(f"density={density.numerator}/{density.denominator}")
            _emit(lines, ns.output)
    except (ExtensionCapError, BudgetError) as exc:
        print(f"computation error (cap/budget): {exc}", file=sys.stderr)
        return 2
    except (CurveError, FieldError, ValueError) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 2
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
