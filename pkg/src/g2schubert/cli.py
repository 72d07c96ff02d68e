"""Command line interface.

Verbs:
  verify    run named verification suites (exit 0 only if everything passes)
  table     emit a Schubert polynomial family as text or JSON
  reduce    normal form of a polynomial in a named ring presentation
  expand    Schubert-basis expansion of a polynomial
  oct-mul   octonion product (8 comma-separated rational coefficients each)
  kernel    isotropic kernel E_u of a 7-vector
  bryant    the bilinear form recovered from the standard trilinear form
  cell      the parametrization of the big Schubert cell
  weyl      the Weyl group table, or one element

Polynomials use the text grammar: rational coefficients (p/q), '^' powers,
'*' optional, variables from the fixed universe.  The random seed for
verification comes from --seed, then G2SC_SEED, then a fixed default.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from . import checks, cohomring, octonion, schubert, weyl
from .exactalg import MPoly, PolySyntaxError, parse_poly
from .exactalg.mpoly import VARIABLES


def _poly_terms_json(poly: MPoly) -> List[dict]:
    out = []
    for exp, coef in poly.terms():
        exps = {VARIABLES[i]: e for i, e in enumerate(exp) if e}
        out.append({"coeff": str(coef), "exps": exps})
    return out


def _write(text: str, out_path: Optional[str]):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _parse_octonion(text: str) -> octonion.Oct:
    parts = [Fraction(p.strip()) for p in text.split(",")]
    if len(parts) != 8:
        raise ValueError("an octonion needs 8 coefficients: e, f1..f7")
    return octonion.Oct(parts[0], octonion.VecV(parts[1:]))


def _parse_vec(text: str) -> octonion.VecV:
    parts = [Fraction(p.strip()) for p in text.split(",")]
    if len(parts) != 7:
        raise ValueError("a vector needs 7 coefficients: f1..f7")
    return octonion.VecV(parts)


def _fmt_oct(u: octonion.Oct) -> str:
    return ",".join([str(u.re)] + [str(c) for c in u.im.coords])


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("G2SC_SEED")
    if env is not None:
        return int(env)
    return checks.DEFAULT_SEED


def cmd_verify(args) -> int:
    seed = _resolve_seed(args)
    names = list(checks.SUITE_NAMES) if args.suite == "all" else [args.suite]
    reports = [checks.run_suite(name, seed) for name in names]
    failures = 0
    if args.format == "json":
        payload = []
        for rep in reports:
            payload.append({
                "suite": rep.suite,
                "seed": rep.seed,
                "passed": rep.passed,
                "results": [{"name": r.name, "passed": r.passed,
                             "detail": r.detail} for r in rep.results],
            })
            failures += len(rep.failures)
        _write(json.dumps(payload, indent=2), args.out)
    else:
        lines = [f"seed: {seed}"]
        for rep in reports:
            for r in rep.results:
                status = "PASS" if r.passed else "FAIL"
                detail = f"  [{r.detail}]" if r.detail else ""
                lines.append(f"{status} {rep.suite}: {r.name}{detail}")
            failures += len(rep.failures)
        total = sum(len(rep.results) for rep in reports)
        lines.append(f"{total - failures}/{total} checks passed")
        _write("\n".join(lines), args.out)
    return 0 if failures == 0 else 1


def cmd_table(args) -> int:
    fam = schubert.generate_family(args.family)
    if args.format == "json":
        entries = []
        for w, poly in fam.entries():
            entries.append({
                "word": w.name,
                "pair": [w.pair[0], w.pair[1]],
                "length": w.length,
                "terms": _poly_terms_json(poly),
            })
        _write(json.dumps({"family": args.family, "entries": entries},
                          indent=2), args.out)
    else:
        lines = []
        for w, poly in fam.entries():
            lines.append(f"{w.name:8s} {w.pair[0]} {w.pair[1]}   {poly}")
        _write("\n".join(lines), args.out)
    return 0


def cmd_reduce(args) -> int:
    pres = cohomring.get_presentation(args.presentation)
    poly = parse_poly(args.poly)
    nf = pres.normal_form(poly)
    if args.format == "json":
        payload = {
            "presentation": pres.name,
            "basis": [
                {"monomial": {v: e for v, e in zip(pres.main_vars, key) if e},
                 "coeff": _poly_terms_json(coef)}
                for key, coef in sorted(nf.coeffs.items())
            ],
        }
        _write(json.dumps(payload, indent=2), args.out)
    else:
        _write(str(nf.as_poly()), args.out)
    return 0


def cmd_expand(args) -> int:
    fam = schubert.generate_family(args.family)
    if args.presentation:
        pres = cohomring.get_presentation(args.presentation)
    elif args.family.startswith("eq-"):
        pres = cohomring.fl_equivariant()
    else:
        pres = cohomring.fl_half_point()
    poly = parse_poly(args.poly)
    expansion = cohomring.schubert_expand(poly, fam, pres)
    if args.format == "json":
        payload = {"family": args.family, "presentation": pres.name,
                   "coefficients": {w.name: _poly_terms_json(c)
                                    for w, c in expansion.items()
                                    if not c.is_zero()}}
        _write(json.dumps(payload, indent=2), args.out)
    else:
        lines = [f"{w.name:8s} {c}" for w, c in expansion.items()
                 if not c.is_zero()]
        _write("\n".join(lines) if lines else "0", args.out)
    return 0


def cmd_oct_mul(args) -> int:
    ctx = octonion.standard_forms(args.basis)
    u = _parse_octonion(args.u)
    v = _parse_octonion(args.v)
    _write(_fmt_oct(ctx.mul(u, v)), args.out)
    return 0


def cmd_kernel(args) -> int:
    ctx = octonion.standard_forms(args.basis)
    u = _parse_vec(args.u)
    kernel = octonion.isotropic_kernel(ctx, u)
    lines = [",".join(str(c) for c in vec.coords) for vec in kernel]
    _write("\n".join(lines), args.out)
    return 0


def cmd_bryant(args) -> int:
    ctx = octonion.standard_forms("f")
    res = octonion.bryant_form(ctx.gamma)
    lines = [" ".join(f"{res.bil.matrix[i][j]!s:>4}" for j in range(7))
             for i in range(7)]
    lines.append(f"nondegenerate: {res.nondegenerate}")
    lines.append(f"matches the standard form: "
                 f"{res.bil.matrix == ctx.beta.matrix}")
    _write("\n".join(lines), args.out)
    return 0


def cmd_cell(args) -> int:
    params = None
    if args.params:
        values = {}
        for item in args.params.split(","):
            name, _, val = item.partition("=")
            values[name.strip()] = Fraction(val.strip())
        order = ("a", "b", "c", "d", "e", "g")
        params = [values.get(n, MPoly.var(n)) for n in order]
        if all(not isinstance(p, MPoly) for p in params):
            params = [Fraction(p) for p in params]
    row1, row2 = octonion.big_cell_rows(params)
    ctx = octonion.standard_forms("f")
    prod = ctx.mul(octonion.Oct.imag(row1), octonion.Oct.imag(row2))
    lines = [
        "row1: " + ", ".join(str(c) for c in row1.coords),
        "row2: " + ", ".join(str(c) for c in row2.coords),
        f"product is zero: {prod.is_zero()}",
        f"rows isotropic: "
        f"{octonion._is_zero(ctx.beta(row1, row1)) and octonion._is_zero(ctx.beta(row2, row2))}",
    ]
    _write("\n".join(lines), args.out)
    return 0


def cmd_weyl(args) -> int:
    if args.element:
        w = weyl.element(args.element)
        winv = w.inverse()
        lines = [
            f"word:    {w.name}",
            f"pair:    {w.pair[0]} {w.pair[1]}",
            f"perm:    {' '.join(str(i) for i in w.perm)}",
            f"length:  {w.length}",
            f"inverse: {winv.name}",
        ]
        _write("\n".join(lines), args.out)
    else:
        lines = []
        for w in weyl.all_elements():
            perm = " ".join(str(i) for i in w.perm)
            lines.append(f"{w.name:8s} l={w.length}  pair {w.pair[0]} {w.pair[1]}  perm {perm}")
        _write("\n".join(lines), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2sc",
        description="Exact Schubert calculus for G2 flag bundles.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", nargs="?", default="all",
                   choices=checks.SUITE_NAMES + ("all",))
    p.add_argument("--seed", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="emit a Schubert polynomial table")
    p.add_argument("--family", required=True, choices=schubert.FAMILY_KINDS)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("reduce", help="normal form in a ring presentation")
    p.add_argument("--presentation", required=True)
    p.add_argument("poly")
    common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("expand", help="expand in the Schubert basis")
    p.add_argument("--family", default="point", choices=schubert.FAMILY_KINDS)
    p.add_argument("--presentation", default=None)
    p.add_argument("poly")
    common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("oct-mul", help="octonion product")
    p.add_argument("--basis", choices=("f", "e"), default="f")
    p.add_argument("u")
    p.add_argument("v")
    common(p)
    p.set_defaults(func=cmd_oct_mul)

    p = sub.add_parser("kernel", help="isotropic kernel of a vector")
    p.add_argument("--basis", choices=("f", "e"), default="f")
    p.add_argument("u")
    common(p)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("bryant", help="recover beta from the standard gamma")
    common(p)
    p.set_defaults(func=cmd_bryant)

    p = sub.add_parser("cell", help="big Schubert cell parametrization")
    p.add_argument("--params", default=None,
                   help="comma-separated assignments, e.g. a=1,b=0")
    common(p)
    p.set_defaults(func=cmd_cell)

    p = sub.add_parser("weyl", help="Weyl group table or one element")
    p.add_argument("element", nargs="?", default=None)
    common(p)
    p.set_defaults(func=cmd_weyl)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PolySyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
