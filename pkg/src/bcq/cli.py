"""Command-line front end.

Three commands:

* ``poly``      — construct a polynomial (Koornwinder, big or little
                  q-Jacobi) and emit it as JSON.
* ``verify``    — run a named verification suite and emit one report per
                  case; exit code reflects the overall verdict.
* ``grassmann`` — print the parameter dictionary attached to a
                  Grassmannian shape (n, l): Koornwinder quadruple, big and
                  little parameters, fundamental spherical weights, Casimir
                  eigenvalues.

Rational inputs are given as "p/q" strings, floats as decimals; any float
input switches the computation to float mode.  Exit codes: 0 pass, 1
verification failure, 2 invalid input, 3 numerical non-convergence.  The
environment variable BCQ_PRECISION in {double, extended} selects the
quadrature/truncation tightness.  Output is byte-deterministic for a fixed
configuration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .awmeasure import QuadratureGrid
from .awmeasure import normalization_check as koornwinder_normalization_check
from .koornwinder import (
    EigenvalueCollisionError,
    KoornwinderParams,
    check_symmetries,
    koornwinder_poly,
)
from .limits import (
    grassmann_big_params,
    grassmann_koornwinder_params,
    grassmann_little_params,
    limit_check_big,
    limit_check_little,
    norm_limit_check,
    q_to_1_check,
    sweep_csv,
)
from .qgrass import (
    casimir_eigenvalue,
    gelfand_check,
    intertwiner_check,
    j_sigma,
    qybe_check,
    reflection_check,
    theta_constant_check,
)
from .qjacobi import (
    BigJacobiParams,
    LittleJacobiParams,
    SumTruncation,
    big_jacobi_poly,
    little_jacobi_poly,
)
from .qjacobi import normalization_check as jacobi_normalization_check
from .qseries import NonConvergenceError
from .weights import GrassmannShape, fundamental_spherical

SUITES = (
    "orthogonality",
    "selberg-constants",
    "reflection",
    "intertwiner",
    "branching",
    "limit-big",
    "limit-little",
    "norm-limit",
    "symmetry",
    "qybe",
    "classical",
)


def parse_scalar(text: str):
    """"p/q" or integer -> Fraction (exact mode); decimal -> float."""
    text = text.strip()
    try:
        if "." in text or "e" in text.lower():
            return float(text)
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse scalar {text!r}") from exc


def parse_weight(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse weight {text!r}") from exc


def _precision():
    mode = os.environ.get("BCQ_PRECISION", "double")
    if mode not in ("double", "extended"):
        raise ValueError("BCQ_PRECISION must be 'double' or 'extended'")
    if mode == "extended":
        return QuadratureGrid(rel_tol=1e-12), SumTruncation(n_max=400, tail_tol=1e-16)
    return QuadratureGrid(), SumTruncation()


def _koornwinder_params(args) -> KoornwinderParams:
    ts = [parse_scalar(part) for part in args.t.split(",")]
    if len(ts) != 4:
        raise ValueError("--t needs four comma-separated values")
    return KoornwinderParams(ts[0], ts[1], ts[2], ts[3], parse_scalar(args.q), args.k)


def cmd_poly(args) -> int:
    lam = parse_weight(getattr(args, "lam"))
    l = len(lam)
    _grid, trunc = _precision()
    if args.family == "koornwinder":
        params = _koornwinder_params(args)
        try:
            poly = koornwinder_poly(lam, params)
        except EigenvalueCollisionError:
            poly = koornwinder_poly(lam, params, mode="gram")
        basis = "signed-orbit-sums"
        params_doc = {
            "t": [str(t) for t in params.tuple4],
            "q": str(params.q),
            "k": params.k,
        }
    elif args.family == "big":
        params = BigJacobiParams(
            parse_scalar(args.a),
            parse_scalar(args.b),
            parse_scalar(args.c),
            parse_scalar(args.d),
            parse_scalar(args.q),
            args.k,
        )
        poly = big_jacobi_poly(lam, params, l, trunc)
        basis = "monomial-symmetric"
        params_doc = {
            "a": str(params.a),
            "b": str(params.b),
            "c": str(params.c),
            "d": str(params.d),
            "q": str(params.q),
            "k": params.k,
        }
    else:
        params = LittleJacobiParams(
            parse_scalar(args.a), parse_scalar(args.b), parse_scalar(args.q), args.k
        )
        poly = little_jacobi_poly(lam, params, l, trunc)
        basis = "monomial-symmetric"
        params_doc = {
            "a": str(params.a),
            "b": str(params.b),
            "q": str(params.q),
            "k": params.k,
        }
    doc = {
        "family": args.family,
        "lambda": list(lam),
        "basis": basis,
        "params": params_doc,
        "polynomial": poly.to_json_dict(),
    }
    print(json.dumps(doc, sort_keys=True))
    return 0


def _verify_reports(args) -> list:
    suite = args.suite
    grid, trunc = _precision()
    if suite == "qybe":
        return [qybe_check(args.n, parse_scalar(args.q))]
    if suite == "reflection":
        q = parse_scalar(args.q)
        return [reflection_check(j_sigma(args.n, args.l, args.sigma, q), args.n, q)]
    if suite == "intertwiner":
        q = parse_scalar(args.q)
        shape = GrassmannShape(args.n, args.l)
        reports = [
            intertwiner_check(shape, args.r, args.sigma, q, tilde=False),
            intertwiner_check(shape, args.r, args.sigma, q, tilde=True),
        ]
        if args.r >= 2:
            reports.append(theta_constant_check(shape, args.r, args.sigma, q))
            reports.append(
                theta_constant_check(shape, args.r, args.sigma, q, tilde=True)
            )
        return reports
    if suite == "branching":
        return [gelfand_check(GrassmannShape(args.n, args.l), args.bound)]
    if suite == "orthogonality":
        return [koornwinder_normalization_check(args.l, _koornwinder_params(args), grid)]
    if suite == "selberg-constants":
        if args.family == "big":
            params = BigJacobiParams(
                parse_scalar(args.a),
                parse_scalar(args.b),
                parse_scalar(args.c),
                parse_scalar(args.d),
                parse_scalar(args.q),
                args.k,
            )
        else:
            params = LittleJacobiParams(
                parse_scalar(args.a), parse_scalar(args.b), parse_scalar(args.q), args.k
            )
        return [jacobi_normalization_check(params, args.l, trunc)]
    if suite == "limit-big":
        params = BigJacobiParams(
            parse_scalar(args.a),
            parse_scalar(args.b),
            parse_scalar(args.c),
            parse_scalar(args.d),
            parse_scalar(args.q),
            args.k,
        )
        return [limit_check_big(parse_weight(args.lam), params)]
    if suite == "limit-little":
        params = LittleJacobiParams(
            parse_scalar(args.a), parse_scalar(args.b), parse_scalar(args.q), args.k
        )
        return [limit_check_little(parse_weight(args.lam), params)]
    if suite == "norm-limit":
        if args.family == "big":
            params = BigJacobiParams(
                parse_scalar(args.a),
                parse_scalar(args.b),
                parse_scalar(args.c),
                parse_scalar(args.d),
                parse_scalar(args.q),
                args.k,
            )
        else:
            params = LittleJacobiParams(
                parse_scalar(args.a), parse_scalar(args.b), parse_scalar(args.q), args.k
            )
        return [norm_limit_check(parse_weight(args.lam), params)]
    if suite == "symmetry":
        return [check_symmetries(parse_weight(args.lam), _koornwinder_params(args))]
    if suite == "classical":
        alpha = float(parse_scalar(args.a)) if args.a is not None else 0.0
        beta = float(parse_scalar(args.b)) if args.b is not None else 0.0
        return [q_to_1_check(alpha, beta, args.k, args.l or 2)]
    raise ValueError(f"unknown suite {suite!r}")


def cmd_verify(args) -> int:
    reports = _verify_reports(args)
    for report in reports:
        if args.format == "csv" and "epsilon" in report.detail:
            sys.stdout.write(sweep_csv(report))
        else:
            print(report.to_json())
    return 0 if all(r.passed for r in reports) else 1


def cmd_grassmann(args) -> int:
    shape = GrassmannShape(args.n, args.l)
    q = parse_scalar(args.q)
    doc = {"n": shape.n, "l": shape.l, "q": str(q)}
    if args.sigma != "inf" and args.tau != "inf":
        kp = grassmann_koornwinder_params(shape, int(args.sigma), int(args.tau), q)
        doc["koornwinder"] = {
            "t": [str(t) for t in kp.tuple4],
            "base": str(kp.q),
            "k": kp.k,
        }
    if args.tau != "inf":
        bp = grassmann_big_params(shape, int(args.tau), q)
        doc["big"] = {
            "a": str(bp.a),
            "b": str(bp.b),
            "c": str(bp.c),
            "d": str(bp.d),
            "base": str(bp.q),
            "k": bp.k,
        }
    lp = grassmann_little_params(shape, q)
    doc["little"] = {"a": str(lp.a), "b": str(lp.b), "base": str(lp.q), "k": lp.k}
    if shape.n == 2 * shape.l:
        doc["warning"] = "a = 1 sits on the boundary of the little parameter domain"
    doc["fundamental_spherical"] = [
        list(fundamental_spherical(r, shape).entries) for r in range(1, shape.l + 1)
    ]
    if getattr(args, "lam", None):
        lam = parse_weight(args.lam)
        doc["casimir"] = {
            ",".join(map(str, lam)): str(casimir_eigenvalue(lam, shape.n, q))
        }
    print(json.dumps(doc, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcq",
        description="BC-type multivariable q-orthogonal polynomials "
        "and quantum-Grassmannian identity checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="construct a polynomial")
    p_poly.add_argument(
        "--family", required=True, choices=("koornwinder", "big", "little")
    )
    p_poly.add_argument("--lambda", dest="lam", required=True, help="e.g. 2,1")
    p_poly.add_argument("--l", type=int, default=None)
    p_poly.add_argument("--q", required=True)
    p_poly.add_argument("--k", type=int, default=1)
    p_poly.add_argument("--t", help="t0,t1,t2,t3 (koornwinder)")
    p_poly.add_argument("--a")
    p_poly.add_argument("--b")
    p_poly.add_argument("--c")
    p_poly.add_argument("--d")
    p_poly.set_defaults(func=cmd_poly)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--l", type=int)
    p_verify.add_argument("--r", type=int, default=1)
    p_verify.add_argument("--sigma", type=int, default=0)
    p_verify.add_argument("--bound", type=int, default=1)
    p_verify.add_argument("--q", default="1/2")
    p_verify.add_argument("--k", type=int, default=1)
    p_verify.add_argument("--t")
    p_verify.add_argument("--a")
    p_verify.add_argument("--b")
    p_verify.add_argument("--c")
    p_verify.add_argument("--d")
    p_verify.add_argument("--family", choices=("big", "little"), default="little")
    p_verify.add_argument("--lambda", dest="lam", default="1")
    p_verify.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p_verify.set_defaults(func=cmd_verify)

    p_grass = sub.add_parser("grassmann", help="parameter table for a shape")
    p_grass.add_argument("--n", type=int, required=True)
    p_grass.add_argument("--l", type=int, required=True)
    p_grass.add_argument("--sigma", default="0")
    p_grass.add_argument("--tau", default="0")
    p_grass.add_argument("--q", default="1/2")
    p_grass.add_argument("--lambda", dest="lam", default=None)
    p_grass.set_defaults(func=cmd_grassmann)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except NonConvergenceError as exc:
        print(f"error: non-convergence: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"error: non-convergence: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
