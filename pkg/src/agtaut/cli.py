"""Batch command-line front end.

Every subcommand maps to one library operation or verification suite,
prints exact values (rationals always as p/q, never decimals) and is
byte-identical across runs.  Exit codes: 0 success, 1 usage error,
2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List

from . import degrees, gw, nl, ring, verify


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_delta(text: str) -> nl.PolarizationType:
    try:
        entries = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"malformed polarization type {text!r}: {exc}") from exc
    if not entries:
        raise UsageError(f"malformed polarization type {text!r}")
    try:
        return nl.PolarizationType(entries)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed rational {text!r}") from exc


def _emit_json(data: dict, out) -> None:
    print(json.dumps(data, sort_keys=True), file=out)


def _build_parser() -> _Parser:
    parser = _Parser(prog="agtaut", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")

    def add(name, help_text, **flags):
        p = sub.add_parser(name, help=help_text)
        for flag, kwargs in flags.items():
            p.add_argument(f"--{flag}", **kwargs)
        return p

    add(
        "taut-nl",
        "tautological projection of a Noether-Lefschetz cycle",
        g=dict(type=int, required=True),
        delta=dict(type=str, required=True, help="comma-separated chain, e.g. 1,2,4"),
        json=dict(action="store_true"),
    )
    add(
        "taut-nl-tilde",
        "projection of the degree-d elliptic-homomorphism cycle",
        g=dict(type=int, required=True),
        d=dict(type=int, required=True),
        json=dict(action="store_true"),
    )
    add(
        "taut-product",
        "projection of the u x (g-u) product cycle",
        g=dict(type=int, required=True),
        u=dict(type=int, required=True),
        json=dict(action="store_true"),
    )
    add(
        "eisenstein",
        "q-expansion of the weight-2g Eisenstein series",
        g=dict(type=int, required=True),
        order=dict(type=int, required=True),
        json=dict(action="store_true"),
    )
    add(
        "ring-reduce",
        "normal form of a lambda monomial (indices with repeats)",
        g=dict(type=int, required=True),
        indices=dict(type=str, required=True, help="e.g. 1,1,2 for L1^2 L2"),
        json=dict(action="store_true"),
    )
    add(
        "ring-pair",
        "socle pairing matrix between complementary degrees",
        g=dict(type=int, required=True),
        k=dict(type=int, required=True),
        json=dict(action="store_true"),
    )
    add(
        "deg-phi",
        "degree of the polarization-quotient cover",
        g=dict(type=int, required=True),
        delta=dict(type=str, required=True),
        route=dict(
            type=str,
            default=degrees.ROUTE_CLOSED,
            choices=[
                degrees.ROUTE_CLOSED,
                degrees.ROUTE_STRATIFIED,
                degrees.ROUTE_ENUMERATION,
            ],
        ),
        json=dict(action="store_true"),
    )
    add(
        "deg-pi",
        "degree of the level-forgetting cover",
        g=dict(type=int, required=True),
        delta=dict(type=str, required=True),
        json=dict(action="store_true"),
    )
    add(
        "sp-order",
        "order of the symplectic group over Z/N",
        g=dict(type=int, required=True),
        n=dict(type=int, required=True),
        json=dict(action="store_true"),
    )
    add(
        "gw-predict",
        "sigma-weighted Gromov-Witten predictor",
        g=dict(type=int, required=True),
        d=dict(type=int, required=True),
        i=dict(type=int, default=1),
        integral=dict(
            type=str,
            default=None,
            help="Hodge/psi integral as p/q; default derives the printed case",
        ),
        json=dict(action="store_true"),
    )
    diagnose = sub.add_parser("diagnose", help="consistency diagnostics")
    diagnose.add_argument("topic", choices=["nl-composition"])
    diagnose.add_argument("--g", type=int, required=True)
    diagnose.add_argument("--delta", type=str, required=True)
    diagnose.add_argument("--json", action="store_true")

    verify_parser = sub.add_parser("verify", help="run verification suites")
    verify_parser.add_argument("--all", action="store_true")
    verify_parser.add_argument("--suite", action="append", default=[])
    verify_parser.add_argument("--list", action="store_true")
    return parser


def run(argv: List[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required (see --help)")
        return _dispatch(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return 1


def _dispatch(args, out) -> int:
    command = args.command

    if command == "taut-nl":
        result = nl.taut_nl(args.g, _parse_delta(args.delta))
        _emit_json(result.to_json_dict(), out) if args.json else print(result, file=out)
    elif command == "taut-nl-tilde":
        result = nl.taut_nl_tilde(args.g, args.d)
        _emit_json(result.to_json_dict(), out) if args.json else print(result, file=out)
    elif command == "taut-product":
        result = nl.taut_product_cycle(args.g, args.u)
        _emit_json(result.to_json_dict(), out) if args.json else print(result, file=out)
    elif command == "eisenstein":
        series = nl.eisenstein_series(args.g, args.order)
        _emit_json(series.to_json_dict(), out) if args.json else print(series, file=out)
    elif command == "ring-reduce":
        try:
            indices = [int(x) for x in args.indices.split(",") if x.strip()]
        except ValueError as exc:
            raise UsageError(f"malformed index list {args.indices!r}") from exc
        result = ring.reduce(ring.LambdaPolynomial.monomial(args.g, indices))
        _emit_json(result.to_json_dict(), out) if args.json else print(result, file=out)
    elif command == "ring-pair":
        matrix = ring.pairing_matrix(args.g, args.k)
        if args.json:
            _emit_json(matrix.to_json_dict(), out)
        else:
            fmt = lambda s: "[" + ",".join(map(str, s)) + "]"
            print("rows: " + " ".join(fmt(s) for s in matrix.rows), file=out)
            print("cols: " + " ".join(fmt(s) for s in matrix.cols), file=out)
            for row in matrix.entries:
                print("[" + " ".join(str(x) for x in row) + "]", file=out)
            print(f"nonsingular: {'yes' if matrix.is_nonsingular() else 'no'}", file=out)
    elif command == "deg-phi":
        delta = _parse_delta(args.delta)
        if args.route == degrees.ROUTE_CLOSED:
            result = degrees.deg_phi(args.g, delta)
        elif args.route == degrees.ROUTE_STRATIFIED:
            result = degrees.deg_phi_crt(args.g, delta)
        else:
            if args.g != 1 or delta.u != 1:
                raise UsageError(
                    "enumeration route exists only for g=1 and a length-1 chain"
                )
            result = degrees.oracle_index(delta.entries[0])
        _emit_json(result.to_json_dict(), out) if args.json else print(result, file=out)
    elif command == "deg-pi":
        result = degrees.deg_pi(args.g, _parse_delta(args.delta))
        _emit_json(result.to_json_dict(), out) if args.json else print(result, file=out)
    elif command == "sp-order":
        order = degrees.sp_order(args.g, args.n)
        if args.json:
            _emit_json({"g": args.g, "n": args.n, "order": str(order)}, out)
        else:
            print(order, file=out)
    elif command == "gw-predict":
        if args.integral is None:
            if args.i != 1:
                raise UsageError(
                    "without --integral only the printed i=1 case is available"
                )
            value = gw.gw_tau1_lambda(args.g, args.d)
            insertion = "lambda_g*lambda_{g-2}"
        else:
            value = gw.conjecture_prediction(
                args.g, args.d, args.i, _parse_rational(args.integral)
            )
            insertion = "supplied"
        prediction = gw.GWPrediction(args.g, args.d, args.i, insertion, value)
        if args.json:
            _emit_json(prediction.to_json_dict(), out)
        else:
            print(value, file=out)
    elif command == "diagnose":
        report = degrees.nl_composition(args.g, _parse_delta(args.delta))
        if args.json:
            _emit_json(
                {
                    "constant": str(report["constant"]),
                    "composed": str(report["composed"]),
                    "match": report["match"],
                },
                out,
            )
        else:
            print(f"ring constant:      {report['constant']}", file=out)
            print(f"degree composition: {report['composed']}", file=out)
            print(f"match: {'yes' if report['match'] else 'no'}", file=out)
    elif command == "verify":
        if args.list:
            for name in verify.CHECKS:
                print(name, file=out)
            return 0
        # --all (and the bare default) run everything; otherwise the named suites
        names = None if args.all or not args.suite else args.suite
        if not verify.run_suites(names, stream=out):
            return 2
    else:
        raise UsageError(f"unknown subcommand {command!r}")
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
