"""Command-line front end: coefficient tables, expansions, verification
sweeps, and numeric evaluation.

Exit codes are fixed for CI use: 0 success, 1 verification failure,
2 usage error, 3 I/O failure. Rationals print exactly by default; decimal
rendering is opt-in and confined to this layer.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import verify as verification
from .derivatives import deriv_expand_recurrence
from .polynomials import differentiate, legendre_bonnet
from .rationals import format_rational, parse_rational
from .scaling import (
    FORM_DERIVATIVE,
    FORM_LEGENDRE,
    expand_derivative_form,
    expand_legendre_form,
)

__all__ = ["main", "run", "OutputSpec", "format_decimal"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

RANDOM_LAMBDA_COUNT = 20
SUITES = ("all", "eq9", "eq13", "eq19", "eq26", "replay")


class UsageError(Exception):
    """Bad arguments detected after parsing; mapped to exit code 2."""


@dataclass(frozen=True)
class OutputSpec:
    """Where and how structured output is written."""

    format: str  # "json" | "csv"
    destination: Optional[str]  # None -> stdout
    float_digits: Optional[int]  # 1..50 when present


def format_decimal(value: Fraction, digits: int) -> str:
    """Correctly rounded decimal rendering with `digits` places.

    Trailing zeros are trimmed, keeping at least one digit after the point,
    so exact values print in their shortest form ("1.0", "-0.2890625").
    """
    scaled = round(value * 10 ** digits)  # exact round-half-even on Fractions
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10 ** digits)
    text = f"{sign}{whole}.{str(frac).zfill(digits)}".rstrip("0")
    return text + "0" if text.endswith(".") else text


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _parse_lambda(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_point(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"invalid evaluation point: {text!r}") from None


def _check_digits(digits: int) -> None:
    if not 1 <= digits <= 50:
        raise UsageError("digits must lie in 1..50")


def _emit(spec: OutputSpec, text: str) -> None:
    if spec.destination is None or spec.destination == "-":
        sys.stdout.write(text)
    else:
        with open(spec.destination, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json_text(payload: object) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _output_spec(args: argparse.Namespace, float_digits: Optional[int] = None) -> OutputSpec:
    if float_digits is not None:
        _check_digits(float_digits)
    return OutputSpec(format=args.format, destination=args.output, float_digits=float_digits)


def _cmd_table(args: argparse.Namespace) -> int:
    spec = _output_spec(args, args.digits)
    lam: Optional[Fraction] = None
    if args.kind in ("a", "b"):
        if args.lam is None:
            raise UsageError(f"--lambda is required for kind {args.kind!r}")
        lam = _parse_lambda(args.lam)

    rows: List[Dict[str, object]] = []
    if args.kind == "a":
        for n in range(args.n_max + 1):
            expansion = expand_derivative_form(lam, n)
            rows.extend({"n": n, "k": k, "value": c} for k, c in enumerate(expansion.coeffs))
    elif args.kind == "b":
        for n in range(args.n_max + 1):
            expansion = expand_legendre_form(lam, n)
            rows.extend({"n": n, "k": k, "value": c} for k, c in enumerate(expansion.coeffs))
    else:
        for n in range(args.n_max + 1):
            for k in range(n + 1):
                expansion = deriv_expand_recurrence(n, k)
                rows.extend(
                    {"n": n, "k": k, "i": i, "value": a} for i, a in enumerate(expansion.alphas)
                )

    index_cols = ("n", "k", "i") if args.kind == "alpha" else ("n", "k")
    if spec.format == "csv":
        header = list(index_cols) + ["value"]
        if spec.float_digits:
            header.append("float")
        table_rows = []
        for row in rows:
            cells: List[object] = [row[c] for c in index_cols]
            cells.append(format_rational(row["value"]))
            if spec.float_digits:
                cells.append(format_decimal(row["value"], spec.float_digits))
            table_rows.append(cells)
        text = _csv_text(header, table_rows)
    else:
        payload_rows = []
        for row in rows:
            obj: Dict[str, object] = {c: row[c] for c in index_cols}
            obj["value"] = format_rational(row["value"])
            if spec.float_digits:
                obj["float"] = format_decimal(row["value"], spec.float_digits)
            payload_rows.append(obj)
        text = _json_text(
            {
                "kind": args.kind,
                "lambda": format_rational(lam) if lam is not None else None,
                "n_max": args.n_max,
                "rows": payload_rows,
            }
        )
    _emit(spec, text)
    return EXIT_OK


def _cmd_expand(args: argparse.Namespace) -> int:
    spec = _output_spec(args)
    if args.what == "scaled":
        if args.lam is None:
            raise UsageError("--lambda is required for scaled expansions")
        if args.k is not None and args.k > args.n // 2:
            raise UsageError(f"k must lie in 0 ... {args.n // 2} for scaled expansions")
        lam = _parse_lambda(args.lam)
        if args.form == FORM_DERIVATIVE:
            expansion = expand_derivative_form(lam, args.n)
        else:
            expansion = expand_legendre_form(lam, args.n)
        if spec.format == "csv":
            text = _csv_text(
                ["k", "value"],
                [[k, format_rational(c)] for k, c in enumerate(expansion.coeffs)],
            )
        else:
            text = _json_text(expansion.to_json())
    else:
        if args.k is None:
            raise UsageError("--k is required for derivative expansions")
        derivative = deriv_expand_recurrence(args.n, args.k)
        if spec.format == "csv":
            text = _csv_text(
                ["degree", "value"],
                [
                    [derivative.degree_of(i), format_rational(a)]
                    for i, a in enumerate(derivative.alphas)
                ],
            )
        else:
            text = _json_text(derivative.to_json())
    _emit(spec, text)
    return EXIT_OK


def _verify_reports(args: argparse.Namespace) -> List[verification.VerificationReport]:
    if args.lam:
        lambdas: Tuple[Fraction, ...] = tuple(_parse_lambda(t) for t in args.lam)
        if args.suite == "replay" and any(v == 0 for v in lambdas):
            raise UsageError("lambda=0 invalid for replay")
    else:
        lambdas = verification.DEFAULT_LAMBDAS
    if args.seed is not None:
        lambdas = lambdas + verification.random_lambdas(RANDOM_LAMBDA_COUNT, args.seed)
    replay_lambdas = tuple(v for v in lambdas if v != 0)

    reports: List[verification.VerificationReport] = []
    wanted = ("eq9", "eq13", "eq19", "eq26", "replay") if args.suite == "all" else (args.suite,)
    for suite in wanted:
        if suite == "eq9":
            reports.append(verification.verify_scaling_identity(args.n_max, lambdas, FORM_DERIVATIVE))
        elif suite == "eq13":
            reports.append(verification.verify_scaling_identity(args.n_max, lambdas, FORM_LEGENDRE))
        elif suite == "eq19":
            reports.append(verification.verify_derivative_identity(args.n_max))
            reports.append(verification.verify_surplus_rows(args.n_max))
        elif suite == "eq26":
            reports.append(verification.verify_recurrence_vs_telescoping(args.n_max))
        else:
            if not replay_lambdas:
                raise UsageError("replay requires at least one nonzero lambda")
            reports.append(verification.verify_replay(args.n_max, replay_lambdas))
    return reports


def _cmd_verify(args: argparse.Namespace) -> int:
    spec = _output_spec(args)
    reports = _verify_reports(args)
    all_passed = all(r.passed for r in reports)

    if spec.format == "csv":
        header = ["subject", "status", "n_min", "n_max", "k_min", "k_max", "lambdas", "counterexample"]
        rows = []
        for r in reports:
            rows.append(
                [
                    r.subject,
                    r.status,
                    r.n_range[0],
                    r.n_range[1],
                    r.k_range[0] if r.k_range else "",
                    r.k_range[1] if r.k_range else "",
                    " ".join(format_rational(v) for v in r.lambdas) if r.lambdas else "",
                    json.dumps(r.counterexample.to_json()) if r.counterexample else "",
                ]
            )
        text = _csv_text(header, rows)
    else:
        text = _json_text(
            {
                "n_max": args.n_max,
                "status": "pass" if all_passed else "fail",
                "suites": [r.to_json() for r in reports],
            }
        )
    _emit(spec, text)
    for r in reports:
        sys.stderr.write(f"{r.subject:<24}{r.status}\n")
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


def _cmd_eval(args: argparse.Namespace) -> int:
    _check_digits(args.digits)
    lam = _parse_lambda(args.lam)
    point = _parse_point(args.x)
    n = args.n
    if args.method == "direct":
        value = legendre_bonnet(n).evaluate(lam * point)
    elif args.method == "a-form":
        expansion = expand_derivative_form(lam, n)
        value = Fraction(0)
        for k, c in enumerate(expansion.coeffs):
            if c:
                value += c * differentiate(legendre_bonnet(n - k), k).evaluate(point)
    else:
        expansion = expand_legendre_form(lam, n)
        value = Fraction(0)
        for k, c in enumerate(expansion.coeffs):
            if c:
                value += c * legendre_bonnet(n - 2 * k).evaluate(point)
    sys.stdout.write(format_decimal(value, args.digits) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="legscale",
        description="Exact expansions of scaled Legendre polynomials and their derivatives.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p: argparse.ArgumentParser, default_format: str) -> None:
        p.add_argument("--format", choices=("json", "csv"), default=default_format)
        p.add_argument("--output", metavar="PATH", default=None, help="write to PATH instead of stdout")

    table = sub.add_parser("table", help="tabulate a coefficient family")
    table.add_argument("kind", choices=("a", "b", "alpha"))
    table.add_argument("--n-max", type=_nonneg_int, required=True)
    table.add_argument("--lambda", dest="lam", metavar="P/Q", default=None,
                       help="scaling factor (required for kinds a and b)")
    table.add_argument("--digits", type=int, default=None,
                       help="append a decimal rendering column (1..50)")
    add_output_flags(table, "csv")

    expand = sub.add_parser("expand", help="emit a single expansion")
    expand.add_argument("what", choices=("scaled", "deriv"))
    expand.add_argument("--n", type=_nonneg_int, required=True)
    expand.add_argument("--k", type=_nonneg_int, default=None, help="derivative order (deriv only)")
    expand.add_argument("--lambda", dest="lam", metavar="P/Q", default=None,
                        help="scaling factor (scaled only)")
    expand.add_argument("--form", choices=(FORM_DERIVATIVE, FORM_LEGENDRE), default=FORM_LEGENDRE)
    add_output_flags(expand, "json")

    verify_p = sub.add_parser("verify", help="run verification sweeps")
    verify_p.add_argument("suite", choices=SUITES, nargs="?", default="all")
    verify_p.add_argument("--n-max", type=_nonneg_int, default=12)
    verify_p.add_argument("--lambda", dest="lam", action="append", metavar="P/Q",
                          help="override the default sweep set (repeatable)")
    verify_p.add_argument("--seed", type=int, default=None,
                          help=f"extend the sweep with {RANDOM_LAMBDA_COUNT} seeded random rationals")
    add_output_flags(verify_p, "json")

    eval_p = sub.add_parser("eval", help="evaluate P_n(lambda*x) to a decimal")
    eval_p.add_argument("--n", type=_nonneg_int, required=True)
    eval_p.add_argument("--lambda", dest="lam", metavar="P/Q", required=True)
    eval_p.add_argument("--x", required=True, help="evaluation point (decimal or p/q)")
    eval_p.add_argument("--method", choices=("direct", "a-form", "b-form"), default="direct")
    eval_p.add_argument("--digits", type=int, default=12)

    return parser


_HANDLERS = {
    "table": _cmd_table,
    "expand": _cmd_expand,
    "verify": _cmd_verify,
    "eval": _cmd_eval,
}

# Flags whose values may start with "-" (negative rationals); fused with "="
# so argparse does not mistake the value for an option string.
_SIGNED_VALUE_FLAGS = ("--lambda", "--x")


def _fuse_signed_values(argv: Sequence[str]) -> List[str]:
    out: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _SIGNED_VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_fuse_signed_values(argv))
    except SystemExit as exc:  # argparse already printed its message
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return EXIT_IO


def run() -> None:
    """Console-script entry point."""
    raise SystemExit(main())
