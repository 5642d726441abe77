"""Command-line frontend over the expansion library.

All behavior is flag-driven and deterministic: identical argv produces
byte-identical standard output.  Results go to stdout, diagnostics to
stderr.  Exit codes: 0 success (and, for verify, all checks passed),
1 verification failure, unrepresentable value, non-constant decode or
scheme violation, 2 invalid input, 3 step budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cns import (DEFAULT_MAX_STEPS, CnsDigits, CnsExhausted,
                  CnsNotRepresentable, NotRepresentableError, StepBudgetError,
                  cns_decode, cns_encode)
from .negabase import (CnsBase, NegaBase, Representation, decode_negabase,
                       encode_negabase)
from .penney import SchemeViolation, build_scheme, convert, predicted_length
from .poly import IntPoly, compose_x_power
from .trinomial import SequenceId, lift_representation, seq_values
from .verify import DEFAULT_SEED, SAMPLE_COUNT, run_suite

STANDARD_POLY_TEXT = "2,2,1"


def _poly_arg(text: str) -> IntPoly:
    try:
        return IntPoly.from_string(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _add_output_flags(sub: argparse.ArgumentParser, pretty: bool = True) -> None:
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true",
                       help="emit one JSON object instead of plain text")
    if pretty:
        group.add_argument("--pretty", action="store_true",
                           help="wrap digit strings as (digits)_base")


def _print_representation(rep: Representation, args: argparse.Namespace,
                          payload: dict) -> None:
    if args.json:
        payload["digits"] = rep.digit_string()
        payload["length"] = rep.length
        print(json.dumps(payload))
    elif getattr(args, "pretty", False):
        print(rep.pretty())
    else:
        print(rep.digit_string())


def _cmd_encode(args: argparse.Namespace) -> int:
    outcome = cns_encode(args.value, args.poly, args.max_steps)
    if isinstance(outcome, CnsExhausted):
        print(f"error: no decision for {args.value} within {args.max_steps} steps",
              file=sys.stderr)
        return 3
    if isinstance(outcome, CnsNotRepresentable):
        print(f"error: {args.value} is not representable over "
              f"{args.poly.to_string()} (cycle residue {outcome.cycle.coeffs})",
              file=sys.stderr)
        return 1
    payload = {"poly": args.poly.to_string(), "value": args.value}
    _print_representation(outcome.representation, args, payload)
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    rep = Representation.from_string(CnsBase(args.poly), args.digits)
    residue = cns_decode(rep)
    if not residue.is_constant:
        print(f"error: digits {args.digits!r} denote the non-constant residue "
              f"{residue.coeffs} over {args.poly.to_string()}", file=sys.stderr)
        return 1
    value = residue.constant_value()
    if args.json:
        print(json.dumps({"poly": args.poly.to_string(),
                          "digits": rep.digit_string(), "value": value}))
    else:
        print(value)
    return 0


def _cmd_negabase(args: argparse.Namespace) -> int:
    base = NegaBase(args.base)
    if args.value is not None:
        rep = encode_negabase(args.value, args.base)
        payload = {"base": args.base, "value": args.value}
        _print_representation(rep, args, payload)
    else:
        rep = Representation.from_string(base, args.digits)
        value = decode_negabase(rep)
        if args.json:
            print(json.dumps({"base": args.base, "digits": rep.digit_string(),
                              "value": value}))
        else:
            print(value)
    return 0


def _scheme_or_fail(args: argparse.Namespace):
    result = build_scheme(args.poly, args.c, args.d, args.max_steps)
    if isinstance(result, SchemeViolation):
        if args.json:
            print(json.dumps({"poly": args.poly.to_string(), "c": args.c,
                              "d": args.d, "violation": {
                                  "kind": result.kind.value,
                                  "digit": result.digit,
                                  "block_length": result.block_length}}))
        else:
            print(f"violation {result.describe()}")
        return None
    return result


def _cmd_convert(args: argparse.Namespace) -> int:
    scheme = _scheme_or_fail(args)
    if scheme is None:
        return 1
    rep = convert(args.value, scheme)
    payload = {"poly": args.poly.to_string(), "c": args.c, "d": args.d,
               "value": args.value,
               "predicted_length": predicted_length(args.value, scheme)}
    _print_representation(rep, args, payload)
    return 0


def _cmd_scheme(args: argparse.Namespace) -> int:
    scheme = _scheme_or_fail(args)
    if scheme is None:
        return 1
    if args.json:
        print(json.dumps(scheme.to_dict()))
    else:
        print(f"base {args.poly.to_string()} c {scheme.c} d {scheme.d}")
        blocks = scheme.to_dict()["blocks"]
        for i, block in enumerate(blocks):
            print(f"{i} = {block} (length {scheme.block_lengths[i]})")
    return 0


def _cmd_lift(args: argparse.Namespace) -> int:
    rep = Representation.from_string(CnsBase(args.poly), args.digits)
    lifted = lift_representation(rep, args.k)
    if args.json:
        print(json.dumps({"poly": args.poly.to_string(), "k": args.k,
                          "digits": rep.digit_string(),
                          "lifted_poly": compose_x_power(args.poly, args.k).to_string(),
                          "lifted_digits": lifted.digit_string(),
                          "lifted_length": lifted.length}))
    elif args.pretty:
        print(lifted.pretty())
    else:
        print(lifted.digit_string())
    return 0


def _cmd_seq(args: argparse.Namespace) -> int:
    values = seq_values(SequenceId(args.name), args.count)
    if args.json:
        print(json.dumps({"name": args.name, "values": values}))
    else:
        for value in values:
            print(value)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    names = []
    for token in args.suite or ["all"]:
        names.extend(part for part in token.split(",") if part)
    kwargs = dict(samples=args.samples, seed=args.seed, jobs=args.jobs,
                  max_steps=args.max_steps)
    if args.range is not None:
        kwargs.update(sweep_bound=args.range, formula_bound=args.range,
                      digit_sum_bound=args.range)
    reports = run_suite(names, **kwargs)
    for report in reports:
        print(report.summary())
    if args.report:
        with open(args.report, "w", encoding="utf-8") as handle:
            for report in reports:
                handle.write(json.dumps(report.to_json_dict()) + "\n")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cnskit",
        description="Canonical digit expansions over monic integer polynomials.")
    commands = parser.add_subparsers(dest="command", required=True)

    encode = commands.add_parser("encode", help="expand an integer over a base polynomial")
    encode.add_argument("--poly", type=_poly_arg, default=IntPoly.from_string(STANDARD_POLY_TEXT),
                        help="coefficients, constant first (default %s)" % STANDARD_POLY_TEXT)
    encode.add_argument("--value", type=int, required=True)
    encode.add_argument("--max-steps", type=_positive_int, default=DEFAULT_MAX_STEPS)
    _add_output_flags(encode)
    encode.set_defaults(handler=_cmd_encode)

    decode = commands.add_parser("decode", help="read a digit string back to an integer")
    decode.add_argument("--poly", type=_poly_arg, default=IntPoly.from_string(STANDARD_POLY_TEXT))
    decode.add_argument("--digits", required=True,
                        help="most significant digit first; dot-separate digits above 9")
    decode.add_argument("--json", action="store_true")
    decode.set_defaults(handler=_cmd_decode)

    negabase = commands.add_parser("negabase", help="negative-base expansion of an integer")
    negabase.add_argument("--base", type=_positive_int, required=True,
                          help="positive b for base -b")
    direction = negabase.add_mutually_exclusive_group(required=True)
    direction.add_argument("--value", type=int)
    direction.add_argument("--digits")
    _add_output_flags(negabase)
    negabase.set_defaults(handler=_cmd_negabase)

    def add_scheme_flags(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--poly", type=_poly_arg,
                         default=IntPoly.from_string(STANDARD_POLY_TEXT))
        sub.add_argument("--c", type=_positive_int, default=4)
        sub.add_argument("--d", type=_positive_int, default=4)
        sub.add_argument("--max-steps", type=_positive_int, default=DEFAULT_MAX_STEPS)

    conv = commands.add_parser("convert",
                               help="expand via negative-base digits and block substitution")
    add_scheme_flags(conv)
    conv.add_argument("--value", type=int, required=True)
    _add_output_flags(conv)
    conv.set_defaults(handler=_cmd_convert)

    scheme = commands.add_parser("scheme", help="build and print a block-substitution table")
    add_scheme_flags(scheme)
    scheme.add_argument("--json", action="store_true")
    scheme.set_defaults(handler=_cmd_scheme)

    lift = commands.add_parser("lift",
                               help="reindex digits onto the base with X replaced by X^k")
    lift.add_argument("--poly", type=_poly_arg, default=IntPoly.from_string(STANDARD_POLY_TEXT))
    lift.add_argument("--digits", required=True)
    lift.add_argument("--k", type=_positive_int, required=True)
    _add_output_flags(lift)
    lift.set_defaults(handler=_cmd_lift)

    seq = commands.add_parser("seq", help="print terms of the length sequences")
    seq.add_argument("--name", choices=[s.value for s in SequenceId], required=True)
    seq.add_argument("--count", type=_positive_int, required=True)
    seq.add_argument("--json", action="store_true")
    seq.set_defaults(handler=_cmd_seq)

    verify = commands.add_parser("verify", help="run the claim checks and print PASS/FAIL lines")
    verify.add_argument("--suite", action="append",
                        help="all or any of i,ii,...,ix,remark (repeatable, comma lists ok)")
    verify.add_argument("--range", type=_positive_int, default=None,
                        help="override the sweep bounds of the range checks")
    verify.add_argument("--samples", type=_positive_int, default=SAMPLE_COUNT)
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify.add_argument("--report", default=None,
                        help="also write one JSON object per check to this path")
    verify.add_argument("--jobs", type=_positive_int, default=1)
    verify.add_argument("--max-steps", type=_positive_int, default=DEFAULT_MAX_STEPS)
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except StepBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotRepresentableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
