"""Command line entry point.

Exit status: 0 when every task passes, 1 on a verification failure,
2 on usage or schema errors.
"""

import argparse
import json
import sys
from fractions import Fraction

import jsonschema

from ..skewfrac import SkewRationalField
from .config import ConfigError, algebra_from_text, load_config, load_schema
from .expr import ExpressionError, parse_expression
from .runner import all_passed, element_json, run_verification, s3_construction

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser():
    parser = _Parser(prog="skewgalois", description="Exact verification of H(t) constructions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    verify = sub.add_parser("verify", help="run the tasks of a JSON config")
    verify.add_argument("config", help="path to the job configuration")
    verify.add_argument("-o", "--report", help="write the report here instead of stdout")
    verify.add_argument("-n", "--order", type=int, help="series order override")
    verify.add_argument("-s", "--seed", type=int, help="seed override")

    ev = sub.add_parser("eval", help="evaluate an expression in H(t)")
    ev.add_argument("expression")
    group = ev.add_mutually_exclusive_group()
    group.add_argument("-a", "--algebra", default="hamilton",
                       help="hamilton, quaternion:a,b or matrix:n (default hamilton)")
    group.add_argument("-c", "--config", help="take the algebra from a job configuration")

    s3 = sub.add_parser("construct-s3", help="interpolate P0, P1 and certify the group S3")
    s3.add_argument("--p0", required=True, help="coefficients of P0, low degree first: 0,-1,0,1")
    s3.add_argument("--p1", required=True,
                    help="coefficients of P1; use --p1=-1,... when the list starts with a minus")
    s3.add_argument("-n", "--order", type=int, default=16, help="series order (default 16)")
    return parser


def _coefficients(text):
    try:
        return [str(Fraction(c.strip())) for c in text.split(",")]
    except ValueError:
        raise ConfigError(f"bad coefficient list {text!r}") from None


def _emit(doc, path=None):
    text = json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args):
    job = load_config(args.config, args.order, args.seed)
    report = run_verification(job)
    jsonschema.validate(report, load_schema("report"))
    _emit(report, args.report)
    return EXIT_OK if all_passed(report) else EXIT_FAIL


def cmd_eval(args):
    algebra = load_config(args.config).algebra if args.config else algebra_from_text(args.algebra)
    parent = SkewRationalField(algebra)
    try:
        x = parse_expression(parent, args.expression)
    except ExpressionError as exc:
        print(f"skewgalois eval: {exc}", file=sys.stderr)
        print(f"  {args.expression}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_FAIL
    _emit(element_json(x))
    return EXIT_OK


def cmd_construct_s3(args):
    if args.order < 2:
        raise ConfigError("series order must be at least 2")
    p0, p1 = _coefficients(args.p0), _coefficients(args.p1)
    if len(p0) != len(p1):
        raise ConfigError("P0 and P1 must have the same degree")
    if Fraction(p0[-1]) != 1 or Fraction(p1[-1]) != 1:
        raise ConfigError("P0 and P1 must be monic")
    ok, result = s3_construction(p0, p1, args.order)
    _emit(result)
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"verify": cmd_verify, "eval": cmd_eval, "construct-s3": cmd_construct_s3}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"skewgalois: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
