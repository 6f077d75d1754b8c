import argparse
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction

from basis_tables import find_zero_divisors, gen_table, render_table, verify_counterexamples
from cross_product import cross, cross_identities_check, parse_vector, vec_dot
from errors import CayleyError, DimensionError, UsageError
from expr import eval_expr, has_unparenthesized_chain, infer_level, parse_expr, to_source
from hypercomplex import ProductVariant, cd_inverse, coefficients_text, format_element
from laws import CheckMode, LawId, property_matrix, run_check
from rational import format_rational, rat_recip
from utils.config import load_settings
from utils.styles import configure_logging, make_console
from utils.utils import implications_frame, mark, matrix_frame, records_frame

logger = logging.getLogger("cayley")

CHECK_MODES = {"random": CheckMode.RANDOM, "exhaustive": CheckMode.EXHAUSTIVE}


@dataclass(frozen=True)
class Outcome:
    output: str
    code: int = 0


def _emit(args, document, text: str, code: int = 0) -> Outcome:
    return Outcome(json.dumps(document, indent=4) if args.json else text, code)


def _format_value(value, pretty: bool) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    return format_element(value, pretty)


def _parse_with_level(args, err):
    """Parse the expression; report the level on stderr when it was inferred."""
    node = parse_expr(args.expr, args.level)
    level = args.level
    if level is None:
        level = infer_level(node)
        err.out(f"note: evaluating at level {level} (inferred from symbols)", highlight=False)
    if level >= 3 and has_unparenthesized_chain(node):
        logger.warning("products evaluate left to right: %s", to_source(node))
    return node, level


def run_eval(args, err) -> Outcome:
    node, level = _parse_with_level(args, err)
    variant = ProductVariant(args.variant)
    value = eval_expr(node, level, variant)
    document = {
        "expr": to_source(node),
        "level": level,
        "variant": variant.value,
        "kind": "rational" if isinstance(value, Fraction) else "element",
        "value": _format_value(value, args.pretty),
    }
    if not isinstance(value, Fraction):
        document["coefficients"] = coefficients_text(value)
    return _emit(args, document, document["value"])


def run_inverse(args, err) -> Outcome:
    node, level = _parse_with_level(args, err)
    value = eval_expr(node, level)
    inverse = rat_recip(value) if isinstance(value, Fraction) else cd_inverse(value)
    document = {
        "expr": to_source(node),
        "level": level,
        "value": _format_value(value, args.pretty),
        "inverse": _format_value(inverse, args.pretty),
    }
    return _emit(args, document, document["inverse"])


def run_table(args, err) -> Outcome:
    table = gen_table(args.level)
    return Outcome(render_table(table, "json" if args.json else "text", args.names or args.pretty))


def run_check_verb(args, err) -> Outcome:
    report = run_check(
        args.law, args.level, CHECK_MODES[args.mode], args.samples, args.seed, args.threads
    )
    text = (
        f"{report.law.value} at level {report.level} "
        f"({report.mode.value}, {report.samples} samples, seed {report.seed}): "
        f"{'holds' if report.holds else 'fails'}"
    )
    if report.witness:
        text += "\nwitness: " + "; ".join(format_element(x, args.pretty) for x in report.witness)
    if report.scalars:
        text += "\nscalars: " + ", ".join(format_rational(a) for a in report.scalars)
    return _emit(args, report.to_dict(args.timing), text, 0 if report.holds else 1)


def run_matrix(args, err) -> Outcome:
    matrix = property_matrix(args.max_level, args.samples, args.seed, args.threads)
    code = 0 if matrix.matches_staircase() and matrix.implications_hold() else 1
    text = "\n\n".join(
        [
            matrix_frame(matrix).to_string(),
            implications_frame(matrix).to_string(index=False),
            f"staircase: {'as expected' if matrix.matches_staircase() else 'UNEXPECTED'}",
        ]
    )
    return _emit(args, matrix.to_dict(), text, code)


def run_find_zero_divisors(args, err) -> Outcome:
    certs = find_zero_divisors(args.level, args.max_terms, args.threads)
    document = {
        "level": args.level,
        "max_terms": args.max_terms,
        "count": len(certs),
        "certificates": [cert.to_dict() for cert in certs],
    }
    if certs:
        text = records_frame(document["certificates"], ["x", "y"]).to_string(index=False)
    else:
        text = f"no zero divisors among {args.max_terms}-term candidates at level {args.level}"
    return _emit(args, document, text)


def run_verify_counterexamples(args, err) -> Outcome:
    report = verify_counterexamples(strict=False)
    records = [dict(check.to_dict(), passed=mark(check.passed)) for check in report.checks]
    text = records_frame(records, ["name", "passed", "computed", "expected"]).to_string(index=False)
    return _emit(args, report.to_dict(), text, 0 if report.passed else 1)


def run_cross(args, err) -> Outcome:
    if args.identities:
        report = cross_identities_check(args.dim, args.samples, args.seed)
        records = [
            dict(result.to_dict(), expected=mark(result.expected), holds=mark(result.holds))
            for result in report.results
        ]
        text = records_frame(records, ["identity", "expected", "holds"]).to_string(index=False)
        return _emit(args, report.to_dict(), text, 0 if report.passed else 1)

    if args.a is None or args.b is None:
        raise UsageError("cross needs two vectors, or --identities")
    a, b = parse_vector(args.a), parse_vector(args.b)
    for v in (a, b):
        if v.dim != args.dim:
            raise DimensionError(f"vector {v} has {v.dim} components, expected {args.dim}")
    product = cross(a, b)
    document = {"dim": args.dim, "a": str(a), "b": str(b), "cross": str(product), "dot": format_rational(vec_dot(a, b))}
    return _emit(args, document, str(product))


def build_parser(settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit one JSON document on stdout")
    common.add_argument("--pretty", action="store_true", help="Use letter names (i, j, k, ...) for basis elements")
    common.add_argument("--threads", type=int, default=settings.threads, help="Worker threads for checks and searches")
    common.add_argument("--verbose", "-v", action="store_true", help="Log debug output on stderr")

    parser = argparse.ArgumentParser(
        prog="cayley", description="Exact Cayley-Dickson arithmetic, law checks and tables"
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    def seeded(sub, samples):
        sub.add_argument("--samples", type=int, default=samples, help="Random trials per check")
        sub.add_argument("--seed", type=int, default=settings.seed, help="Seed (default from CAYLEY_SEED)")

    variants = [variant.value for variant in ProductVariant]

    sub = verbs.add_parser("eval", parents=[common], help="Evaluate an expression")
    sub.add_argument("expr", help="Expression, e.g. 'l*(I*J)'")
    sub.add_argument("--level", type=int, help="Algebra level (inferred from symbols when omitted)")
    sub.add_argument("--variant", choices=variants, default=ProductVariant.OM.value, help="Pair product")
    sub.set_defaults(handler=run_eval)

    sub = verbs.add_parser("inverse", parents=[common], help="Invert an evaluated expression")
    sub.add_argument("expr", help="Expression to invert")
    sub.add_argument("--level", type=int, help="Algebra level (inferred from symbols when omitted)")
    sub.set_defaults(handler=run_inverse)

    sub = verbs.add_parser("table", parents=[common], help="Basis multiplication table")
    sub.add_argument("--level", type=int, required=True, help="Algebra level, at most 6")
    sub.add_argument("--names", action="store_true", help="Letter names, levels up to 4")
    sub.set_defaults(handler=run_table)

    sub = verbs.add_parser("check", parents=[common], help="Check one law at one level")
    sub.add_argument("--law", required=True, choices=[item.value for item in LawId], metavar="LAW")
    sub.add_argument("--level", type=int, required=True, help="Algebra level")
    sub.add_argument("--mode", choices=sorted(CHECK_MODES), default="random", help="Operand source")
    sub.add_argument("--timing", action="store_true", help="Report elapsed_ms")
    seeded(sub, 1000)
    sub.set_defaults(handler=run_check_verb)

    sub = verbs.add_parser("matrix", parents=[common], help="Property staircase across levels")
    sub.add_argument("--max-level", type=int, default=4, help="Highest level (at least 1)")
    seeded(sub, 1000)
    sub.set_defaults(handler=run_matrix)

    sub = verbs.add_parser("find-zero-divisors", parents=[common], help="Search small zero divisors")
    sub.add_argument("--level", type=int, required=True, help="Algebra level, at least 1")
    sub.add_argument("--max-terms", type=int, default=2, help="Basis terms per operand (1 or 2)")
    sub.set_defaults(handler=run_find_zero_divisors)

    sub = verbs.add_parser("verify-counterexamples", parents=[common], help="Recompute the published counterexamples")
    sub.set_defaults(handler=run_verify_counterexamples)

    sub = verbs.add_parser("cross", parents=[common], help="3- and 7-dimensional cross products")
    sub.add_argument("a", nargs="?", help="Comma-separated rationals (use -- before negative vectors)")
    sub.add_argument("b", nargs="?", help="Comma-separated rationals")
    sub.add_argument("--dim", type=int, choices=(3, 7), required=True)
    sub.add_argument("--identities", action="store_true", help="Check the cross-product identities")
    seeded(sub, 500)
    sub.set_defaults(handler=run_cross)

    return parser


def main(argv=None) -> int:
    err = make_console(stderr=True)
    try:
        settings = load_settings()
        parser = build_parser(settings)
        try:
            args = parser.parse_args(argv)
        except SystemExit as exit_:
            return exit_.code if isinstance(exit_.code, int) else 2

        configure_logging("DEBUG" if args.verbose else settings.log_level)
        if args.threads < 1:
            raise UsageError(f"--threads must be at least 1, got {args.threads}")
        if getattr(args, "samples", 1) < 0:
            raise UsageError(f"--samples must be non-negative, got {args.samples}")
        outcome = args.handler(args, err)
    except CayleyError as error:
        err.out(f"error: {error}", highlight=False)
        return error.exit_code

    make_console().out(outcome.output, highlight=False)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
