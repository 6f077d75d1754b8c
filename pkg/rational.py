"""Exact rational scalars.

Coefficients are :class:`fractions.Fraction` values. A Fraction is always in
lowest terms with a positive denominator and zero is 0/1, so two scalars are
equal exactly when their canonical forms are identical.
"""
import re
from fractions import Fraction

from errors import DivisionByZero, UsageError, ZeroDenominator

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

RATIONAL_TEXT = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def rat_normalize(n: int, d: int) -> Rational:
    """Return the canonical fraction n/d."""
    if d == 0:
        raise ZeroDenominator(f"{n}/0 has no value")
    return Fraction(n, d)


def rat_add(x: Rational, y: Rational) -> Rational:
    return x + y


def rat_sub(x: Rational, y: Rational) -> Rational:
    return x - y


def rat_mul(x: Rational, y: Rational) -> Rational:
    return x * y


def rat_neg(x: Rational) -> Rational:
    return -x


def rat_recip(x: Rational) -> Rational:
    if x == 0:
        raise DivisionByZero("0 has no reciprocal")
    return 1 / x


def rat_cmp(x: Rational, y: Rational) -> int:
    """Three-way comparison: -1 when x < y, 0 when equal, 1 when x > y."""
    return (x > y) - (x < y)


def as_rational(value) -> Rational:
    """Coerce an int, Fraction or "n/d" string to a canonical Rational.

    Floats are refused: there is no floating-point mode.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise UsageError(f"{value!r} is not an exact rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = RATIONAL_TEXT.match(value)
        if not match:
            raise UsageError(f"'{value}' is not of the form n/d")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        return rat_normalize(numerator, denominator)
    raise UsageError(f"cannot use {type(value).__name__} as a rational")


def format_rational(x: Rational) -> str:
    # Fraction.__str__ already omits a denominator of 1
    return str(x)
