from fractions import Fraction

import pytest
from hypothesis import given, settings

from errors import DivisionByZero, UsageError, ZeroDenominator
from rational import (
    as_rational,
    format_rational,
    rat_add,
    rat_cmp,
    rat_mul,
    rat_neg,
    rat_normalize,
    rat_recip,
    rat_sub,
)
from tests.strategies import rationals


def test_normalize_reduces_and_moves_sign_to_numerator():
    assert rat_normalize(2, -4) == Fraction(-1, 2)
    assert rat_normalize(0, 7) == Fraction(0)
    assert format_rational(rat_normalize(6, 3)) == "2"


@pytest.mark.parametrize(
    "computed, expected",
    [
        (lambda: rat_add(Fraction(1, 2), Fraction(1, 3)), Fraction(5, 6)),
        (lambda: rat_mul(Fraction(-2, 3), Fraction(3, 4)), Fraction(-1, 2)),
        (lambda: rat_recip(Fraction(-5, 7)), Fraction(-7, 5)),
        (lambda: rat_normalize(3, -6), Fraction(-1, 2)),
    ],
)
def test_worked_examples(computed, expected):
    assert computed() == expected


@given(rationals())
def test_normalize_is_idempotent(r):
    assert rat_normalize(r.numerator, r.denominator) == r
    assert rat_normalize(r.numerator, r.denominator).denominator == r.denominator


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rat_normalize(1, 0)
    # still catchable as the builtin
    with pytest.raises(ZeroDivisionError):
        rat_normalize(1, 0)


def test_reciprocal():
    assert rat_recip(Fraction(-2, 3)) == Fraction(-3, 2)
    with pytest.raises(DivisionByZero):
        rat_recip(Fraction(0))


def test_compare():
    assert rat_cmp(Fraction(1, 3), Fraction(1, 2)) == -1
    assert rat_cmp(Fraction(2, 4), Fraction(1, 2)) == 0
    assert rat_cmp(Fraction(1), Fraction(-5)) == 1


@pytest.mark.parametrize(
    "text, expected",
    [("3/2", Fraction(3, 2)), (" -1 / 2 ", Fraction(-1, 2)), ("+4", Fraction(4)), ("6/4", Fraction(3, 2))],
)
def test_as_rational_parses_text(text, expected):
    assert as_rational(text) == expected


@pytest.mark.parametrize("value", [True, 1.5, "abc", "1/-2", None])
def test_as_rational_refuses(value):
    with pytest.raises(UsageError):
        as_rational(value)


def test_as_rational_text_with_zero_denominator():
    with pytest.raises(ZeroDenominator):
        as_rational("1/0")


def test_format():
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(10, 5)) == "2"
    assert format_rational(Fraction(0)) == "0"


@given(rationals(), rationals())
def test_add_sub_are_inverse(x, y):
    assert rat_sub(rat_add(x, y), y) == x


@settings(max_examples=1000)
@given(rationals(), rationals(), rationals())
def test_field_laws(x, y, z):
    assert rat_add(rat_add(x, y), z) == rat_add(x, rat_add(y, z))
    assert rat_mul(rat_mul(x, y), z) == rat_mul(x, rat_mul(y, z))
    assert rat_add(x, y) == rat_add(y, x)
    assert rat_mul(x, y) == rat_mul(y, x)
    assert rat_mul(x, rat_add(y, z)) == rat_add(rat_mul(x, y), rat_mul(x, z))
    assert rat_add(x, Fraction(0)) == x and rat_mul(x, Fraction(1)) == x
    assert rat_add(x, rat_neg(x)) == 0
    if x:
        assert rat_mul(x, rat_recip(x)) == 1


@given(rationals())
def test_format_reparses(x):
    assert as_rational(format_rational(x)) == x
