from fractions import Fraction

import pytest
from hypothesis import given

from errors import DimensionError, DivisionByZero, ParseError, UsageError, ZeroDenominator
from expr import (
    Literal,
    Neg,
    Product,
    Sum,
    Symbol,
    eval_expr,
    has_unparenthesized_chain,
    infer_level,
    parse_expr,
    to_source,
)
from hypercomplex import ProductVariant, basis, cd_neg, format_element, make_element, unit, zero
from tests.strategies import elements


def evaluate(src: str, level: int, variant=ProductVariant.OM):
    return eval_expr(parse_expr(src, level), level, variant)


# ============================================================================
# Parsing
# ============================================================================


def test_products_associate_left():
    tree = parse_expr("i*j*k")
    assert tree == Product(Product(Symbol(1), Symbol(2)), Symbol(3))
    assert has_unparenthesized_chain(tree)
    assert not has_unparenthesized_chain(parse_expr("(i*j)*k"))
    assert parse_expr("(i*j)*k") == tree


def test_negative_literals_fold():
    tree = parse_expr("3/2*e1 + -1/2*e3")
    assert tree == Sum(
        Product(Literal(Fraction(3, 2)), Symbol(1)),
        "+",
        Product(Literal(Fraction(-1, 2)), Symbol(3)),
    )
    assert parse_expr("-e2") == Neg(Symbol(2))


def test_aliases_and_indices_are_the_same_symbol():
    assert parse_expr("kL") == parse_expr("e11")
    assert parse_expr("l", 3) == Symbol(4)


@pytest.mark.parametrize(
    "src, offset",
    [("i +", 3), ("i * )", 4), ("(i", 2), ("i $ j", 2), ("dot(i)", 5), ("1/x", 2), ("ω + i", 0)],
)
def test_syntax_errors_report_byte_offsets(src, offset):
    with pytest.raises(ParseError) as caught:
        parse_expr(src)
    assert caught.value.offset == offset


def test_offsets_count_bytes_not_characters():
    with pytest.raises(ParseError) as caught:
        parse_expr("\u00a0i $")
    # the no-break space takes two bytes
    assert caught.value.offset == 4
    with pytest.raises(ParseError) as caught:
        parse_expr("ω")
    assert "at byte 0" in str(caught.value)


def test_unknown_symbol():
    with pytest.raises(ParseError, match="unknown symbol 'q'"):
        parse_expr("q")


def test_symbol_range():
    with pytest.raises(DimensionError):
        parse_expr("e4", 2)
    with pytest.raises(DimensionError):
        parse_expr("l", 2)
    with pytest.raises(ParseError):
        parse_expr("i", 5)
    with pytest.raises(UsageError):
        parse_expr("e1", 7)


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        parse_expr("1/0")


def test_level_inference():
    assert infer_level(parse_expr("2")) == 0
    assert infer_level(parse_expr("e1")) == 1
    assert infer_level(parse_expr("i*j")) == 2
    assert infer_level(parse_expr("l*(I*J)")) == 3
    assert infer_level(parse_expr("norm(e3 + e10)")) == 4
    assert infer_level(parse_expr("e63")) == 6
    with pytest.raises(UsageError):
        infer_level(parse_expr("e64"))


# ============================================================================
# Printing
# ============================================================================


@pytest.mark.parametrize(
    "src",
    [
        "3/2*e1 - 1/2*e3",
        "e1*(e2*e4)",
        "e1*e2*e4",
        "e1 - (e2 - e3)",
        "-(e1*e2)",
        "-(2)",
        "conj(e1 + 2) - norm(e2)*e3",
        "dot(e1, -e1)*inv(2)",
    ],
)
def test_source_reparses_to_the_same_tree(src):
    tree = parse_expr(src)
    assert to_source(tree) == src
    assert parse_expr(to_source(tree)) == tree


def test_pretty_source():
    assert to_source(parse_expr("e4*(e5*e6)"), pretty=True) == "l*(I*J)"


@given(elements(3))
def test_canonical_text_round_trips(x):
    assert evaluate(format_element(x), 3) in (x, x.coeffs[0])
    if any(x.coeffs[1:]):
        assert evaluate(format_element(x), 3) == x


# ============================================================================
# Evaluation
# ============================================================================


def test_quaternion_and_octonion_products():
    assert evaluate("i*j", 2) == basis(2, 3)
    assert evaluate("l*(I*J)", 3) == basis(3, 7)
    assert evaluate("(l*I)*J", 3) == cd_neg(basis(3, 7))
    assert evaluate("l*I*J", 3) == cd_neg(basis(3, 7))


def test_coefficients():
    assert evaluate("3/2*e1 + -1/2*e3", 2) == make_element(2, [0, "3/2", 0, "-1/2"])
    assert evaluate("2*(e1 - e1)", 2) == zero(2)


def test_norm_dot_and_inverse():
    assert evaluate("norm((e3+e10)*(e6-e15))", 4) == 0
    assert evaluate("norm(e3+e10)", 4) == 2
    assert evaluate("dot(e1 + 2, e1 - 3)", 2) == -5
    assert evaluate("inv(1)", 3) == 1
    assert evaluate("inv(e1)", 1) == cd_neg(basis(1, 1))
    assert evaluate("inv(2*e0)", 2) == make_element(2, ["1/2", 0, 0, 0])
    assert evaluate("conj(3)", 2) == 3


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        evaluate("inv(e1 - e1)", 2)
    with pytest.raises(DivisionByZero):
        evaluate("inv(0)", 2)


def test_variant_products():
    # 1 + k and 1 - k are the complex pairs (1 ; i) and (1 ; -i)
    assert evaluate("(1 + k)*(1 - k)", 2, ProductVariant.CM) == zero(2)
    assert evaluate("(1 + k)*(1 - k)", 2, ProductVariant.OM) == make_element(2, [2, 0, 0, 0])
    # level 0 ignores the variant
    assert evaluate("2*3", 0, ProductVariant.QM) == 6
    assert evaluate("e0*e0", 0, ProductVariant.CM) == unit(0)
