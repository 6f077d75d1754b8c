"""Expression language for hypercomplex arithmetic.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := "-" factor | rational | symbol | "(" expr ")"
            | "conj(" expr ")" | "norm(" expr ")" | "inv(" expr ")"
            | "dot(" expr "," expr ")"
    rational := int ["/" posint]
    symbol := "e" index | alias (levels up to 4)

``*`` is left-associative: ``a*b*c`` means ``(a*b)*c``, which matters from
the octonions on.
"""
import logging
import re
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Union

from errors import DimensionError, ParseError, UsageError
from hypercomplex import (
    ALIAS_MAX_LEVEL,
    ALIASES,
    CDElement,
    ProductVariant,
    basis,
    basis_name,
    cd_add,
    cd_conj,
    cd_dot,
    cd_inverse,
    cd_mul,
    cd_mul_variant,
    cd_neg,
    cd_norm,
    cd_scale,
    cd_sub,
    scalar,
)
from rational import format_rational, rat_normalize, rat_recip

logger = logging.getLogger(__name__)

MAX_EXPR_LEVEL = 6

TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*/(),]))")
SYMBOL = re.compile(r"e(\d+)")
ALIAS_INDEX = {name: index for index, name in enumerate(ALIASES) if index > 0}

Value = Union[Fraction, CDElement]


class Node:
    pass


@dataclass(frozen=True)
class Literal(Node):
    value: Fraction


@dataclass(frozen=True)
class Symbol(Node):
    index: int
    name: str = field(default="", compare=False)


@dataclass(frozen=True)
class Neg(Node):
    operand: Node


@dataclass(frozen=True)
class Sum(Node):
    left: Node
    op: str
    right: Node


@dataclass(frozen=True)
class Product(Node):
    left: Node
    right: Node
    # written as a*b*c, without parentheses around a*b
    chained: bool = field(default=False, compare=False)


@dataclass(frozen=True)
class Conj(Node):
    operand: Node


@dataclass(frozen=True)
class Norm(Node):
    operand: Node


@dataclass(frozen=True)
class Inv(Node):
    operand: Node


@dataclass(frozen=True)
class Dot(Node):
    left: Node
    right: Node


CALLS = {"conj": (1, Conj), "norm": (1, Norm), "inv": (1, Inv), "dot": (2, Dot)}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int

    def describe(self) -> str:
        return "end of input" if self.kind == "end" else f"'{self.text}'"


def tokenize(src: str) -> list:
    tokens = []
    pos = 0
    while pos < len(src):
        match = TOKEN.match(src, pos)
        if not match:
            if src[pos:].strip() == "":
                break
            bad = pos + len(src[pos:]) - len(src[pos:].lstrip())
            offset = len(src[:bad].encode())
            raise ParseError(f"unexpected character {src[bad]!r}", offset)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), len(src[:start].encode())))
        pos = match.end()
    tokens.append(Token("end", "", len(src.encode())))
    return tokens


class _Parser:
    def __init__(self, src: str, level):
        self.level = level
        self.tokens = tokenize(src)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, text: str) -> Token:
        token = self.advance()
        if token.text != text or token.kind != "op":
            raise ParseError(f"expected '{text}', found {token.describe()}", token.offset)
        return token

    def parse(self) -> Node:
        node = self.expr()
        token = self.peek()
        if token.kind != "end":
            raise ParseError(f"unexpected {token.describe()}", token.offset)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in ("+", "-"):
            op = self.advance().text
            node = Sum(node, op, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        products = 0
        while self.peek().kind == "op" and self.peek().text == "*":
            self.advance()
            node = Product(node, self.factor(), chained=products > 0)
            products += 1
        return node

    def factor(self) -> Node:
        token = self.peek()
        if token.kind == "op" and token.text == "-":
            self.advance()
            if self.peek().kind == "number":
                return Literal(-self.rational().value)
            return Neg(self.factor())
        if token.kind == "number":
            return self.rational()
        if token.kind == "op" and token.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if token.kind == "name":
            if token.text in CALLS and self.tokens[self.pos + 1].text == "(":
                return self.call()
            return self.symbol()
        raise ParseError(f"unexpected {token.describe()}", token.offset)

    def rational(self) -> Literal:
        numerator = int(self.advance().text)
        denominator = 1
        if self.peek().kind == "op" and self.peek().text == "/":
            self.advance()
            token = self.advance()
            if token.kind != "number":
                raise ParseError(f"expected a denominator, found {token.describe()}", token.offset)
            denominator = int(token.text)
        return Literal(rat_normalize(numerator, denominator))

    def call(self) -> Node:
        name = self.advance().text
        arity, node_type = CALLS[name]
        self.expect("(")
        args = [self.expr()]
        for _ in range(arity - 1):
            self.expect(",")
            args.append(self.expr())
        self.expect(")")
        return node_type(*args)

    def symbol(self) -> Symbol:
        token = self.advance()
        match = SYMBOL.fullmatch(token.text)
        if match:
            index = int(match.group(1))
        elif token.text in ALIAS_INDEX:
            if self.level is not None and self.level > ALIAS_MAX_LEVEL:
                raise ParseError(
                    f"alias '{token.text}' is only defined up to level {ALIAS_MAX_LEVEL}",
                    token.offset,
                )
            index = ALIAS_INDEX[token.text]
        else:
            raise ParseError(f"unknown symbol '{token.text}'", token.offset)
        if self.level is not None and index >= 1 << self.level:
            raise DimensionError(f"symbol {token.text} is out of range for level {self.level}")
        return Symbol(index, token.text)


def parse_expr(src: str, level=None) -> Node:
    """Parse src; with a level, symbols are range-checked against it."""
    if level is not None and not 0 <= level <= MAX_EXPR_LEVEL:
        raise UsageError(f"level must be between 0 and {MAX_EXPR_LEVEL}, got {level}")
    return _Parser(src, level).parse()


def children(node: Node):
    for item in fields(node):
        value = getattr(node, item.name)
        if isinstance(value, Node):
            yield value


def walk(node: Node):
    yield node
    for child in children(node):
        yield from walk(child)


def infer_level(node: Node) -> int:
    """Smallest level containing every symbol in the expression."""
    highest = max((n.index for n in walk(node) if isinstance(n, Symbol)), default=0)
    level = highest.bit_length()
    if level > MAX_EXPR_LEVEL:
        raise UsageError(f"e{highest} needs level {level}, above {MAX_EXPR_LEVEL}")
    return level


def has_unparenthesized_chain(node: Node) -> bool:
    return any(isinstance(n, Product) and n.chained for n in walk(node))


# -- printing -----------------------------------------------------------------

def _precedence(node: Node) -> int:
    if isinstance(node, Sum):
        return 1
    if isinstance(node, Product):
        return 2
    if isinstance(node, Neg) or (isinstance(node, Literal) and node.value < 0):
        return 3
    return 4


def to_source(node: Node, pretty: bool = False) -> str:
    """Print an expression so that parsing it back gives an equal tree."""

    def show(child: Node, minimum: int) -> str:
        text = to_source(child, pretty)
        return f"({text})" if _precedence(child) < minimum else text

    if isinstance(node, Literal):
        return format_rational(node.value)
    if isinstance(node, Symbol):
        return basis_name(node.index, pretty)
    if isinstance(node, Neg):
        if isinstance(node.operand, Literal):
            return f"-({to_source(node.operand, pretty)})"
        return f"-{show(node.operand, 3)}"
    if isinstance(node, Sum):
        return f"{show(node.left, 1)} {node.op} {show(node.right, 2)}"
    if isinstance(node, Product):
        return f"{show(node.left, 2)}*{show(node.right, 3)}"
    if isinstance(node, Dot):
        return f"dot({to_source(node.left, pretty)}, {to_source(node.right, pretty)})"
    name = {Conj: "conj", Norm: "norm", Inv: "inv"}[type(node)]
    return f"{name}({to_source(node.operand, pretty)})"


# -- evaluation ---------------------------------------------------------------

def _lift(value: Value, level: int) -> CDElement:
    return scalar(level, value) if isinstance(value, Fraction) else value


def eval_expr(node: Node, level: int, variant=ProductVariant.OM) -> Value:
    """Evaluate at the given level.

    Rationals stay rationals until they meet an element; norm and dot give
    rationals. Every element product uses ``variant`` from level 1 up.
    """
    variant = ProductVariant(variant)

    def ev(n: Node) -> Value:
        if isinstance(n, Literal):
            return n.value
        if isinstance(n, Symbol):
            return basis(level, n.index)
        if isinstance(n, Neg):
            value = ev(n.operand)
            return -value if isinstance(value, Fraction) else cd_neg(value)
        if isinstance(n, Sum):
            a, b = ev(n.left), ev(n.right)
            if isinstance(a, Fraction) and isinstance(b, Fraction):
                return a + b if n.op == "+" else a - b
            combine = cd_add if n.op == "+" else cd_sub
            return combine(_lift(a, level), _lift(b, level))
        if isinstance(n, Product):
            a, b = ev(n.left), ev(n.right)
            if isinstance(a, Fraction) and isinstance(b, Fraction):
                return a * b
            if isinstance(a, Fraction):
                return cd_scale(a, b)
            if isinstance(b, Fraction):
                return cd_scale(b, a)
            if level == 0:
                return cd_mul(a, b)
            return cd_mul_variant(variant, a, b)
        if isinstance(n, Conj):
            value = ev(n.operand)
            return value if isinstance(value, Fraction) else cd_conj(value)
        if isinstance(n, Norm):
            value = ev(n.operand)
            return value * value if isinstance(value, Fraction) else cd_norm(value)
        if isinstance(n, Dot):
            a, b = ev(n.left), ev(n.right)
            if isinstance(a, Fraction) and isinstance(b, Fraction):
                return a * b
            return cd_dot(_lift(a, level), _lift(b, level))
        if isinstance(n, Inv):
            value = ev(n.operand)
            return rat_recip(value) if isinstance(value, Fraction) else cd_inverse(value)
        raise TypeError(f"not an expression node: {n!r}")

    return ev(node)
