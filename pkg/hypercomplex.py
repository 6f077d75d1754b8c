"""Cayley-Dickson elements over exact rationals.

A level-n element is a flat tuple of 2**n rational coefficients. Its ordered
pair view is positional: the left half holds coefficients [0, 2**(n-1)) and
the right half [2**(n-1), 2**n), so ``x = (left ; right) = left + right * u``
where u is the new unit introduced at level n (j, l, L, ...).

Level 0 is the rationals, 1 the complex numbers, 2 the quaternions,
3 the octonions and 4 the sedenions.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional

from errors import DimensionError, DivisionByZero, LevelMismatch
from rational import ONE, ZERO, as_rational, format_rational, rat_recip

# Index names used by the textual form; e8.. read as products with L.
ALIASES = (
    "1", "i", "j", "k", "l", "I", "J", "K",
    "L", "iL", "jL", "kL", "lL", "IL", "JL", "KL",
)
ALIAS_MAX_LEVEL = 4


class ProductVariant(str, Enum):
    """Candidate pair products.

    CM and QM generalize complex and quaternion multiplication naively and
    are kept only to reproduce their counterexamples; OM is the
    Cayley-Dickson product used everywhere else.
    """

    CM = "cm"
    QM = "qm"
    OM = "om"


@dataclass(frozen=True)
class CDElement:
    level: int
    coeffs: tuple

    def __post_init__(self):
        if self.level < 0 or len(self.coeffs) != 1 << self.level:
            raise DimensionError(
                f"level {self.level} needs {1 << max(self.level, 0)} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @property
    def dim(self) -> int:
        return 1 << self.level

    @property
    def left(self) -> "CDElement":
        return halves(self)[0]

    @property
    def right(self) -> "CDElement":
        return halves(self)[1]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        return format_element(self)

    def __add__(self, other):
        return cd_add(self, other)

    def __sub__(self, other):
        return cd_sub(self, other)

    def __neg__(self):
        return cd_neg(self)

    def __mul__(self, other):
        if isinstance(other, CDElement):
            return cd_mul(self, other)
        return cd_scale(as_rational(other), self)

    def __rmul__(self, other):
        return cd_scale(as_rational(other), self)


# Tuple kernels. These carry the recursion so no intermediate elements are
# allocated; all-zero halves short-circuit, which keeps sparse (basis-like)
# operands cheap at high levels.

def _add(a: tuple, b: tuple) -> tuple:
    if not any(b):
        return a
    if not any(a):
        return b
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: tuple, b: tuple) -> tuple:
    if not any(b):
        return a
    return tuple(x - y for x, y in zip(a, b))


def _neg(a: tuple) -> tuple:
    return tuple(-x for x in a)


def _conj(a: tuple) -> tuple:
    return a[:1] + tuple(-x for x in a[1:])


def _mul(a: tuple, b: tuple) -> tuple:
    n = len(a)
    if n == 1:
        return (a[0] * b[0],)
    if not any(a) or not any(b):
        return (ZERO,) * n
    h = n // 2
    v1, v2 = a[:h], a[h:]
    w1, w2 = b[:h], b[h:]
    # ([v1 w1 - conj(w2) v2] ; [w2 v1 + v2 conj(w1)])
    left = _sub(_mul(v1, w1), _mul(_conj(w2), v2))
    right = _add(_mul(w2, v1), _mul(v2, _conj(w1)))
    return left + right


def _same_level(x: CDElement, y: CDElement):
    if x.level != y.level:
        raise LevelMismatch(f"operands at levels {x.level} and {y.level}")


def make_element(level: int, coeffs: Iterable) -> CDElement:
    """Build a level-``level`` element from 2**level rational-like values."""
    if level < 0:
        raise DimensionError(f"level must be non-negative, got {level}")
    values = tuple(as_rational(c) for c in coeffs)
    if len(values) != 1 << level:
        raise DimensionError(
            f"level {level} needs {1 << level} coefficients, got {len(values)}"
        )
    return CDElement(level, values)


def zero(level: int) -> CDElement:
    return CDElement(level, (ZERO,) * (1 << level))


def unit(level: int) -> CDElement:
    return basis(level, 0)


def scalar(level: int, a) -> CDElement:
    return CDElement(level, (as_rational(a),) + (ZERO,) * ((1 << level) - 1))


def basis(level: int, index: int) -> CDElement:
    """The basis element e_index at the given level.

    e0 = 1, e1 = i, e2 = j, e3 = k, e4 = l, e5 = I, e6 = J, e7 = K, e8 = L,
    and e(8+t) = e_t * L at level 4.
    """
    if level < 0:
        raise DimensionError(f"level must be non-negative, got {level}")
    dim = 1 << level
    if not 0 <= index < dim:
        raise DimensionError(f"basis index {index} out of range for level {level}")
    coeffs = [ZERO] * dim
    coeffs[index] = ONE
    return CDElement(level, tuple(coeffs))


def halves(x: CDElement) -> tuple:
    """Split x into its ordered pair (left ; right) one level down."""
    if x.level == 0:
        raise DimensionError("a level-0 scalar has no pair view")
    h = x.dim // 2
    return CDElement(x.level - 1, x.coeffs[:h]), CDElement(x.level - 1, x.coeffs[h:])


def pair(v1: CDElement, v2: CDElement) -> CDElement:
    """The ordered pair (v1 ; v2) one level up."""
    _same_level(v1, v2)
    return CDElement(v1.level + 1, v1.coeffs + v2.coeffs)


def promote(x: CDElement) -> CDElement:
    """Embed x as (x ; 0) at the next level."""
    return CDElement(x.level + 1, x.coeffs + (ZERO,) * x.dim)


def cd_add(x: CDElement, y: CDElement) -> CDElement:
    _same_level(x, y)
    return CDElement(x.level, _add(x.coeffs, y.coeffs))


def cd_sub(x: CDElement, y: CDElement) -> CDElement:
    _same_level(x, y)
    return CDElement(x.level, _sub(x.coeffs, y.coeffs))


def cd_neg(x: CDElement) -> CDElement:
    return CDElement(x.level, _neg(x.coeffs))


def cd_scale(a: Fraction, x: CDElement) -> CDElement:
    return CDElement(x.level, tuple(a * c for c in x.coeffs))


def cd_conj(x: CDElement) -> CDElement:
    """Conjugate: (v1 ; v2) -> (conj(v1) ; -v2), the identity on scalars."""
    return CDElement(x.level, _conj(x.coeffs))


def cd_mul(x: CDElement, y: CDElement) -> CDElement:
    """Cayley-Dickson product (v1;v2)(w1;w2) = (v1w1 - conj(w2)v2 ; w2v1 + v2conj(w1))."""
    _same_level(x, y)
    return CDElement(x.level, _mul(x.coeffs, y.coeffs))


def cd_mul_variant(variant: ProductVariant, x: CDElement, y: CDElement) -> CDElement:
    """Pair product under one of the candidate definitions.

    The variant only applies to the outermost pair; products of halves use
    the Cayley-Dickson product.

    Args:
        variant: which candidate product to use
        x, y: operands at the same level, at least 1

    Returns:
        CDElement: the pair product
    """
    _same_level(x, y)
    variant = ProductVariant(variant)
    if x.level == 0:
        raise DimensionError("product variants need pair operands (level >= 1)")
    if variant is ProductVariant.OM:
        return cd_mul(x, y)

    h = x.dim // 2
    v1, v2 = x.coeffs[:h], x.coeffs[h:]
    w1, w2 = y.coeffs[:h], y.coeffs[h:]
    if variant is ProductVariant.CM:
        # ([v1 w1 - v2 w2] ; [v1 w2 + v2 w1])
        left = _sub(_mul(v1, w1), _mul(v2, w2))
        right = _add(_mul(v1, w2), _mul(v2, w1))
    else:
        # ([v1 w1 - v2 conj(w2)] ; [v1 w2 + v2 conj(w1)])
        left = _sub(_mul(v1, w1), _mul(v2, _conj(w2)))
        right = _add(_mul(v1, w2), _mul(v2, _conj(w1)))
    return CDElement(x.level, left + right)


def cd_dot(x: CDElement, y: CDElement) -> Fraction:
    _same_level(x, y)
    return sum((a * b for a, b in zip(x.coeffs, y.coeffs) if a and b), ZERO)


def cd_norm(x: CDElement) -> Fraction:
    """The norm x.x: the squared Euclidean length, never its square root."""
    return cd_dot(x, x)


def cd_inverse(x: CDElement) -> CDElement:
    if x.is_zero():
        raise DivisionByZero(f"the zero element of level {x.level} has no inverse")
    return cd_scale(rat_recip(cd_norm(x)), cd_conj(x))


def basis_name(index: int, pretty: bool = False, level: Optional[int] = None) -> str:
    if pretty and index < len(ALIASES) and (level is None or level <= ALIAS_MAX_LEVEL):
        return ALIASES[index]
    return f"e{index}"


def format_element(x: CDElement, pretty: bool = False) -> str:
    """Canonical text: nonzero terms in index order, e.g. ``3/2*e1 - 1/2*e3``.

    The e0 term is written as a bare rational and the zero element as ``0``.
    With ``pretty`` the indices below 16 use their letter names, up to level 4;
    above that every term keeps its ``e<k>`` name.
    """
    terms = []
    for index, c in enumerate(x.coeffs):
        if not c:
            continue
        magnitude = abs(c)
        if index == 0:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = basis_name(index, pretty, x.level)
        else:
            body = f"{format_rational(magnitude)}*{basis_name(index, pretty, x.level)}"
        terms.append(("-" if c < 0 else "+", body))

    if not terms:
        return "0"
    sign, body = terms[0]
    text = body if sign == "+" else f"-{body}"
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


def coefficients_text(x: CDElement) -> list:
    return [format_rational(c) for c in x.coeffs]


def signed_basis_of(x: CDElement) -> tuple:
    """Return (sign, index) when x is plus or minus a basis element, else None."""
    support = [(i, c) for i, c in enumerate(x.coeffs) if c]
    if len(support) != 1 or abs(support[0][1]) != 1:
        return None
    index, c = support[0]
    return (1 if c > 0 else -1, index)


