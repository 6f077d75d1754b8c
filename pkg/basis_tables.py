"""Basis multiplication tables, published counterexamples, zero-divisor search."""
import itertools
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from errors import CounterexampleMismatch, DimensionError, UsageError
from hypercomplex import (
    ALIAS_MAX_LEVEL,
    CDElement,
    ProductVariant,
    basis,
    cd_add,
    cd_inverse,
    cd_mul,
    cd_mul_variant,
    cd_neg,
    cd_norm,
    cd_scale,
    format_element,
    pair,
    signed_basis_of,
    unit,
    zero,
)
from rational import format_rational
from utils.utils import table_frame

logger = logging.getLogger(__name__)

MAX_TABLE_LEVEL = 6


@dataclass(frozen=True, eq=False)
class BasisTable:
    """Signed products of basis elements: e_s * e_t = signs[s, t] * e_indices[s, t]."""

    level: int
    signs: np.ndarray
    indices: np.ndarray

    @property
    def dim(self) -> int:
        return 1 << self.level

    def entry(self, s: int, t: int) -> tuple:
        return int(self.signs[s, t]), int(self.indices[s, t])

    def is_signed_permutation(self) -> bool:
        """Every row and column holds each index exactly once, with sign +1 or -1."""
        expected = np.arange(self.dim)
        rows = (np.sort(self.indices, axis=1) == expected).all()
        columns = (np.sort(self.indices, axis=0) == expected[:, None]).all()
        return bool(rows and columns and np.isin(self.signs, (-1, 1)).all())

    def antisymmetric_offdiag(self) -> bool:
        """e_s * e_t = -(e_t * e_s) for distinct imaginary units s, t."""
        signs = self.signs[1:, 1:]
        indices = self.indices[1:, 1:]
        off = ~np.eye(self.dim - 1, dtype=bool)
        return bool(((signs == -signs.T) & (indices == indices.T))[off].all())

    def to_dict(self) -> dict:
        entries = [
            [["+" if self.signs[s, t] > 0 else "-", int(self.indices[s, t])] for t in range(self.dim)]
            for s in range(self.dim)
        ]
        return {"level": self.level, "entries": entries}


def gen_table(level: int) -> BasisTable:
    """Multiply every pair of basis elements with the Cayley-Dickson product."""
    if level < 0:
        raise DimensionError(f"level must be non-negative, got {level}")
    if level > MAX_TABLE_LEVEL:
        raise UsageError(f"tables are limited to level {MAX_TABLE_LEVEL}, got {level}")

    dim = 1 << level
    signs = np.zeros((dim, dim), dtype=np.int8)
    indices = np.zeros((dim, dim), dtype=np.int64)
    units = [basis(level, t) for t in range(dim)]
    for s, t in itertools.product(range(dim), repeat=2):
        signed = signed_basis_of(cd_mul(units[s], units[t]))
        if signed is None:
            raise ArithmeticError(f"e{s}*e{t} is not a signed basis element")
        signs[s, t], indices[s, t] = signed
    return BasisTable(level, signs, indices)


def render_table(table: BasisTable, fmt: str = "text", names: bool = False) -> str:
    """Render as the imaginary-unit grid (text) or the full signed-index matrix (json)."""
    if names and table.level > ALIAS_MAX_LEVEL:
        raise UsageError(f"basis names exist up to level {ALIAS_MAX_LEVEL}, got {table.level}")
    if fmt == "json":
        return json.dumps(table.to_dict(), indent=4)
    if fmt != "text":
        raise UsageError(f"unknown table format {fmt!r}")
    if table.dim == 1:
        return "(no imaginary units: 1*1 = 1)"
    return table_frame(table, names).to_string()


# -- published counterexamples ------------------------------------------------

@dataclass(frozen=True)
class CounterexampleCheck:
    name: str
    description: str
    passed: bool
    computed: str
    expected: str

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "passed": self.passed,
            "computed": self.computed,
            "expected": self.expected,
        }


@dataclass(frozen=True)
class CounterexampleReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [check.to_dict() for check in self.checks]}


def sedenion_witness() -> tuple:
    """x = k + jL, y = J - KL: nonzero sedenions with x * y = 0."""
    x = cd_add(basis(4, 3), basis(4, 10))
    y = cd_add(basis(4, 6), cd_neg(basis(4, 15)))
    return x, y


def _half(a: int) -> Fraction:
    return Fraction(a, 2)


def _variants_agree(level: int, variants: tuple) -> str:
    for s, t in itertools.product(range(1 << level), repeat=2):
        x, y = basis(level, s), basis(level, t)
        products = {cd_mul_variant(v, x, y) for v in variants}
        if len(products) > 1:
            return f"differ at e{s}, e{t}"
    return "agree"


def _element_check(name, description, computed: CDElement, expected: CDElement):
    return CounterexampleCheck(
        name, description, computed == expected, format_element(computed), format_element(expected)
    )


def _text_check(name, description, computed: str, expected: str):
    return CounterexampleCheck(name, description, computed == expected, computed, expected)


def _counterexample_checks():
    i2, j2, k2 = basis(2, 1), basis(2, 2), basis(2, 3)
    one1, i1 = unit(1), basis(1, 1)

    # pairs of complex numbers: v1 = w1 = 1, v2 = i, w2 = -i
    x = pair(one1, i1)
    y = pair(one1, cd_neg(i1))
    product = cd_mul_variant(ProductVariant.CM, x, y)
    yield _element_check(
        "cm-complex-pair", "variant CM on (1 ; i) and (1 ; -i) is the zero vector", product, zero(2)
    )
    yield _text_check(
        "cm-complex-pair-norm",
        "so the CM product breaks the composition law",
        f"{format_rational(cd_norm(product))} != {format_rational(cd_norm(x) * cd_norm(y))}",
        "0 != 4",
    )

    # pairs of quaternions: v1 = -i, v2 = j, w1 = i, w2 = j
    x = pair(cd_neg(i2), j2)
    y = pair(i2, j2)
    product = cd_mul_variant(ProductVariant.QM, x, y)
    yield _element_check(
        "qm-quaternion-pair", "variant QM on (-i ; j) and (i ; j) is the zero vector", product, zero(3)
    )
    yield _text_check(
        "qm-quaternion-pair-norm",
        "so the QM product breaks the composition law",
        f"{format_rational(cd_norm(product))} != {format_rational(cd_norm(x) * cd_norm(y))}",
        "0 != 4",
    )

    yield _text_check(
        "variants-agree-on-real-halves",
        "CM, QM and OM coincide on pairs of reals",
        _variants_agree(1, tuple(ProductVariant)),
        "agree",
    )
    yield _text_check(
        "qm-om-agree-on-complex-halves",
        "QM and OM coincide on pairs of complex numbers",
        _variants_agree(2, (ProductVariant.QM, ProductVariant.OM)),
        "agree",
    )

    yield _element_check("quaternion-ij", "i * j = k", cd_mul(i2, j2), k2)
    yield _element_check("quaternion-ji", "j * i = -k", cd_mul(j2, i2), cd_neg(k2))

    ell, big_i, big_j, big_k = (basis(3, t) for t in (4, 5, 6, 7))
    yield _element_check(
        "octonion-l(IJ)", "l * (I * J) = K", cd_mul(ell, cd_mul(big_i, big_j)), big_k
    )
    yield _element_check(
        "octonion-(lI)J", "(l * I) * J = -K", cd_mul(cd_mul(ell, big_i), big_j), cd_neg(big_k)
    )

    x, y = sedenion_witness()
    yield _element_check(
        "sedenion-zero-product", "(k + jL) * (J - KL) is the zero vector", cd_mul(x, y), zero(4)
    )
    yield _text_check(
        "sedenion-norms",
        "both factors have norm 2",
        f"{format_rational(cd_norm(x))}, {format_rational(cd_norm(y))}",
        "2, 2",
    )
    yield _element_check(
        "sedenion-inverse-x",
        "(k + jL)^-1 = -1/2 k - 1/2 jL",
        cd_inverse(x),
        cd_add(cd_scale(_half(-1), basis(4, 3)), cd_scale(_half(-1), basis(4, 10))),
    )
    yield _element_check(
        "sedenion-inverse-y",
        "(J - KL)^-1 = -1/2 J + 1/2 KL",
        cd_inverse(y),
        cd_add(cd_scale(_half(-1), basis(4, 6)), cd_scale(_half(1), basis(4, 15))),
    )
    one = unit(4)
    inverse_law = all(
        cd_mul(cd_inverse(v), v) == one and cd_mul(v, cd_inverse(v)) == one for v in (x, y)
    )
    yield _text_check(
        "sedenion-inverse-law",
        "both factors are invertible on either side",
        "holds" if inverse_law else "fails",
        "holds",
    )


def verify_counterexamples(strict: bool = True) -> CounterexampleReport:
    """Recompute every published counterexample.

    Args:
        strict: raise CounterexampleMismatch on the first failed check

    Returns:
        CounterexampleReport: one entry per check
    """
    checks = []
    for check in _counterexample_checks():
        if not check.passed:
            logger.error("%s: computed %s, expected %s", check.name, check.computed, check.expected)
            if strict:
                raise CounterexampleMismatch(check.name, check.computed, check.expected)
        checks.append(check)
    return CounterexampleReport(tuple(checks))


# -- zero divisors ------------------------------------------------------------

@dataclass(frozen=True)
class ZeroDivisorCert:
    x: CDElement
    y: CDElement
    level: int

    def verify(self) -> bool:
        return (
            not self.x.is_zero()
            and not self.y.is_zero()
            and cd_mul(self.x, self.y).is_zero()
            and cd_norm(self.x) * cd_norm(self.y) != 0
        )

    def to_dict(self) -> dict:
        return {"x": format_element(self.x), "y": format_element(self.y), "level": self.level}


def search_candidates(level: int, max_terms: int) -> list:
    """Signed sums of up to max_terms basis elements, first coefficient positive."""
    dim = 1 << level
    candidates = [basis(level, a) for a in range(dim)]
    if max_terms == 2:
        for a, b in itertools.combinations(range(dim), 2):
            ea, eb = basis(level, a), basis(level, b)
            candidates.append(cd_add(ea, eb))
            candidates.append(cd_add(ea, cd_neg(eb)))
    return candidates


def find_zero_divisors(level: int, max_terms: int, threads: int = 1) -> list:
    """All ordered candidate pairs with zero product, one per sign class.

    Results come back in candidate order whatever the thread count.
    """
    if level < 1:
        raise UsageError(f"zero-divisor search needs level >= 1, got {level}")
    if max_terms not in (1, 2):
        raise UsageError(f"max terms must be 1 or 2, got {max_terms}")

    candidates = search_candidates(level, max_terms)
    logger.debug("searching %d candidate pairs at level %d", len(candidates) ** 2, level)

    def scan(x):
        return [ZeroDivisorCert(x, y, level) for y in candidates if cd_mul(x, y).is_zero()]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            found = list(pool.map(scan, candidates))
    else:
        found = [scan(x) for x in candidates]
    return [cert for certs in found for cert in certs]
