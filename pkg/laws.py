"""Executable catalog of composition-algebra laws.

Each law is a finite, exact check of one identity on concrete operands.
``run_check`` drives a law over either every tuple of signed basis elements
(exhaustive-basis mode) or seeded random operands (random mode), and
``property_matrix`` runs the four staircase properties level by level.
"""
import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional

from errors import UsageError
from hypercomplex import (
    CDElement,
    basis,
    cd_add,
    cd_conj,
    cd_dot,
    cd_inverse,
    cd_mul,
    cd_neg,
    cd_norm,
    cd_scale,
    format_element,
    halves,
    pair,
    promote,
    scalar,
    unit,
    zero,
)
from rational import format_rational
from utils.splitmix import SplitMix64, substream

logger = logging.getLogger(__name__)

# Scalars used by the scalar laws when no random stream supplies them.
EXHAUSTIVE_SCALARS = (Fraction(2), Fraction(-1, 3))

# Numerators and denominators of sampled coefficients.
SAMPLE_NUMERATORS = (-9, 9)
SAMPLE_DENOMINATORS = (1, 9)

CHUNK = 64


class LawId(str, Enum):
    COMPOSITION = "composition"
    LEFT_ASSOCIATIVE = "left-associative"
    COMMUTATIVE = "commutative"
    TRIVIAL_CONJUGATION = "trivial-conjugation"
    LEFT_ALTERNATIVE = "left-alternative"
    RIGHT_ALTERNATIVE = "right-alternative"
    FLEXIBLE = "flexible"
    SCALING_LEFT = "scaling-left"
    SCALING_RIGHT = "scaling-right"
    EXCHANGE = "exchange"
    CONJUGATE_LAW_1 = "conjugate-law-1"
    CONJUGATE_LAW_2 = "conjugate-law-2"
    CONJ_INVOLUTION = "conj-involution"
    CONJ_ANTI_AUTOMORPHISM = "conj-anti-automorphism"
    POLARIZATION = "polarization"
    NORM_SELF_DOT = "norm-self-dot"
    NORM_NONNEG = "norm-nonneg"
    NORM_ZERO_IFF_ZERO = "norm-zero-iff-zero"
    INVERSE_LAW = "inverse-law"
    ZERO_PRODUCT = "zero-product"
    DOT_DOUBLING = "dot-doubling"
    CONJ_DOUBLING = "conj-doubling"
    PRODUCT_DOUBLING = "product-doubling"
    NORM_DOUBLING = "norm-doubling"
    EMBEDDING_HOM = "embedding-hom"
    PAIR_UNIT_SHIFT = "pair-unit-shift"
    BILINEAR = "bilinear"
    DOT_LINEAR = "dot-linear"
    UNIT_LAW = "unit-law"
    CONJ_DEFINITION = "conj-definition"
    DOT_NONDEGENERATE = "dot-nondegenerate"
    NEG_SCALE = "neg-scale"
    VECTOR_SPACE = "vector-space"


class CheckMode(str, Enum):
    EXHAUSTIVE = "exhaustive-basis"
    RANDOM = "random"


@dataclass(frozen=True)
class LawSpec:
    law: LawId
    arity: int
    identity: Callable
    min_level: int = 0
    uses_scalars: bool = False
    needs_nonzero: bool = False
    # exhaustive mode also enumerates two-term signed basis sums
    composite: bool = False


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[tuple] = None
    scalars: Optional[tuple] = None


@dataclass(frozen=True)
class LawReport:
    law: LawId
    level: int
    mode: CheckMode
    samples: int
    seed: int
    holds: bool
    witness: Optional[tuple] = None
    scalars: Optional[tuple] = None
    elapsed: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        report = {
            "law": self.law.value,
            "level": self.level,
            "mode": self.mode.value,
            "samples": self.samples,
            "seed": self.seed,
            "holds": self.holds,
            "witness": [format_element(x) for x in self.witness] if self.witness else None,
            "elapsed_ms": round(self.elapsed * 1000, 3) if timing else None,
        }
        if self.scalars is not None:
            report["scalars"] = [format_rational(a) for a in self.scalars]
        return report


LAWS: dict = {}


def law(law_id: LawId, arity: int, **options):
    def register(fn):
        LAWS[law_id] = LawSpec(law_id, arity, fn, **options)
        return fn

    return register


# -- the staircase properties -------------------------------------------------

@law(LawId.COMPOSITION, 2, composite=True)
def _composition(x, y):
    return cd_norm(cd_mul(x, y)) == cd_norm(x) * cd_norm(y)


@law(LawId.LEFT_ASSOCIATIVE, 3)
def _associative(x, y, z):
    return cd_mul(cd_mul(x, y), z) == cd_mul(x, cd_mul(y, z))


@law(LawId.COMMUTATIVE, 2)
def _commutative(x, y):
    return cd_mul(x, y) == cd_mul(y, x)


@law(LawId.TRIVIAL_CONJUGATION, 1)
def _trivial_conjugation(x):
    return cd_conj(x) == x


# -- weakened associativity ---------------------------------------------------

@law(LawId.LEFT_ALTERNATIVE, 2)
def _left_alternative(x, y):
    return cd_mul(x, cd_mul(x, y)) == cd_mul(cd_mul(x, x), y)


@law(LawId.RIGHT_ALTERNATIVE, 2)
def _right_alternative(x, y):
    return cd_mul(cd_mul(y, x), x) == cd_mul(y, cd_mul(x, x))


@law(LawId.FLEXIBLE, 2)
def _flexible(x, y):
    return cd_mul(cd_mul(x, y), x) == cd_mul(x, cd_mul(y, x))


# -- composition-algebra theorems ---------------------------------------------

@law(LawId.SCALING_LEFT, 3)
def _scaling_left(x, y, z):
    return cd_dot(cd_mul(x, y), cd_mul(x, z)) == cd_norm(x) * cd_dot(y, z)


@law(LawId.SCALING_RIGHT, 3)
def _scaling_right(x, y, z):
    return cd_dot(cd_mul(x, z), cd_mul(y, z)) == cd_dot(x, y) * cd_norm(z)


@law(LawId.EXCHANGE, 4)
def _exchange(u, x, y, z):
    lhs = cd_dot(cd_mul(u, y), cd_mul(x, z)) + cd_dot(cd_mul(u, z), cd_mul(x, y))
    return lhs == 2 * cd_dot(u, x) * cd_dot(y, z)


@law(LawId.CONJUGATE_LAW_1, 3)
def _conjugate_law_1(x, y, z):
    return cd_dot(y, cd_mul(cd_conj(x), z)) == cd_dot(z, cd_mul(x, y))


@law(LawId.CONJUGATE_LAW_2, 3)
def _conjugate_law_2(x, y, z):
    return cd_dot(x, cd_mul(z, cd_conj(y))) == cd_dot(z, cd_mul(x, y))


@law(LawId.CONJ_INVOLUTION, 1)
def _conj_involution(x):
    return cd_conj(cd_conj(x)) == x


@law(LawId.CONJ_ANTI_AUTOMORPHISM, 2)
def _conj_anti_automorphism(x, y):
    return cd_conj(cd_mul(x, y)) == cd_mul(cd_conj(y), cd_conj(x))


@law(LawId.CONJ_DEFINITION, 1)
def _conj_definition(x):
    one = unit(x.level)
    return cd_conj(x) == cd_add(cd_scale(2 * cd_dot(x, one), one), cd_neg(x))


@law(LawId.POLARIZATION, 2)
def _polarization(x, y):
    return cd_dot(x, y) == (cd_norm(cd_add(x, y)) - cd_norm(x) - cd_norm(y)) / 2


@law(LawId.NORM_SELF_DOT, 1)
def _norm_self_dot(x):
    # x conj(x) is the norm as a multiple of 1
    return cd_mul(x, cd_conj(x)) == scalar(x.level, cd_dot(x, x)) and cd_norm(x) == cd_dot(x, x)


@law(LawId.NORM_NONNEG, 1)
def _norm_nonneg(x):
    return cd_norm(x) >= 0


@law(LawId.NORM_ZERO_IFF_ZERO, 1)
def _norm_zero_iff_zero(x):
    return (cd_norm(x) == 0) == x.is_zero()


@law(LawId.INVERSE_LAW, 1, needs_nonzero=True)
def _inverse_law(x):
    inv = cd_inverse(x)
    one = unit(x.level)
    return cd_mul(inv, x) == one and cd_mul(x, inv) == one


@law(LawId.ZERO_PRODUCT, 2, composite=True)
def _zero_product(x, y):
    return cd_mul(x, y).is_zero() == (x.is_zero() or y.is_zero())


@law(LawId.DOT_NONDEGENERATE, 1)
def _dot_nondegenerate(x):
    if x.is_zero():
        return True
    return any(cd_dot(basis(x.level, t), x) != 0 for t in range(x.dim))


# -- vector-algebra axioms ----------------------------------------------------

@law(LawId.BILINEAR, 3, uses_scalars=True)
def _bilinear(x, y, z, a, b):
    right = cd_mul(x, cd_add(cd_scale(a, y), cd_scale(b, z)))
    left = cd_mul(cd_add(cd_scale(a, x), cd_scale(b, y)), z)
    return (
        right == cd_add(cd_scale(a, cd_mul(x, y)), cd_scale(b, cd_mul(x, z)))
        and left == cd_add(cd_scale(a, cd_mul(x, z)), cd_scale(b, cd_mul(y, z)))
    )


@law(LawId.DOT_LINEAR, 3, uses_scalars=True)
def _dot_linear(x, y, z, a, b):
    return cd_dot(cd_add(cd_scale(a, x), cd_scale(b, y)), z) == a * cd_dot(x, z) + b * cd_dot(y, z)


@law(LawId.UNIT_LAW, 1)
def _unit_law(x):
    one = unit(x.level)
    return cd_mul(one, x) == x and cd_mul(x, one) == x


@law(LawId.NEG_SCALE, 1)
def _neg_scale(x):
    return cd_neg(x) == cd_scale(Fraction(-1), x)


@law(LawId.VECTOR_SPACE, 3, uses_scalars=True)
def _vector_space(x, y, z, a, b):
    o = zero(x.level)
    return (
        cd_add(cd_add(x, y), z) == cd_add(x, cd_add(y, z))
        and cd_add(x, y) == cd_add(y, x)
        and cd_add(o, x) == x
        and cd_add(x, cd_neg(x)) == o
        and cd_scale(a, cd_scale(b, x)) == cd_scale(a * b, x)
        and cd_scale(Fraction(1), x) == x
        and cd_scale(a + b, x) == cd_add(cd_scale(a, x), cd_scale(b, x))
        and cd_scale(a, cd_add(x, y)) == cd_add(cd_scale(a, x), cd_scale(a, y))
        and unit(x.level) != o
    )


# -- doubling identities: operands are split into their halves ----------------

@law(LawId.DOT_DOUBLING, 2, min_level=1)
def _dot_doubling(x, y):
    v1, v2 = halves(x)
    w1, w2 = halves(y)
    return cd_dot(x, y) == cd_dot(v1, w1) + cd_dot(v2, w2)


@law(LawId.CONJ_DOUBLING, 1, min_level=1)
def _conj_doubling(x):
    v1, v2 = halves(x)
    return cd_conj(x) == pair(cd_conj(v1), cd_neg(v2))


@law(LawId.PRODUCT_DOUBLING, 2, min_level=1)
def _product_doubling(x, y):
    v1, v2 = halves(x)
    w1, w2 = halves(y)
    expected = pair(
        cd_add(cd_mul(v1, w1), cd_neg(cd_mul(cd_conj(w2), v2))),
        cd_add(cd_mul(w2, v1), cd_mul(v2, cd_conj(w1))),
    )
    return cd_mul(x, y) == expected


@law(LawId.NORM_DOUBLING, 1, min_level=1)
def _norm_doubling(x):
    v1, v2 = halves(x)
    return cd_norm(x) == cd_norm(v1) + cd_norm(v2)


# -- embedding axioms: operands live one level below the pairs ----------------

@law(LawId.EMBEDDING_HOM, 2)
def _embedding_hom(x, y):
    nothing = zero(x.level)
    return (
        cd_mul(promote(x), promote(y)) == promote(cd_mul(x, y))
        and cd_norm(promote(x)) == cd_norm(x)
        and cd_norm(pair(nothing, x)) == cd_norm(x)
        and cd_dot(promote(x), pair(nothing, y)) == 0
    )


@law(LawId.PAIR_UNIT_SHIFT, 1)
def _pair_unit_shift(x):
    nothing = zero(x.level)
    return cd_mul(pair(x, nothing), pair(nothing, unit(x.level))) == pair(nothing, x)


def law_spec(law_id) -> LawSpec:
    try:
        return LAWS[LawId(law_id)]
    except ValueError:
        names = ", ".join(sorted(item.value for item in LawId))
        raise UsageError(f"unknown law {law_id!r}; choose from: {names}") from None


def _check_operands(spec: LawSpec, operands: tuple):
    if len(operands) != spec.arity:
        raise UsageError(f"{spec.law.value} takes {spec.arity} operands, got {len(operands)}")
    levels = {x.level for x in operands}
    if len(levels) != 1:
        raise UsageError(f"{spec.law.value} operands are at mixed levels {sorted(levels)}")
    level = levels.pop()
    if level < spec.min_level:
        raise UsageError(f"{spec.law.value} needs level >= {spec.min_level}, got {level}")
    if spec.needs_nonzero and any(x.is_zero() for x in operands):
        raise UsageError(f"{spec.law.value} requires nonzero operands")


def _evaluate(spec: LawSpec, operands: tuple, scalars: Optional[tuple]) -> Verdict:
    args = operands + tuple(scalars) if spec.uses_scalars else operands
    if spec.identity(*args):
        return Verdict(True)
    return Verdict(False, operands, scalars if spec.uses_scalars else None)


def eval_law(law_id, operands, scalars: Optional[tuple] = None) -> Verdict:
    """Evaluate one law on concrete operands, exactly.

    Args:
        law_id: the LawId (or its name) to evaluate
        operands: tuple of CDElements, as many as the law's arity
        scalars: (a, b) for the scalar laws; defaults to (2, -1/3)

    Returns:
        Verdict: holds, or the operands as witness
    """
    spec = law_spec(law_id)
    operands = tuple(operands)
    _check_operands(spec, operands)
    if spec.uses_scalars and scalars is None:
        scalars = EXHAUSTIVE_SCALARS
    return _evaluate(spec, operands, scalars)


def sample_rational(stream: SplitMix64) -> Fraction:
    numerator = stream.between(*SAMPLE_NUMERATORS)
    denominator = stream.between(*SAMPLE_DENOMINATORS)
    return Fraction(numerator, denominator)


def sample_element(level: int, stream: SplitMix64) -> CDElement:
    """Draw an element whose coefficients are n/d, n in [-9, 9], d in [1, 9].

    Coefficients are drawn in index order, numerator before denominator.
    """
    return CDElement(level, tuple(sample_rational(stream) for _ in range(1 << level)))


def signed_basis(level: int) -> list:
    """Signed basis elements in (sign, index) order: +e0..+e(d-1), -e0..-e(d-1)."""
    elements = [basis(level, t) for t in range(1 << level)]
    return elements + [cd_neg(x) for x in elements]


def two_term_sums(level: int) -> list:
    """All s*e_a + t*e_b with a < b and signs s, t in (+1, -1)."""
    sums = []
    for a, b in itertools.combinations(range(1 << level), 2):
        ea, eb = basis(level, a), basis(level, b)
        for sa, sb in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            sums.append(cd_add(cd_scale(Fraction(sa), ea), cd_scale(Fraction(sb), eb)))
    return sums


def exhaustive_operands(spec: LawSpec, level: int) -> list:
    candidates = signed_basis(level)
    if spec.composite:
        candidates += two_term_sums(level)
    return candidates


def _random_trial(spec: LawSpec, level: int, seed: int, index: int) -> Verdict:
    stream = substream(seed, index)
    operands = []
    for _ in range(spec.arity):
        x = sample_element(level, stream)
        while spec.needs_nonzero and x.is_zero():
            x = sample_element(level, stream)
        operands.append(x)
    scalars = (sample_rational(stream), sample_rational(stream)) if spec.uses_scalars else None
    return _evaluate(spec, tuple(operands), scalars)


def _first_random_violation(spec: LawSpec, level: int, samples: int, seed: int, threads: int):
    def trial(index):
        return _random_trial(spec, level, seed, index)

    if threads <= 1:
        for index in range(samples):
            verdict = trial(index)
            if not verdict.holds:
                return index, verdict
        return None

    # chunks are scanned in index order, so the witness has the smallest index
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for start in range(0, samples, CHUNK * threads):
            indices = range(start, min(start + CHUNK * threads, samples))
            for index, verdict in zip(indices, pool.map(trial, indices)):
                if not verdict.holds:
                    return index, verdict
    return None


def run_check(
    law_id,
    level: int,
    mode=CheckMode.RANDOM,
    samples: int = 1000,
    seed: int = 0,
    threads: int = 1,
) -> LawReport:
    """Check a law at one level and report the first violation, if any.

    Exhaustive-basis mode walks every tuple of signed basis elements (plus
    two-term sums for the composite laws) in lexicographic order. Random mode
    evaluates ``samples`` seeded trials; the witness is the violating trial
    with the smallest index, whatever the thread count.
    """
    spec = law_spec(law_id)
    mode = CheckMode(mode)
    if level < spec.min_level:
        raise UsageError(f"{spec.law.value} needs level >= {spec.min_level}, got {level}")
    if mode is CheckMode.RANDOM and samples < 1:
        raise UsageError(f"random mode needs at least 1 sample, got {samples}")

    logger.debug("checking %s at level %d (%s)", spec.law.value, level, mode.value)
    started = time.perf_counter()
    violation = None
    checked = 0

    if mode is CheckMode.EXHAUSTIVE:
        scalars = EXHAUSTIVE_SCALARS if spec.uses_scalars else None
        candidates = exhaustive_operands(spec, level)
        for operands in itertools.product(candidates, repeat=spec.arity):
            checked += 1
            verdict = _evaluate(spec, operands, scalars)
            if not verdict.holds:
                violation = verdict
                break
    else:
        found = _first_random_violation(spec, level, samples, seed, threads)
        checked = samples
        if found is not None:
            index, violation = found
            logger.info("%s fails at level %d on sample %d", spec.law.value, level, index)

    elapsed = time.perf_counter() - started
    report = LawReport(
        law=spec.law,
        level=level,
        mode=mode,
        samples=checked,
        seed=seed,
        holds=violation is None,
        witness=violation.witness if violation else None,
        scalars=violation.scalars if violation else None,
        elapsed=elapsed,
    )
    logger.debug("%s level %d: holds=%s in %.3fs", spec.law.value, level, report.holds, elapsed)
    return report


# -- property matrix ----------------------------------------------------------

PROPERTIES = (
    ("composition", LawId.COMPOSITION),
    ("associative", LawId.LEFT_ASSOCIATIVE),
    ("commutative", LawId.COMMUTATIVE),
    ("trivial_conj", LawId.TRIVIAL_CONJUGATION),
)

# composition, associative, commutative, trivial_conj at levels 0..4
EXPECTED_STAIRCASE = (
    (True, True, True, True),
    (True, True, True, False),
    (True, True, False, False),
    (True, False, False, False),
    (False, False, False, False),
)


@dataclass(frozen=True)
class PropertyRow:
    level: int
    composition: bool
    associative: bool
    commutative: bool
    trivial_conj: bool
    witnesses: dict = field(default_factory=dict)

    def flags(self) -> tuple:
        return (self.composition, self.associative, self.commutative, self.trivial_conj)

    def to_dict(self) -> dict:
        row = {"level": self.level}
        for name, _ in PROPERTIES:
            row[name] = getattr(self, name)
        row["witnesses"] = {
            name: [format_element(x) for x in witness] for name, witness in self.witnesses.items()
        }
        return row


@dataclass(frozen=True)
class ImplicationCheck:
    item: str
    level: int
    premise: bool
    conclusion: bool

    @property
    def holds(self) -> bool:
        return not self.premise or self.conclusion

    def describe(self) -> str:
        return IMPLICATIONS[self.item][0].format(n=self.level, m=self.level + 1)

    def to_dict(self) -> dict:
        return {
            "item": self.item,
            "levels": [self.level, self.level + 1],
            "statement": self.describe(),
            "premise": self.premise,
            "conclusion": self.conclusion,
            "holds": self.holds,
        }


# item -> (statement, premise, conclusion); rows are (lower level n, upper level n+1)
IMPLICATIONS = {
    "1a": (
        "composition at {m} => associative at {n}",
        lambda lo, hi: hi.composition,
        lambda lo, hi: lo.associative,
    ),
    "1b": (
        "associative composition at {n} => composition at {m}",
        lambda lo, hi: lo.composition and lo.associative,
        lambda lo, hi: hi.composition,
    ),
    "2a": (
        "associative composition at {m} => associative and commutative at {n}",
        lambda lo, hi: hi.composition and hi.associative,
        lambda lo, hi: lo.associative and lo.commutative,
    ),
    "2b": (
        "associative commutative composition at {n} => associative composition at {m}",
        lambda lo, hi: lo.composition and lo.associative and lo.commutative,
        lambda lo, hi: hi.composition and hi.associative,
    ),
    "3a": (
        "associative commutative composition at {m} => "
        "associative, commutative, trivial conjugation at {n}",
        lambda lo, hi: hi.composition and hi.associative and hi.commutative,
        lambda lo, hi: lo.associative and lo.commutative and lo.trivial_conj,
    ),
    "3b": (
        "associative commutative composition with trivial conjugation at {n} => "
        "associative commutative composition at {m}",
        lambda lo, hi: lo.composition and lo.associative and lo.commutative and lo.trivial_conj,
        lambda lo, hi: hi.composition and hi.associative and hi.commutative,
    ),
}


@dataclass(frozen=True)
class PropertyMatrix:
    rows: tuple
    implications: tuple
    samples: int
    seed: int

    @property
    def property_names(self) -> tuple:
        return tuple(name for name, _ in PROPERTIES)

    def matches_staircase(self) -> bool:
        for row in self.rows:
            expected = (
                EXPECTED_STAIRCASE[row.level]
                if row.level < len(EXPECTED_STAIRCASE)
                else (False, False, False, False)
            )
            if row.flags() != expected:
                return False
        return True

    def implications_hold(self) -> bool:
        return all(check.holds for check in self.implications)

    def to_list(self) -> list:
        return [row.to_dict() for row in self.rows]

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "rows": self.to_list(),
            "implications": [check.to_dict() for check in self.implications],
            "matches_staircase": self.matches_staircase(),
        }


def _property(law_id: LawId, level: int, samples: int, seed: int, threads: int) -> LawReport:
    report = run_check(law_id, level, CheckMode.EXHAUSTIVE)
    if report.holds and samples > 0 and law_id is not LawId.TRIVIAL_CONJUGATION:
        report = run_check(law_id, level, CheckMode.RANDOM, samples, seed, threads)
    return report


def property_matrix(max_level: int, samples: int = 1000, seed: int = 0, threads: int = 1) -> PropertyMatrix:
    """Staircase of composition, associativity, commutativity, trivial conjugation.

    Each property is first decided over signed basis operands, then, if no
    violation turned up, over ``samples`` random trials. Trivial conjugation
    is decided over the basis alone.
    """
    if max_level < 1:
        raise UsageError(f"max level must be at least 1, got {max_level}")

    rows = []
    for level in range(max_level + 1):
        flags = {}
        witnesses = {}
        for name, law_id in PROPERTIES:
            report = _property(law_id, level, samples, seed, threads)
            flags[name] = report.holds
            if report.witness:
                witnesses[name] = report.witness
        rows.append(PropertyRow(level=level, witnesses=witnesses, **flags))
        logger.info("level %d: %s", level, flags)

    checks = []
    for lo, hi in zip(rows, rows[1:]):
        for item, (_, premise, conclusion) in IMPLICATIONS.items():
            check = ImplicationCheck(item, lo.level, premise(lo, hi), conclusion(lo, hi))
            if not check.holds:
                logger.error("observed data contradicts %s: %s", item, check.describe())
            checks.append(check)

    return PropertyMatrix(tuple(rows), tuple(checks), samples, seed)
