"""Cross products in 3 and 7 dimensions, read off quaternion and octonion products.

A pure vector of dimension 3 (or 7) embeds as the imaginary part of a
quaternion (or octonion). For pure a, b the hypercomplex product splits as

    embed(a) * embed(b) = -(a . b) + embed(a x b)

so the dot product is the negated real part and the cross product the
imaginary part. With the basis order used here i x j = k, so no sign flip
of the embedding is needed.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from errors import DimensionError
from hypercomplex import CDElement, cd_add, cd_mul, make_element, scalar
from laws import sample_rational
from rational import ZERO, as_rational, format_rational
from utils.splitmix import substream

logger = logging.getLogger(__name__)

# vector dimension -> level of the algebra it lives in
CROSS_LEVELS = {3: 2, 7: 3}


@dataclass(frozen=True)
class PureVector:
    dim: int
    comps: tuple

    def __post_init__(self):
        if self.dim not in CROSS_LEVELS:
            raise DimensionError(f"cross products exist in dimensions 3 and 7, got {self.dim}")
        if len(self.comps) != self.dim:
            raise DimensionError(f"expected {self.dim} components, got {len(self.comps)}")

    def __str__(self) -> str:
        return ",".join(format_rational(c) for c in self.comps)

    def __add__(self, other: "PureVector") -> "PureVector":
        _same_dim(self, other)
        return PureVector(self.dim, tuple(p + q for p, q in zip(self.comps, other.comps)))

    def __neg__(self) -> "PureVector":
        return PureVector(self.dim, tuple(-c for c in self.comps))

    def __rmul__(self, a) -> "PureVector":
        return PureVector(self.dim, tuple(a * c for c in self.comps))

    def is_zero(self) -> bool:
        return not any(self.comps)


def pure_vector(comps) -> PureVector:
    comps = tuple(as_rational(c) for c in comps)
    return PureVector(len(comps), comps)


def parse_vector(text: str) -> PureVector:
    """Comma-separated rationals, e.g. ``1,0,-1/2``."""
    return pure_vector(part for part in text.split(","))


def unit_vector(dim: int, index: int) -> PureVector:
    return PureVector(dim, tuple(Fraction(int(t == index)) for t in range(dim)))


def _same_dim(a: PureVector, b: PureVector):
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} and {b.dim}")


def embed_pure(v: PureVector) -> CDElement:
    return make_element(CROSS_LEVELS[v.dim], (ZERO,) + v.comps)


def project_pure(x: CDElement) -> PureVector:
    if x.level not in CROSS_LEVELS.values():
        raise DimensionError(f"pure vectors live at levels 2 and 3, got {x.level}")
    if x.coeffs[0]:
        raise DimensionError(f"{x} has a nonzero real part")
    return PureVector(x.dim - 1, x.coeffs[1:])


def vec_dot(a: PureVector, b: PureVector) -> Fraction:
    _same_dim(a, b)
    return sum((p * q for p, q in zip(a.comps, b.comps)), ZERO)


def vec_norm(a: PureVector) -> Fraction:
    """Squared length."""
    return vec_dot(a, a)


def cross(a: PureVector, b: PureVector) -> PureVector:
    _same_dim(a, b)
    product = cd_mul(embed_pure(a), embed_pure(b))
    if product.coeffs[0] != -vec_dot(a, b):
        raise ArithmeticError(f"real part of {a} * {b} is not the negated dot product")
    return PureVector(a.dim, product.coeffs[1:])


def jacobi_sum(a: PureVector, b: PureVector, c: PureVector) -> PureVector:
    return cross(a, cross(b, c)) + cross(b, cross(c, a)) + cross(c, cross(a, b))


# -- identities ---------------------------------------------------------------

def _orthogonality(a, b):
    c = cross(a, b)
    return vec_dot(c, a) == 0 and vec_dot(c, b) == 0


def _lagrange(a, b):
    return vec_norm(cross(a, b)) == vec_norm(a) * vec_norm(b) - vec_dot(a, b) ** 2


def _anticommutativity(a, b):
    return cross(a, b) == -cross(b, a)


def _bilinearity(a, b, c, s, t):
    right = cross(a, s * b + t * c) == s * cross(a, b) + t * cross(a, c)
    left = cross(s * a + t * b, c) == s * cross(a, c) + t * cross(b, c)
    return right and left


def _decomposition(a, b):
    level = CROSS_LEVELS[a.dim]
    expected = cd_add(scalar(level, -vec_dot(a, b)), embed_pure(cross(a, b)))
    return cd_mul(embed_pure(a), embed_pure(b)) == expected


def _jacobi(a, b, c):
    return jacobi_sum(a, b, c).is_zero()


@dataclass(frozen=True)
class Identity:
    name: str
    arity: int
    check: Callable
    uses_scalars: bool = False
    # dims where the identity holds; elsewhere a witness is expected
    holds_in: tuple = (3, 7)
    basis_first: bool = False


IDENTITIES = (
    Identity("orthogonality", 2, _orthogonality),
    Identity("lagrange", 2, _lagrange),
    Identity("anticommutativity", 2, _anticommutativity),
    Identity("bilinearity", 3, _bilinearity, uses_scalars=True),
    Identity("decomposition", 2, _decomposition),
    Identity("jacobi", 3, _jacobi, holds_in=(3,), basis_first=True),
)


@dataclass(frozen=True)
class IdentityResult:
    name: str
    expected: bool
    holds: bool
    witness: Optional[tuple] = None

    @property
    def as_expected(self) -> bool:
        return self.holds == self.expected

    def to_dict(self) -> dict:
        return {
            "identity": self.name,
            "expected": self.expected,
            "holds": self.holds,
            "witness": [str(v) for v in self.witness] if self.witness else None,
        }


@dataclass(frozen=True)
class CrossReport:
    dim: int
    samples: int
    seed: int
    results: tuple

    @property
    def passed(self) -> bool:
        return all(result.as_expected for result in self.results)

    def result(self, name: str) -> IdentityResult:
        return next(result for result in self.results if result.name == name)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "samples": self.samples,
            "seed": self.seed,
            "passed": self.passed,
            "identities": [result.to_dict() for result in self.results],
        }


def sample_vector(dim: int, stream) -> PureVector:
    return PureVector(dim, tuple(sample_rational(stream) for _ in range(dim)))


def _first_basis_violation(identity: Identity, dim: int) -> Optional[tuple]:
    units = [unit_vector(dim, t) for t in range(dim)]
    for operands in itertools.product(units, repeat=identity.arity):
        if not identity.check(*operands):
            return operands
    return None


def _first_random_violation(identity: Identity, dim: int, samples: int, seed: int) -> Optional[tuple]:
    for index in range(samples):
        stream = substream(seed, index)
        operands = tuple(sample_vector(dim, stream) for _ in range(identity.arity))
        args = operands
        if identity.uses_scalars:
            args += (sample_rational(stream), sample_rational(stream))
        if not identity.check(*args):
            return operands
    return None


def cross_identities_check(dim: int, samples: int = 500, seed: int = 0) -> CrossReport:
    """Check every cross-product identity on seeded random vectors.

    Jacobi is first tried on all triples of unit vectors, so where it fails
    the witness is a basis triple.
    """
    if dim not in CROSS_LEVELS:
        raise DimensionError(f"cross products exist in dimensions 3 and 7, got {dim}")

    results = []
    for identity in IDENTITIES:
        witness = None
        if identity.basis_first:
            witness = _first_basis_violation(identity, dim)
        if witness is None:
            witness = _first_random_violation(identity, dim, samples, seed)
        result = IdentityResult(identity.name, dim in identity.holds_in, witness is None, witness)
        if not result.as_expected:
            logger.error("%s at dim %d: expected holds=%s", identity.name, dim, result.expected)
        results.append(result)
    return CrossReport(dim, samples, seed, tuple(results))
