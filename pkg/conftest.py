import pytest
from hypothesis import settings

from hypercomplex import basis, cd_add, cd_neg

# exact arithmetic on octonions and sedenions is slow enough to trip the default deadline
settings.register_profile("cayley", deadline=None, max_examples=50)
settings.load_profile("cayley")


@pytest.fixture
def quaternion_units() -> tuple:
    """i, j, k at level 2."""
    return tuple(basis(2, t) for t in (1, 2, 3))


@pytest.fixture
def octonion_units() -> dict:
    """The named octonion units l, I, J, K."""
    return {name: basis(3, t) for name, t in (("l", 4), ("I", 5), ("J", 6), ("K", 7))}


@pytest.fixture
def sedenion_pair() -> tuple:
    """(k + jL, J - KL): a pair of nonzero sedenions whose product is zero."""
    return cd_add(basis(4, 3), basis(4, 10)), cd_add(basis(4, 6), cd_neg(basis(4, 15)))
