"""Error hierarchy shared by every cayley module.

Every error the library raises on purpose derives from :class:`CayleyError`,
so the command line can map all of them to exit code 2 in one place.
"""


class CayleyError(Exception):
    """Base class for usage and arithmetic errors."""

    exit_code = 2


class ZeroDenominator(CayleyError, ZeroDivisionError):
    pass


class DivisionByZero(CayleyError, ZeroDivisionError):
    pass


class DimensionError(CayleyError, ValueError):
    pass


class LevelMismatch(CayleyError, ValueError):
    pass


class UsageError(CayleyError, ValueError):
    pass


class ParseError(CayleyError, ValueError):
    """Syntax error in an expression, located by byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class CounterexampleMismatch(CayleyError, AssertionError):
    """A published counterexample did not reproduce."""

    def __init__(self, name: str, computed: str, expected: str):
        super().__init__(f"{name}: computed {computed}, expected {expected}")
        self.name = name
        self.computed = computed
        self.expected = expected
