"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for domain errors (bad input values, failed preconditions)."""


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class WindowError(AlgebraError, ValueError):
    """A variable or derivation index falls outside the configured window."""


class DimensionMismatch(AlgebraError, ValueError):
    pass


class RingMismatch(AlgebraError, TypeError):
    pass


class NotInvertible(AlgebraError, ArithmeticError):
    """An element or matrix is not a unit of its ring."""


class DeterminantError(AlgebraError, ValueError):
    """A matrix was required to have determinant 1."""


class CocycleError(AlgebraError, ArithmeticError):
    """Internal consistency failure: a derivation cocycle left the Lie algebra."""


class NotPrimitive(AlgebraError, ValueError):
    pass


class ReducibleError(AlgebraError, ValueError):
    pass


class SearchCapExceeded(AlgebraError, RuntimeError):
    pass


class ParseError(Exception):
    """Malformed expression text. ``position`` is a 0-based column."""

    def __init__(self, message, text="", position=None):
        self.message = message
        self.text = text
        self.position = position
        if position is None:
            super().__init__(message)
        else:
            super().__init__(f"{message} at column {position}: {text!r}")
