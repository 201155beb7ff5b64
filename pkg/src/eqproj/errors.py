"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands live in rings with different numbers of variables."""


class InvalidDivisorError(ZeroDivisionError):
    pass


class InvalidWeightError(ValueError):
    pass


class NotRepresentableError(ValueError):
    """Polynomial has no representation in simple-root coordinates."""


class InvariantViolation(RuntimeError):
    """An exactness or integrality guarantee failed.

    This never signals bad user input; it means a computation that is
    supposed to be exact produced a remainder or a non-integral result.
    """
