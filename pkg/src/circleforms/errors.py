"""Exception taxonomy shared across the package."""


class CircleformsError(Exception):
    """Base class for all package errors."""


class DomainError(CircleformsError, ValueError):
    """Input violates a documented precondition (wrong degree, mode, shape...)."""


class UnsupportedModeError(DomainError):
    """Operation requires the other scalar mode (e.g. gcd needs exact coefficients)."""


class InconsistencyError(CircleformsError, ArithmeticError):
    """Numerical contamination: a quantity that must vanish structurally did not."""


class NumericError(CircleformsError, ArithmeticError):
    """Iterative numeric procedure failed to converge or to certify its result."""


class ParseError(CircleformsError, ValueError):
    """Malformed coefficient or matrix text; message carries the position."""
