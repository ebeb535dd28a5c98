"""
DRINFELD Exceptions

Error hierarchy shared by every layer. The CLI maps these onto exit codes.
"""


class DrinfeldError(Exception):
    """Root of all library errors."""


class FieldError(DrinfeldError):
    """Invalid field parameters, or operands living over different fields."""


class ArithmeticDomainError(DrinfeldError, ZeroDivisionError):
    """Division by zero or inversion of a non-unit."""


class NotIrreducibleError(DrinfeldError, ValueError):
    """A polynomial required to be monic irreducible is not."""


class GradingError(DrinfeldError, ValueError):
    """Weight/type mismatch, or a coefficient outside the type class."""


class InsufficientPrecisionError(DrinfeldError):
    """A coefficient beyond the certified precision was requested."""

    def __init__(self, message: str, required: int = 0, available: int = 0):
        super().__init__(message)
        self.required = required
        self.available = available


class ResourceLimitError(DrinfeldError):
    """A configured resource ceiling (degree bound) was hit."""


class LevelError(DrinfeldError, ValueError):
    """Level preconditions violated (P divides the level, p^2 | n, ...)."""


class UnknownActionError(DrinfeldError, KeyError):
    """No Atkin-Lehner or U_p data is known for a handle."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class SuiteError(DrinfeldError, ValueError):
    """Unknown verification suite or invalid suite parameters."""


class OracleDomainError(DrinfeldError, ValueError):
    """A closed-form coefficient formula was asked outside its stated range."""


class SpanError(DrinfeldError, ArithmeticError):
    """A series does not reduce to zero against a basis it should lie in."""

    def __init__(self, message: str, witness: int = -1):
        super().__init__(message)
        self.witness = witness
