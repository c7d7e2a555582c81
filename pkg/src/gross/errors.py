"""Exception hierarchy shared by every gross module.

Each class carries the short ``name`` the CLI prints, so a failure reads the
same whether it surfaces from the library or the command line.
"""

from __future__ import annotations


class GrossError(Exception):
    """Base class for all domain errors raised by the package."""

    @property
    def name(self) -> str:
        return type(self).__name__


class DepthExceeded(GrossError):
    pass


class DivisionByZero(GrossError, ZeroDivisionError):
    pass


class TruncatedDivision(GrossError):
    """A division had no finite exact quotient.

    The truncated quotient is kept on ``quotient`` so callers can still
    inspect the leading terms.
    """

    def __init__(self, message: str, quotient=None):
        super().__init__(message)
        self.quotient = quotient


class GrossSyntaxError(GrossError, ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text = text
        self.pos = pos
        if text:
            message = f"{message} at position {pos}: {text!r}"
        super().__init__(message)

    @property
    def name(self) -> str:
        return "SyntaxError"


class NonPositiveCount(GrossError, ValueError):
    pass


class UnsupportedRatio(GrossError, ValueError):
    pass


class MixedBase(GrossError, ValueError):
    pass


class IncomparableExpSum(GrossError, ValueError):
    pass


class BadRadix(GrossError, ValueError):
    pass


class OffGrid(GrossError, ValueError):
    pass


class InexactConversion(GrossError):
    pass


class BudgetExceeded(GrossError):
    pass


class NotRational(GrossError, ValueError):
    pass


class ZeroDenominator(GrossError, ZeroDivisionError):
    pass


class NotFactorable(GrossError):
    pass


class UndefinedAtZero(GrossError):
    pass


class FormulaeDiscontinuous(GrossError):
    pass


class NotPolynomial(GrossError, ValueError):
    pass


class FormulaError(GrossError):
    """Evaluating one formula of a piecewise function failed."""

    def __init__(self, which: str, cause: Exception):
        super().__init__(f"formula {which} failed: {cause}")
        self.which = which
        self.cause = cause

    @property
    def name(self) -> str:
        return getattr(self.cause, "name", type(self.cause).__name__)


class InvalidDomain(GrossError, ValueError):
    """A grid, unit or count that does not describe a valid domain."""
