"""Exception hierarchy shared by all mackit modules."""

from __future__ import annotations


class MackitError(Exception):
    """Base class for every error raised by the library."""


class DivisionByZero(MackitError, ZeroDivisionError):
    pass


class NonInvertibleDenominator(MackitError, ZeroDivisionError):
    """A denominator vanishes modulo the cyclotomic polynomial.

    ``partition`` is filled in by callers that know which symmetric-function
    coefficient triggered the failure.
    """

    def __init__(self, message: str, order: int | None = None, partition=None):
        super().__init__(message)
        self.order = order
        self.partition = partition


class InvalidPartition(MackitError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class CellOutsideDiagram(MackitError, ValueError):
    pass


class InvalidStrip(MackitError, ValueError):
    pass


class NotAHorizontalStrip(InvalidStrip):
    pass


class WeightMismatch(MackitError, ValueError):
    pass


class NonPolynomialResult(MackitError, ArithmeticError):
    pass


class NonIntegralResult(MackitError, ArithmeticError):
    pass


class BudgetExceeded(MackitError):
    pass
