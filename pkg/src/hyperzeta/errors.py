"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class HyperzetaError(Exception):
    """Base class for every error raised by this package."""


class CurveError(HyperzetaError, ValueError):
    pass


class EvenCharacteristic(CurveError):
    pass


class BadDegree(CurveError):
    pass


class NotMonic(CurveError):
    pass


class NotSmooth(CurveError):
    pass


class BudgetExceeded(HyperzetaError):
    pass


class InsufficientSummaryDepth(HyperzetaError):
    pass


class SeriesError(HyperzetaError, ArithmeticError):
    pass


class NonUnitInverse(SeriesError):
    pass


class ExpNonzeroConstant(SeriesError):
    pass


class TruncationMismatch(SeriesError):
    pass


class NotIntegral(SeriesError):
    pass


class NotPolynomial(HyperzetaError):
    pass


class VerificationFailed(HyperzetaError):
    """A bijection or identity check failed; `counterexample` holds the least witness."""

    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class NotACover(HyperzetaError):
    pass


class NotABranchedCover(HyperzetaError):
    pass


class FixtureError(HyperzetaError, ValueError):
    pass
