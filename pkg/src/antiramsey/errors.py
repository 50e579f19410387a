"""Exception hierarchy shared by every module."""


class AntiRamseyError(Exception):
    """Base class for all errors raised by the package."""


class DivisionNotExact(AntiRamseyError, ArithmeticError):
    def __init__(self, remainder, message=None):
        self.remainder = remainder
        super().__init__(message or f"division leaves nonzero remainder {remainder}")


class InvalidBound(AntiRamseyError, ValueError):
    pass


class PoleAtZero(AntiRamseyError, ZeroDivisionError):
    pass


class InvalidArgument(AntiRamseyError, ValueError):
    pass


class InvalidVertex(InvalidArgument):
    pass


class InvalidNonfaces(InvalidArgument):
    pass


class InvalidWitness(InvalidArgument):
    pass


class NotPropertyI(AntiRamseyError):
    pass


class UnsupportedWitness(AntiRamseyError):
    pass


class EnumerationTooLarge(AntiRamseyError):
    pass


class BudgetExceeded(AntiRamseyError):
    pass


class EmptyInput(InvalidArgument):
    pass


class CapExceeded(AntiRamseyError):
    pass


class NotFullDimensional(AntiRamseyError):
    pass


class NotStandardType(AntiRamseyError):
    pass


class MixedDimensions(AntiRamseyError):
    pass


class NotBoundaryTriangulation(AntiRamseyError):
    pass


class NotInCstar(AntiRamseyError):
    pass


class NotUnimodular(AntiRamseyError):
    pass


class DimensionMismatch(AntiRamseyError, ValueError):
    pass


class ExactDivisionFailed(AntiRamseyError):
    pass
