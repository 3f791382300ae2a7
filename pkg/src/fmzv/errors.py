"""Exception hierarchy shared by every module of the package."""


class FMZVError(Exception):
    """Base class for all errors raised by :mod:`fmzv`."""


class NonPrimeP(FMZVError, ValueError):
    pass


class ReducibleModulus(FMZVError, ValueError):
    pass


class MissingModulus(FMZVError, ValueError):
    pass


class DivisionByZero(FMZVError, ZeroDivisionError):
    pass


class BothZero(FMZVError, ValueError):
    pass


class NotInvertible(FMZVError, ZeroDivisionError):
    """Raised when an element has no inverse modulo a prime."""


class BudgetExceeded(FMZVError, RuntimeError):
    """An enumeration would exceed the configured work cap."""


class InexactDivision(FMZVError, ArithmeticError):
    """Internal consistency failure: a division expected to be exact was not."""


class IndexOutOfRange(FMZVError, ValueError):
    pass


class ExcludedPrime(FMZVError, ValueError):
    """The prime is excluded for this computation (it divides a denominator)."""

    def __init__(self, prime, reason):
        super().__init__(f"prime {prime} excluded: {reason}")
        self.prime = prime
        self.reason = reason


class NotIrreducible(FMZVError, ValueError):
    pass


class NoSolution(FMZVError, ArithmeticError):
    """The linear system for an algebra relation is inconsistent."""


class ValidationFailed(FMZVError, ArithmeticError):
    """A discovered relation fits the probe primes but not the held-out ones."""

    def __init__(self, message, candidate=None):
        super().__init__(message)
        self.candidate = candidate
