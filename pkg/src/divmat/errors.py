"""Exception hierarchy shared by the library and the CLI."""


class DivmatError(Exception):
    """Base class for all errors raised by divmat."""


class InvalidInputError(DivmatError, ValueError):
    """Malformed instance, distribution, table or parameter."""


class UnsupportedDomainError(DivmatError):
    """The operation needs a finite enumerable domain and did not get one."""


class BudgetExceededError(DivmatError):
    """An enumeration would exceed its configured resource limit."""


class HypothesisViolation(DivmatError):
    """A verify run found the index does not satisfy the required condition."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class VerificationMismatch(DivmatError):
    """Solver output disagrees with the brute-force oracle."""
