"""Exception types for the arfbetti package."""


class ArfBettiError(Exception):
    """Base class for all package errors."""


class EmptyGeneratorsError(ArfBettiError):
    """Raised when a generator list is empty."""


class InvalidEntryError(ArfBettiError):
    """Raised for generator entries that are not positive integers in range."""


class NonCofiniteError(ArfBettiError):
    """Raised when gcd(generators) != 1, so the complement in N is infinite."""


class NotMemberError(ArfBettiError):
    """Raised when an operation needs n in S but n is not a member."""


class NotArfError(ArfBettiError):
    """Raised when an operation requires the Arf property."""


class PreconditionFailedError(ArfBettiError):
    """A verification precondition does not hold.

    reason is "not_arf" or "multiplicity_drops".
    """

    def __init__(self, reason, message=None):
        self.reason = reason
        super().__init__(message or reason)


class ClassificationGapError(ArfBettiError):
    """An unmatched face fit none of the four documented types.

    This would contradict the face-matching argument behind the shift
    identity, so it always aborts the surrounding computation loudly.
    """


class BettiScaleError(ArfBettiError):
    """A computation exceeded the configured exact-computation limits."""
