"""Exception types shared across the package."""


class BranchTraceError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BranchTraceError, ValueError):
    """An argument is outside the domain an operation is defined on."""


class ResourceError(BranchTraceError):
    """A requested computation exceeds a configured size cap."""


class InconsistentTrace(BranchTraceError):
    """A branch string does not describe any trajectory ending at the
    given terminal value.

    ``index`` is the 0-based position (in forward trace order) of the
    symbol whose inverse step failed.
    """

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class KeyLengthError(DomainError):
    """A digest key does not have the required length."""


class BlockLengthError(DomainError):
    """An absorbed block does not have the required length."""
