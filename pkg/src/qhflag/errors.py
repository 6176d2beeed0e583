"""Exception types shared across the package."""


class QHError(Exception):
    """Base class for all package errors."""


class InvalidInputError(QHError, ValueError):
    """Bad user-supplied data: unknown type, malformed word, bad index."""


class CapExceededError(QHError, ValueError):
    """An enumeration would exceed its configured cap."""


class InternalConsistencyError(QHError, RuntimeError):
    """Two independent computations of the same quantity disagreed.

    Raised when a structural guarantee (integrality, uniqueness, agreement
    of redundant formulas) fails; always indicates a bug, never bad input.
    """
