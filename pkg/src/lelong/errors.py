"""Exception types shared across the package."""


class LelongError(Exception):
    """Base class for all package-specific errors."""


class InvalidInputError(LelongError, ValueError):
    """Malformed, inexact, or dimensionally inconsistent input."""


class NotPrimaryError(LelongError, ValueError):
    """Input lacks the pure-power structure needed for finite positive mass."""
