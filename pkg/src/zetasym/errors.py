"""Exception types shared across the package."""


class ZetaSymError(Exception):
    """Base class for all package errors."""


class DomainError(ZetaSymError, ValueError):
    """Argument outside the contractual domain."""


class PoleError(DomainError):
    """Evaluation requested at a pole of the function."""


class NonFiniteError(DomainError):
    """A NaN or infinity was supplied or produced where a finite value is required."""


class AccuracyError(ZetaSymError):
    """The requested absolute-error target cannot be met with the given configuration."""


class ConvergenceError(ZetaSymError):
    """An iterative scheme exceeded its iteration budget."""


class BracketError(ZetaSymError):
    """Root bracketing endpoints do not straddle a sign change."""


class OverflowAbort(ZetaSymError):
    """Exact integer generation exceeded the supported 128-bit range."""
