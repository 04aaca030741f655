"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Raised for arguments outside an operation's domain."""


class CapacityError(RuntimeError):
    """Raised when a computation would exceed a configured size cap."""


class ConvergenceError(RuntimeError):
    """Raised when an iterative solver hits its iteration cap."""
