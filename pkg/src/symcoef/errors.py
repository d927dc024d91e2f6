class DomainError(ValueError):
    """Input outside an operation's domain (size mismatch, failed precondition)."""


class ConsistencyError(ArithmeticError):
    """An exactness guarantee failed; indicates a bug, not bad input."""


class StabilizationError(RuntimeError):
    """A stabilization loop hit its ceiling without two agreeing values."""
