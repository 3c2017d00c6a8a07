class DomainError(ValueError):
    """An input lies outside the combinatorial domain (box, weight, part bound)."""


class BudgetExceeded(RuntimeError):
    """A requested enumeration or graph would exceed the configured size budget."""

    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a convention or logic bug."""
