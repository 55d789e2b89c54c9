"""
Exception hierarchy for the toolkit.

Every error carries the process exit code the CLI reports for it, the way
route handlers map failures onto HTTP status codes.
"""

from typing import Optional


class DeBruijnError(Exception):
    """Base class for all toolkit errors"""

    exit_code = 4

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class DomainError(DeBruijnError, ValueError):
    """Input violates a precondition of a domain operation"""

    exit_code = 2


class VertexRangeError(DomainError):
    """A vertex lies outside [0, N-1]"""

    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} is out of range [0, {n - 1}]")
        self.vertex = vertex


class CycleValidationError(DomainError):
    """A vertex sequence is not a de Bruijn cycle"""

    def __init__(self, detail: str, position: Optional[int] = None):
        super().__init__(detail)
        self.position = position


class InvalidMoveError(DomainError):
    """A cross-join move does not apply to the given cycle"""


class UnsupportedOperationError(DeBruijnError):
    """The operation is undefined for these parameters (typically d does not divide N)"""

    exit_code = 2


class BudgetExceededError(DeBruijnError):
    """Enumeration grew past the configured budget"""

    exit_code = 3

    def __init__(self, budget: int, what: str = "cycles"):
        super().__init__(f"budget of {budget} {what} exceeded")
        self.budget = budget


class InvariantViolationError(DeBruijnError):
    """An internal self-check failed"""

    exit_code = 4
