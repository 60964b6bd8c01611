"""Exceptions raised by kegraph and the work budget that guards exhaustive searches."""

from typing import Optional


class KEGraphError(Exception):
    """Base class for every error raised by this package."""


class GraphParseError(KEGraphError, ValueError):
    """Malformed graph input. Carries a byte offset (graph6) or a 1-based line number (edge lists)."""

    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        self.reason = message
        self.offset = offset
        self.line = line
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif offset is not None:
            where = f"byte {offset}: "
        super().__init__(f"{where}{message}")


class DomainError(KEGraphError, ValueError):
    """An operation was called outside its precondition."""


class BudgetExceeded(KEGraphError, RuntimeError):
    """An exhaustive search ran past its node budget."""

    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"work budget of {limit:,} search nodes exhausted")


class WorkBudget:
    """Counts search nodes across every exponential routine of one analysis.

    A single instance is meant to be shared by all calls made for one graph,
    so the limit bounds the total cost rather than each call separately.
    """

    def __init__(self, limit: int):
        if limit <= 0:
            raise DomainError(f"budget must be positive, got {limit}")
        self.limit = limit
        self.used = 0

    def spend(self, amount: int = 1):
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(self.limit)

    @property
    def remaining(self) -> int:
        return max(self.limit - self.used, 0)
