"""Custom exception classes for cyclepack.

All errors raised by the library derive from CyclePackError so callers can
catch every cyclepack failure with a single except clause.
"""

from typing import Any


class CyclePackError(Exception):
    """Base exception for all cyclepack errors."""

    pass


class GraphFormatError(CyclePackError):
    """Graph text (graph6 or edge list) could not be decoded.

    Attributes:
        message: Human-readable error description
        line: The offending input line (may be truncated in __str__)
        position: Character or line offset of the problem, if known
    """

    def __init__(self, message: str, line: str | None = None, position: int | None = None):
        super().__init__(message)
        self.line = line or ""
        self.position = position

    def __str__(self) -> str:
        """Format error message with input context."""
        parts = [super().__str__()]
        if self.position is not None:
            parts.append(f"Position: {self.position}")
        if self.line:
            preview = self.line[:60] + "..." if len(self.line) > 60 else self.line
            parts.append(f"Input: {preview}")
        return " | ".join(parts)

    def __reduce__(self) -> tuple[Any, ...]:
        return (type(self), (self.args[0], self.line, self.position))


class InvalidGraphError(CyclePackError):
    """Graph construction violated the simple-graph invariants."""

    pass


class InvalidParameterError(CyclePackError, ValueError):
    """A numeric parameter (k, family size, budget) is out of range."""

    pass


class InvalidPackingError(CyclePackError):
    """A cycle packing is not valid for its host graph.

    Attributes:
        reason: Short machine-readable reason code
    """

    def __init__(self, message: str, reason: str):
        super().__init__(message)
        self.reason = reason

    def __reduce__(self) -> tuple[Any, ...]:
        return (type(self), (self.args[0], self.reason))


class BudgetExceededError(CyclePackError):
    """A bounded search ran out of its node budget before finishing.

    Attributes:
        budget: Name of the exhausted budget (a SearchBudgets field)
        limit: The configured limit that was hit
        partial: Best partial result found before the budget ran out
    """

    def __init__(self, budget: str, limit: int, partial: Any = None):
        self.budget = budget
        self.limit = limit
        self.partial = partial
        super().__init__(f"Search budget '{budget}' exhausted (limit {limit})")

    def __reduce__(self) -> tuple[Any, ...]:
        return (type(self), (self.budget, self.limit, self.partial))


class EquitableColoringUndetermined(BudgetExceededError):
    """Equitable coloring search gave up; no claim is made either way."""

    pass


class EnumerationLimitError(CyclePackError):
    """Requested internal enumeration is too large; supply a graph6 stream instead."""

    pass


class SummaryWriteError(CyclePackError):
    """A machine-readable summary could not be written.

    Attributes:
        path: Target file
    """

    def __init__(self, message: str, path: str):
        super().__init__(message)
        self.path = path

    def __reduce__(self) -> tuple[Any, ...]:
        return (type(self), (self.args[0], self.path))

    def __str__(self) -> str:
        return " | ".join([super().__str__(), f"Path: {self.path}"])
