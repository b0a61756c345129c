"""Shared exception types.

Exit-code mapping for the command line lives in cli.py: format and
precondition problems are "input errors", blown search budgets are
"resource errors".
"""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Malformed graph or colouring file. Carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CnfFormatError(ValueError):
    """Malformed or non-normalizable CNF input."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PreconditionError(ValueError):
    """A solver or constructor precondition does not hold.

    `name` is a short stable identifier ("degree bound", "size bound",
    "boundary incidence", "emptiness", "connectivity", ...) so tests and
    callers can match on the violated clause without string-scraping the
    full message.
    """

    def __init__(self, name: str, message: str):
        super().__init__(f"{name}: {message}")
        self.name = name


class PromiseViolationError(PreconditionError):
    """The input graph is not spider-free as promised.

    `witness` lists vertex ids that induce the offending spider.
    """

    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__("promise violation", message)
        self.witness = witness


class SizeLimitError(RuntimeError):
    """A deliberately exponential routine was asked to exceed its ceiling."""


class ReductionError(ValueError):
    """The formula cannot be reduced (disconnected incidence, bad delta)."""


class ResourceExceeded(RuntimeError):
    """Search budget (nodes or wall clock) exhausted. Carries partial stats."""

    def __init__(self, message: str, stats=None):
        super().__init__(message)
        self.stats = stats
