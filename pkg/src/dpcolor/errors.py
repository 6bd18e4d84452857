"""Exception hierarchy shared by every module."""

from __future__ import annotations


class DPColorError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(DPColorError, ValueError):
    """Structurally invalid input: unknown vertex, loop, bad matching, ..."""


class ResourceLimitError(DPColorError):
    """An exhaustive search would exceed its configured size guard or budget."""


class HypothesisViolationError(DPColorError):
    """The instance does not satisfy the preconditions of the coloring procedure.

    ``report`` carries the HypothesisReport when one was produced, ``vertex``
    names the offending vertex for mid-run failures.
    """

    def __init__(self, message: str, report=None, vertex: str | None = None):
        super().__init__(message)
        self.report = report
        self.vertex = vertex


class OddCycleError(DPColorError):
    """Raised by the Richardson kernel routine when an odd directed cycle exists."""

    def __init__(self, witness: list[str]):
        super().__init__(f"odd directed cycle: {' -> '.join(witness)}")
        self.witness = witness
