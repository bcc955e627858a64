"""Exception hierarchy shared by every module."""

from __future__ import annotations


class OddTrailsError(Exception):
    """Base class for all library errors."""


class GraphError(OddTrailsError, ValueError):
    """Malformed graph input (bad endpoint, bad edge id, ...)."""


class PreconditionError(OddTrailsError, ValueError):
    """An operation was called on an input outside its domain."""


class FlowShortfall(PreconditionError):
    """Fewer edge-disjoint paths exist than were requested."""

    def __init__(self, message: str, achieved: int) -> None:
        super().__init__(message)
        self.achieved = achieved


class BoundExceeded(PreconditionError):
    """An exhaustive search was asked to run past its size bound."""


class TheoremViolation(OddTrailsError, RuntimeError):
    """A branch that the underlying theorem proves unreachable was reached.

    Seeing this means either a bug or a counterexample to a proven result;
    ``instance`` carries a serialisable description for debugging.
    """

    def __init__(self, message: str, instance: str | None = None) -> None:
        super().__init__(message)
        self.instance = instance


class ParseError(OddTrailsError, ValueError):
    """A graph or decomposition file could not be parsed."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
