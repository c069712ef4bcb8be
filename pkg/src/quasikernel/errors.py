"""Exception types shared across the package."""

from __future__ import annotations


class QkError(Exception):
    """Base class for all errors raised by this package."""


class VertexRangeError(QkError):
    """A vertex id falls outside range(n) for the digraph at hand."""


class GraphFormatError(QkError):
    """Text input does not conform to the graph file format."""

    def __init__(self, message: str, line: int | None = None):
        # line is 1-based when present
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(QkError):
    """Input violates a documented precondition of the operation."""


class StructureError(QkError):
    """Graph lacks the structural shape the operation requires."""


class ResourceLimitError(QkError):
    """A configured search budget was exhausted before completion."""


class VerificationError(QkError):
    """A result failed its mandatory post-hoc check."""

    def __init__(self, message: str, trace: object = None):
        self.trace = trace
        super().__init__(message)
