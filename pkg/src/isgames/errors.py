"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class IsGamesError(Exception):
    """Base class for all errors raised by this package."""


class GraphParseError(IsGamesError, ValueError):
    """The edge-list document is malformed.

    ``lineno`` is 1-based and refers to the physical line of the input
    that triggered the error (``None`` when the document ended early).
    """

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class HeaderError(GraphParseError):
    pass


class VertexRangeError(GraphParseError):
    pass


class SelfLoopError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class EdgeCountError(GraphParseError):
    pass


class IsolatedVertexError(IsGamesError, ValueError):
    """A game or recognizer was handed a graph with an isolated vertex."""

    def __init__(self, vertices):
        self.vertices = tuple(vertices)
        super().__init__(f"graph has isolated vertices: {list(self.vertices)}")


class InstanceTooLargeError(IsGamesError):
    """An exhaustive routine refused to run past its size guard."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what} = {size} exceeds the limit of {limit}")


class NotAComponentError(IsGamesError, ValueError):
    pass


class AllocationError(IsGamesError, ValueError):
    pass
