"""Exception hierarchy shared by the package."""
from __future__ import annotations


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SizeError(GraphError):
    """Vertex count outside the supported range."""


class LoopError(GraphError):
    """Attempt to add an edge from a vertex to itself."""


class VertexIndexError(GraphError, IndexError):
    """Vertex index out of range."""


class DegreeError(GraphError):
    """Degree parameter incompatible with the vertex count."""


class ParityError(DegreeError):
    """No (quasi-)regular graph exists for the requested parity."""


class ConnectivityError(GraphError):
    """A connected graph was required."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


class Graph6LengthError(Graph6Error):
    pass


class Graph6PaddingError(Graph6Error):
    pass


class ReciprocityError(GraphError):
    """Comparison mask is not symmetric or has an unknown diagonal entry."""


class CatalogLookupError(KeyError):
    """No catalog graph for the requested (n, k) cell."""

    def __init__(self, n: int, k: int, alternatives: list[tuple[int, int]]):
        self.n = n
        self.k = k
        self.alternatives = alternatives
        near = ", ".join(f"({a},{b})" for a, b in alternatives)
        super().__init__(f"no catalog entry for n={n}, k={k}; nearest: {near}")

    def __str__(self) -> str:
        return self.args[0]


class FrontierError(ValueError):
    """Recommendation constraints cannot be met together."""

    def __init__(self, message: str, frontier: list[tuple[int, int, int]]):
        super().__init__(message)
        self.frontier = frontier
