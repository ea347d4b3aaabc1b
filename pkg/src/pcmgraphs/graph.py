"""Small undirected simple graphs stored as adjacency bit-rows.

Vertices are 0-based in this module's API and 1-based in every text format
(edge lists, CSV, matrices), matching how comparison patterns are written.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegreeError, LoopError, SizeError, VertexIndexError

MAX_VERTICES = 62

#: Distance/diameter marker for vertex pairs with no connecting path.
UNREACHABLE = math.inf


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``rows[v]`` has bit ``w`` set iff v~w."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise SizeError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise SizeError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or (row >> v) & 1:
                raise VertexIndexError(f"row {v} has bits outside the graph")
            w = row
            while w:
                low = w & -w
                u = low.bit_length() - 1
                if not (self.rows[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
                w ^= low

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        """Skip validation; for producers that build symmetric rows."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], *, one_based: bool = False) -> Graph:
        g = graph_new(n)
        off = 1 if one_based else 0
        rows = list(g.rows)
        for i, j in edges:
            i -= off
            j -= off
            _check_pair(n, i, j)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def neighbors(self, v: int) -> list[int]:
        return [w for w in range(self.n) if (self.rows[v] >> w) & 1]

    def edges(self) -> list[tuple[int, int]]:
        """0-based edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if (self.rows[i] >> j) & 1]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertices")
        rows = [0] * self.n
        for i, j in self.edges():
            a, b = perm[i], perm[j]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, tuple(rows))

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def _check_pair(n: int, i: int, j: int) -> None:
    if not (0 <= i < n and 0 <= j < n):
        raise VertexIndexError(f"edge ({i}, {j}) outside 0..{n - 1}")
    if i == j:
        raise LoopError(f"loop at vertex {i}")


def graph_new(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices."""
    if not 1 <= n <= MAX_VERTICES:
        raise SizeError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    return Graph(n, (0,) * n)


def add_edge(g: Graph, i: int, j: int) -> Graph:
    _check_pair(g.n, i, j)
    rows = list(g.rows)
    rows[i] |= 1 << j
    rows[j] |= 1 << i
    return Graph(g.n, tuple(rows))


def degree_sequence(g: Graph) -> list[int]:
    return [r.bit_count() for r in g.rows]


def bfs_distances(g: Graph, v: int) -> list[int | float]:
    """Hop distances from ``v``; unreachable vertices get ``UNREACHABLE``."""
    if not 0 <= v < g.n:
        raise VertexIndexError(f"vertex {v} outside 0..{g.n - 1}")
    dist: list[int | float] = [UNREACHABLE] * g.n
    dist[v] = 0
    reached = frontier = 1 << v
    d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.rows[low.bit_length() - 1]
            f ^= low
        nxt &= ~reached
        reached |= nxt
        frontier = nxt
        while nxt:
            low = nxt & -nxt
            dist[low.bit_length() - 1] = d
            nxt ^= low
    return dist


def distance_matrix(g: Graph) -> list[list[int | float]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    reached = frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~reached
        reached |= frontier
    return reached == full


def eccentricity(g: Graph, v: int) -> int | float:
    return max(bfs_distances(g, v))


def diameter(g: Graph) -> int | float:
    """Longest shortest path; ``UNREACHABLE`` for disconnected graphs."""
    if not is_connected(g):
        return UNREACHABLE
    return max(eccentricity(g, v) for v in range(g.n))


def is_k_regular(g: Graph, k: int) -> bool:
    return all(d == k for d in degree_sequence(g))


def is_k_quasi_regular(g: Graph, k: int) -> bool:
    """Exactly one vertex of degree ``k + 1``, every other of degree ``k``."""
    counts = Counter(degree_sequence(g))
    return counts.get(k + 1) == 1 and counts.get(k, 0) == g.n - 1


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def required_edge_count(n: int, k: int) -> int:
    """Edges of a k-regular graph on n vertices, or of a k-quasi-regular one
    when both n and k are odd."""
    if k < 0:
        raise DegreeError(f"negative degree {k}")
    if k >= n:
        raise DegreeError(f"degree {k} needs more than {n} vertices")
    return (n * k + (n * k) % 2) // 2


@dataclass(frozen=True)
class CompletionRatio:
    """Share of the ``n(n-1)/2`` comparisons a pattern asks for."""

    numerator: int
    denominator: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def value(self) -> float:
        return self.numerator / self.denominator

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def completion_ratio(n: int, k: int) -> CompletionRatio:
    if k < 1:
        raise DegreeError(f"degree {k} must be at least 1")
    return CompletionRatio(required_edge_count(n, k), n * (n - 1) // 2)


def regularity_holds(g: Graph, k: int) -> bool:
    """The predicate the parity of ``n * k`` calls for."""
    if (g.n * k) % 2:
        return is_k_quasi_regular(g, k)
    return is_k_regular(g, k)


# -- edge-list text ---------------------------------------------------------

def format_edge_list(g: Graph, *, header: bool | None = None) -> str:
    """Catalog-style list, one ``i-j`` per line (1-based).

    The ``n=<N>`` header is written when requested or when it is needed to
    recover isolated vertices.
    """
    lines = [f"{i + 1}-{j + 1}" for i, j in g.edges()]
    if header is None:
        highest = max((j for _, j in g.edges()), default=-1) + 1
        header = highest != g.n or any(r == 0 for r in g.rows)
    if header:
        lines.insert(0, f"n={g.n}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.lower().startswith("n="):
            n = int(line[2:])
            continue
        try:
            a, b = line.split("-")
            edges.append((int(a), int(b)))
        except ValueError:
            raise ValueError(f"line {lineno}: expected 'i-j', got {raw!r}") from None
    if n is None:
        if not edges:
            raise ValueError("empty edge list needs an 'n=<N>' header")
        n = max(max(e) for e in edges)
    return Graph.from_edges(n, edges, one_based=True)
