"""Incomplete pairwise comparison matrices and filling-pattern recommendations.

The known off-diagonal positions of an incomplete comparison matrix form an
undirected graph; a filling pattern is the list of pairs a decision maker is
asked to compare. Recommendations pick the sparsest (quasi-)regular pattern
whose diameter meets the caller's bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import catalog
from .census import CensusQuery, INFEASIBLE, min_diameter_census, moore_bound
from .errors import ConnectivityError, FrontierError, ReciprocityError, SizeError
from .graph import (
    CompletionRatio,
    Graph,
    completion_ratio,
    diameter,
    is_connected,
    regularity_holds,
    required_edge_count,
)
from .graph6 import encode_graph6
from .search import stochastic_low_diameter_search

PATTERN_DEGREES = (3, 4, 5)
MIN_ITEMS, MAX_ITEMS = 3, 20

#: Degrees for which a Moore graph of diameter 2 exists.
MOORE_D2_DEGREES = frozenset({2, 3, 7, 57})

#: Cells outside the catalog with no graph of diameter 2, established by the
#: pruned exhaustive census (``has_graph_with_diameter``); re-derived in tests.
NO_DIAMETER_TWO = frozenset({(16, 4), (17, 4)})


@dataclass(frozen=True)
class FillingPattern:
    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for i, j in self.pairs:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"pair {i}-{j} must satisfy 1 <= i < j <= {self.n}")
            if (i, j) in seen:
                raise ValueError(f"duplicate pair {i}-{j}")
            seen.add((i, j))

    def __len__(self) -> int:
        return len(self.pairs)

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.pairs, one_based=True)

    def to_csv(self) -> str:
        return "i,j\n" + "".join(f"{i},{j}\n" for i, j in self.pairs)

    def to_matrix(self) -> str:
        """Sketch with '*' for asked pairs above the diagonal, 'o' for their
        reciprocals below it, '-' on the diagonal and '.' elsewhere."""
        g = self.graph()
        width = len(str(self.n))
        head = " " * width + " " + " ".join(f"{j + 1:>{width}}" for j in range(self.n))
        lines = [head]
        for i in range(self.n):
            cells = []
            for j in range(self.n):
                if i == j:
                    ch = "-"
                elif g.has_edge(i, j):
                    ch = "*" if i < j else "o"
                else:
                    ch = "."
                cells.append(f"{ch:>{width}}")
            lines.append(f"{i + 1:>{width}} " + " ".join(cells))
        return "\n".join(lines) + "\n"

    def to_graph6(self) -> str:
        return encode_graph6(self.graph())


@dataclass(frozen=True)
class PcmMask:
    """``known[i][j]`` tells whether entry (i, j) of the matrix is filled."""

    n: int
    known: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.known) != self.n or any(len(r) != self.n for r in self.known):
            raise SizeError(f"mask must be {self.n}x{self.n}")
        for i in range(self.n):
            if not self.known[i][i]:
                raise ReciprocityError(f"diagonal entry ({i + 1},{i + 1}) must be known")
            for j in range(i + 1, self.n):
                if self.known[i][j] != self.known[j][i]:
                    raise ReciprocityError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) disagree")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[bool]]) -> PcmMask:
        return cls(len(rows), tuple(tuple(bool(x) for x in r) for r in rows))

    def to_text(self) -> str:
        lines = [f"n={self.n}"]
        for i, row in enumerate(self.known):
            lines.append("".join("1" if i == j else ("1" if b else "x") for j, b in enumerate(row)))
        return "\n".join(lines) + "\n"


def parse_mask(text: str) -> PcmMask:
    """Read ``n=<N>`` (or a bare N) then N rows of '1' (known) and 'x' or '0'
    (missing); spaces inside rows are ignored."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty mask")
    head = lines[0].lower()
    n = int(head[2:] if head.startswith("n=") else head)
    body = [ln.replace(" ", "") for ln in lines[1:]]
    if len(body) != n:
        raise SizeError(f"expected {n} mask rows, got {len(body)}")
    rows = []
    for r, line in enumerate(body, 1):
        if len(line) != n or set(line) - set("10xX"):
            raise ValueError(f"mask row {r}: need {n} characters from '1', '0', 'x'")
        rows.append(tuple(ch == "1" for ch in line))
    return PcmMask(n, tuple(rows))


def graph_from_mask(m: PcmMask) -> Graph:
    return Graph.from_edges(
        m.n, ((i, j) for i in range(m.n) for j in range(i + 1, m.n) if m.known[i][j]))


def mask_from_pattern(p: FillingPattern) -> PcmMask:
    known = [[i == j for j in range(p.n)] for i in range(p.n)]
    for i, j in p.pairs:
        known[i - 1][j - 1] = known[j - 1][i - 1] = True
    return PcmMask.from_rows(known)


def pattern_from_graph(g: Graph) -> FillingPattern:
    if not is_connected(g):
        raise ConnectivityError("a filling pattern must connect every item")
    return FillingPattern(g.n, tuple((i + 1, j + 1) for i, j in g.edges()))


def pattern_from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> FillingPattern:
    return FillingPattern(n, tuple(sorted((min(a, b), max(a, b)) for a, b in pairs)))


# -- recommendation ---------------------------------------------------------

@dataclass(frozen=True)
class CellInfo:
    n: int
    k: int
    d: int
    graph: Graph
    source: str


def _diameter_lower_bound(n: int, k: int) -> int:
    if k == n - 1:
        return 1
    top = k + 1 if (n * k) % 2 else k
    m = moore_bound(top, 2)
    if n > m or (n == m and top not in MOORE_D2_DEGREES) or (n, k) in NO_DIAMETER_TWO:
        return 3
    return 2


@lru_cache(maxsize=None)
def cell_info(n: int, k: int, *, census_tiebreak: bool = False) -> CellInfo | None:
    """Smallest known diameter for (n, k) and a graph attaining it."""
    if not 0 < k < n:
        return None
    if census_tiebreak and (n, k) not in INFEASIBLE:
        res = min_diameter_census(CensusQuery(n, k, collect="optima"), jobs=1)
        if res.optima:
            return CellInfo(n, k, res.d_min, res.optima[0].graph(), "census minimum")
    if catalog.covered(n, k):
        e = catalog.lookup(n, k)
        return CellInfo(n, k, e.d_claimed, e.graph, f"catalog: {e.label}")
    if k == n - 1:
        full = (1 << n) - 1
        return CellInfo(n, k, 1, Graph(n, tuple(full & ~(1 << v) for v in range(n))), "complete graph")
    d = _diameter_lower_bound(n, k)
    while d < n:
        res = stochastic_low_diameter_search(n, k, d, attempts=64, distinct_goal=1, seed=0)
        if res.graphs:
            return CellInfo(n, k, d, min(res.graphs).graph(), "seeded search")
        d += 1
    return None


@dataclass(frozen=True)
class Recommendation:
    n: int
    chosen_k: int
    expected_d: int
    pattern: FillingPattern
    c: CompletionRatio
    source: str
    rationale: str

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.chosen_k,
            "d": self.expected_d,
            "comparisons": len(self.pattern),
            "c": str(self.c),
            "source": self.source,
            "pairs": [f"{i}-{j}" for i, j in self.pattern.pairs],
            "rationale": self.rationale,
        }


def _candidate_degrees(n: int) -> list[int]:
    ks = [k for k in PATTERN_DEGREES if k < n]
    # three items admit no cubic pattern; the triangle is the only connected option
    return ks or [n - 1]


def feasibility_frontier(n: int) -> list[tuple[int, int, int]]:
    """``(k, d, comparisons)`` for every candidate degree."""
    out = []
    for k in _candidate_degrees(n):
        info = cell_info(n, k)
        if info is not None:
            out.append((k, info.d, required_edge_count(n, k)))
    return out


def recommend(
    n: int,
    max_diameter: int | None = None,
    max_comparisons: int | None = None,
    *,
    census_tiebreak: bool = False,
) -> Recommendation:
    """Sparsest pattern meeting the diameter bound within the comparison budget.

    Without a diameter bound the target is the smallest diameter a 3-regular
    pattern reaches, or, when only a budget is given, the smallest diameter
    that fits the budget. Raises ``FrontierError`` when nothing fits.
    """
    if not MIN_ITEMS <= n <= MAX_ITEMS:
        raise SizeError(f"recommendations cover {MIN_ITEMS} <= n <= {MAX_ITEMS} items, got {n}")
    frontier = feasibility_frontier(n)
    fits = [t for t in frontier if max_comparisons is None or t[2] <= max_comparisons]
    if max_diameter is None:
        if max_comparisons is None:
            target = frontier[0][1]
        elif fits:
            target = min(d for _, d, _ in fits)
        else:
            target = 0
    else:
        target = max_diameter
    ok = [t for t in fits if t[1] <= target]
    if not ok:
        want = [f"d<={max_diameter}" if max_diameter is not None else None,
                f"at most {max_comparisons} comparisons" if max_comparisons is not None else None]
        text = " and ".join(w for w in want if w)
        options = ", ".join(f"k={k}: d={d} with {e} comparisons" for k, d, e in frontier)
        raise FrontierError(f"no pattern on {n} items meets {text}; achievable: {options}", frontier)
    k, d, edges = ok[0]
    info = cell_info(n, k, census_tiebreak=census_tiebreak)
    g = info.graph
    if not (is_connected(g) and diameter(g) == d and regularity_holds(g, k)
            and g.edge_count == required_edge_count(n, k)):
        raise AssertionError(f"pattern for ({n},{k}) fails its own contract")
    skipped = [f"k={kk} only reaches d={dd}" for kk, dd, _ in frontier if kk < k]
    over = [f"k={kk} needs {ee} comparisons" for kk, _, ee in frontier
            if max_comparisons is not None and ee > max_comparisons and kk < k]
    why = "; ".join(skipped + over)
    rationale = (f"k={k} is the smallest degree whose best pattern reaches diameter {d} "
                 f"with {edges} of {n * (n - 1) // 2} comparisons"
                 + (f" ({why})" if why else "")
                 + ". Lower diameter keeps every indirect comparison chain short.")
    return Recommendation(n, k, d, pattern_from_graph(g), completion_ratio(n, k), info.source, rationale)
