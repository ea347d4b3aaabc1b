"""Isomorph-free generation and minimal-diameter census of k-(quasi-)regular graphs.

Generation is orderly: rows of the adjacency matrix are filled in turn, the
columns not yet reached are kept in non-increasing order, residual degrees
must pass the Erdos-Gallai test, a finished component that is not the whole
graph is abandoned, and every partial matrix whose complete rows can be
relabelled into a larger code is cut. Only lexicographically maximal
matrices survive, one per isomorphism class.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Literal

import numpy as np

from . import _kernels
from .canonical import CanonicalForm, canonical_form
from .errors import DegreeError, ParityError, SizeError
from .graph import Graph, completion_ratio

log = logging.getLogger(__name__)

#: Cells the exhaustive census is not attempted for by default.
INFEASIBLE = frozenset((n, 5) for n in range(16, 21))

DEFAULT_NODE_BUDGET = 10**8
MAX_CENSUS_N = 20

Mode = Literal["regular", "quasi-regular"]
Collect = Literal["count", "optima"]


def default_jobs() -> int:
    return int(os.environ.get("PCMGRAPHS_JOBS", "1"))


@dataclass(frozen=True)
class CensusQuery:
    n: int
    k: int
    collect: Collect = "count"
    budget: int | None = None
    #: only graphs of diameter at most this are generated (2 also prunes)
    max_diameter: int | None = None
    #: exact diameter histogram; False lets BFS stop at the incumbent
    exact: bool = True

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_CENSUS_N:
            raise SizeError(f"census supports 1 <= n <= {MAX_CENSUS_N}, got {self.n}")
        if not 0 <= self.k < self.n:
            raise DegreeError(f"need 0 <= k < n, got n={self.n}, k={self.k}")

    @property
    def mode(self) -> Mode:
        return "quasi-regular" if (self.n * self.k) % 2 else "regular"


@dataclass
class CensusResult:
    n: int
    k: int
    total_connected: int
    d_min: int | None
    optima_count: int
    exhausted: bool
    optima: list[CanonicalForm] | None = None
    #: diameter -> number of graphs; inexact above d_min unless the query was exact
    histogram: dict[int, int] = field(default_factory=dict)
    nodes: int = 0
    max_diameter: int | None = None

    @property
    def mode(self) -> Mode:
        return "quasi-regular" if (self.n * self.k) % 2 else "regular"

    def to_line(self) -> str:
        c = completion_ratio(self.n, self.k)
        d = "-" if self.d_min is None else str(self.d_min)
        flag = "true" if self.exhausted else "false"
        return f"{self.n} {self.k} {d} {self.optima_count} {flag} {c}"

    def to_dict(self) -> dict:
        c = completion_ratio(self.n, self.k)
        return {
            "n": self.n,
            "k": self.k,
            "mode": self.mode,
            "d_min": self.d_min,
            "count": self.optima_count,
            "exhausted": self.exhausted,
            "c": str(c),
            "total_connected": self.total_connected,
            "histogram": {str(d): v for d, v in sorted(self.histogram.items())},
            "optima": None if self.optima is None else [str(f) for f in self.optima],
        }


def degree_targets(n: int, k: int) -> list[int]:
    """{k}^n, or one k+1 followed by k^(n-1) when n*k is odd."""
    if not 0 <= k < n:
        raise DegreeError(f"need 0 <= k < n, got n={n}, k={k}")
    if (n * k) % 2:
        if k + 1 > n - 1:
            raise ParityError(f"no {k}-quasi-regular graph on {n} vertices")
        return [k + 1] + [k] * (n - 1)
    return [k] * n


def _split_row(n: int) -> int:
    return min(4, max(1, n - 3))


def _run_part(n: int, k: int, store_mode: int, max_diam: int, exact: bool,
              res: int, mod: int, budget: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    tdeg = np.asarray(degree_targets(n, k), dtype=np.int64)
    return _kernels.generate(tdeg, True, max_diam, store_mode, exact,
                             _split_row(n), res, mod, budget)


def _graphs_from_rows(rows: np.ndarray) -> Iterator[Graph]:
    for r in rows:
        yield Graph(len(r), tuple(int(x) for x in r))


def enumerate_degree_constrained(q: CensusQuery, *, parts: int = 1) -> Iterator[Graph]:
    """One graph per isomorphism class of connected graphs with the target
    degree sequence; streamed in ``parts`` independent slices."""
    degree_targets(q.n, q.k)
    max_diam = q.max_diameter or 0
    budget = q.budget or 0
    for res in range(parts):
        rows, _, stats = _run_part(q.n, q.k, q.n, max_diam, True, res, parts, budget)
        yield from _graphs_from_rows(rows)
        if stats[2]:
            log.warning("node budget exhausted in part %d/%d", res, parts)
            return


def min_diameter_census(q: CensusQuery, *, jobs: int | None = None) -> CensusResult:
    """Minimal diameter over the class and how many graphs attain it.

    With ``jobs > 1`` the search tree is split across worker processes at a
    fixed row; counts do not depend on the number of workers.
    """
    degree_targets(q.n, q.k)
    jobs = default_jobs() if jobs is None else jobs
    store = -2 if q.collect == "optima" else -1
    max_diam = q.max_diameter or 0
    budget = q.budget or 0
    mod = max(1, jobs)
    args = [(q.n, q.k, store, max_diam, q.exact, res, mod, budget) for res in range(mod)]
    if mod == 1:
        parts = [_run_part(*args[0])]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_part, *zip(*args)))

    hist = np.zeros(q.n + 1, dtype=np.int64)
    nodes = total = 0
    aborted = False
    best = q.n + 1
    for _, h, stats in parts:
        hist += h
        nodes += int(stats[0])
        total += int(stats[1])
        aborted |= bool(stats[2])
        best = min(best, int(stats[3]))
    d_min = None if total == 0 else next(d for d in range(q.n) if hist[d])
    optima = None
    if q.collect == "optima" and d_min is not None:
        forms = set()
        for rows, _, stats in parts:
            if int(stats[3]) == d_min:
                forms.update(canonical_form(g) for g in _graphs_from_rows(rows))
        optima = sorted(forms)
    return CensusResult(
        n=q.n,
        k=q.k,
        total_connected=total,
        d_min=d_min,
        optima_count=0 if d_min is None else int(hist[d_min]),
        exhausted=not aborted,
        optima=optima,
        histogram={d: int(hist[d]) for d in range(q.n) if hist[d]},
        nodes=nodes,
        max_diameter=q.max_diameter,
    )


def has_graph_with_diameter(n: int, k: int, d: int, *, budget: int | None = None) -> bool | None:
    """Whether some connected k-(quasi-)regular graph on n vertices has
    diameter at most d; None when the node budget ran out first."""
    res = min_diameter_census(CensusQuery(n, k, max_diameter=d, budget=budget), jobs=1)
    if res.total_connected:
        return True
    return False if res.exhausted else None


def moore_bound(k: int, d: int) -> int:
    """Most vertices a graph of maximum degree k and diameter d can have."""
    if k <= 2:
        return 2 * d + 1 if k == 2 else 2
    return 1 + k * sum((k - 1) ** i for i in range(d))
