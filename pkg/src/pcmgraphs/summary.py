"""Minimal diameter, optimum count and completion ratio over a grid of cells."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .census import INFEASIBLE, CensusQuery, min_diameter_census
from .graph import completion_ratio
from .search import stochastic_low_diameter_search


@dataclass
class SummaryRow:
    n: int
    k: int
    d_min: int | None
    count: int
    #: False when ``count`` is only a lower bound (search, or budget ran out)
    exact: bool
    method: str

    @property
    def c(self):
        return completion_ratio(self.n, self.k)

    def count_text(self) -> str:
        return str(self.count) if self.exact else f">={self.count}"

    def to_line(self) -> str:
        d = "-" if self.d_min is None else str(self.d_min)
        c = self.c
        return f"{self.n:>2} {self.k} d={d} count={self.count_text()} c={c}={c.value:.3f} ({self.method})"

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "d_min": self.d_min, "count": self.count,
                "exact": self.exact, "c": str(self.c), "method": self.method}


def summary_row(n: int, k: int, *, budget: int | None = None, jobs: int = 1,
                attempts: int = 2000, seed: int = 0) -> SummaryRow:
    if (n, k) in INFEASIBLE:
        for d in range(2, n):
            res = stochastic_low_diameter_search(n, k, d, attempts, seed=seed)
            if res.graphs:
                return SummaryRow(n, k, d, res.distinct_count, False, f"search, {attempts} restarts")
        return SummaryRow(n, k, None, 0, False, "search found nothing")
    res = min_diameter_census(CensusQuery(n, k, budget=budget, exact=False), jobs=jobs)
    method = "census" if res.exhausted else "census, budget exhausted"
    return SummaryRow(n, k, res.d_min, res.optima_count, res.exhausted, method)


def summary_table(n_range: Iterable[int], k_set: Iterable[int], **kw) -> list[SummaryRow]:
    """One row per feasible (n, k); cells flagged infeasible go to search."""
    ks = list(k_set)
    return [summary_row(n, k, **kw) for n in n_range for k in ks if k < n]
