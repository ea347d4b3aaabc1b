"""Seeded random search for low-diameter k-(quasi-)regular graphs.

Used where exhaustive generation is out of reach, e.g. 5-regular graphs on
16 to 20 vertices. Every restart draws a random graph with the target degree
sequence from the pairing model and walks by double-edge swaps; see
``_kernels.swap_search`` for the acceptance rule.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from . import _kernels
from .canonical import CanonicalForm, canonical_form
from .census import degree_targets
from .graph import Graph, diameter, is_connected, regularity_holds

Bias = Literal["plain", "sparse", "mixed"]

BATCH = 8


@dataclass
class SearchResult:
    n: int
    k: int
    target_d: int
    seed: int
    graphs: list[CanonicalForm] = field(default_factory=list)
    attempts: int = 0
    swaps: int = 0

    @property
    def distinct_count(self) -> int:
        return len(self.graphs)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "target_d": self.target_d,
            "seed": self.seed,
            "distinct": self.distinct_count,
            "attempts": self.attempts,
            "swaps": self.swaps,
            "graphs": [str(g) for g in self.graphs],
        }


def _batch_seed(seed: int, batch: int) -> int:
    return int(np.random.SeedSequence(seed, spawn_key=(batch,)).generate_state(1)[0])


def stochastic_low_diameter_search(
    n: int,
    k: int,
    target_d: int,
    attempts: int = 1000,
    distinct_goal: int | None = None,
    *,
    seed: int = 0,
    bias: Bias = "mixed",
    max_swaps: int = 100_000,
    stall: int = 8000,
) -> SearchResult:
    """Collect distinct graphs of diameter at most ``target_d``.

    ``attempts`` counts restarts. ``bias="mixed"`` alternates batches of
    plain walks, which stop at the first hit, with sparse walks that keep
    lowering triangle and co-degree counts. The search stops early once
    ``distinct_goal`` classes are known. Identical arguments give identical
    results.
    """
    tdeg = np.asarray(degree_targets(n, k), dtype=np.int64)
    result = SearchResult(n, k, target_d, seed)
    seen: set[CanonicalForm] = set()
    batch = 0
    while result.attempts < attempts:
        size = min(BATCH, attempts - result.attempts)
        sparse = bias == "sparse" or (bias == "mixed" and batch % 2 == 1)
        rows, swaps = _kernels.swap_search(tdeg, target_d, size, max_swaps,
                                           _batch_seed(seed, batch), sparse, stall)
        result.attempts += size
        result.swaps += int(swaps)
        batch += 1
        for r in rows:
            g = Graph(n, tuple(int(x) for x in r))
            # re-checked with the reference predicates before reporting
            if not (regularity_holds(g, k) and is_connected(g) and diameter(g) <= target_d):
                raise AssertionError("swap search produced an invalid graph")
            form = canonical_form(g)
            if form not in seen:
                seen.add(form)
                result.graphs.append(form)
        if distinct_goal is not None and len(seen) >= distinct_goal:
            break
    return result
