"""Embedded minimal-diameter graphs with self-verification.

Each entry carries three transcriptions of the same graph: a graph6 string,
an upper-triangle bullet matrix and a flat edge list. The matrix wins when
the flat list disagrees with it; such cells are reported as corrections with
both versions kept.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from ._catalog_data import ENTRIES
from .canonical import CanonicalForm, are_isomorphic, canonical_form
from .errors import CatalogLookupError
from .graph import (
    CompletionRatio,
    Graph,
    completion_ratio,
    degree_sequence,
    diameter,
    format_edge_list,
    is_connected,
    regularity_holds,
    required_edge_count,
)
from .graph6 import decode_graph6, encode_graph6


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for tok in text.split():
        a, b = tok.split("-")
        out.append((int(a), int(b)))
    return out


def _matrix_pairs(rows: tuple[str, ...]) -> list[tuple[int, int]]:
    return [(i + 1, i + 2 + j) for i, row in enumerate(rows) for j, ch in enumerate(row) if ch == "1"]


@dataclass(frozen=True)
class CatalogEntry:
    n: int
    k: int
    d_claimed: int
    name: str | None
    graph6: str
    #: 1-based pairs after reconciliation with the bullet matrix
    edges: tuple[tuple[int, int], ...]
    #: the flat edge list as printed, possibly with typos
    raw_edges: tuple[tuple[int, int], ...]
    matrix: tuple[str, ...]
    count: int
    count_exact: bool

    @property
    def c(self) -> CompletionRatio:
        return completion_ratio(self.n, self.k)

    @property
    def uniqueness_note(self) -> str:
        if self.count_exact:
            return "unique" if self.count == 1 else f"exactly {self.count} graphs"
        return f">= {self.count} graph" + ("s" if self.count > 1 else "")

    @property
    def label(self) -> str:
        return self.name or f"{self.n}-vertex {self.k}-{'quasi-' if (self.n * self.k) % 2 else ''}regular graph"

    @property
    def corrected(self) -> bool:
        return set(self.raw_edges) != set(self.edges)

    @cached_property
    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges, one_based=True)

    @cached_property
    def canonical(self) -> CanonicalForm:
        return canonical_form(self.graph)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d_claimed,
            "name": self.name,
            "graph6": self.graph6,
            "edges": [f"{i}-{j}" for i, j in self.edges],
            "c": str(self.c),
            "count": self.uniqueness_note,
        }


def _build() -> tuple[CatalogEntry, ...]:
    out = []
    for n, k, d, name, count, exact, g6, matrix, listed in ENTRIES:
        raw = tuple(_parse_pairs(listed))
        reconciled = tuple(sorted(_matrix_pairs(matrix)))
        out.append(CatalogEntry(n, k, d, name, g6, reconciled, raw, matrix, count, exact))
    return tuple(out)


CATALOG: tuple[CatalogEntry, ...] = _build()

#: Cells whose printed list was suspected of typos; always reported with
#: both the raw and the reconciled edge list.
FLAGGED = frozenset({(11, 4), (19, 5)})
_BY_CELL = {(e.n, e.k): e for e in CATALOG}


def entries() -> tuple[CatalogEntry, ...]:
    return CATALOG


def covered(n: int, k: int) -> bool:
    return (n, k) in _BY_CELL


def lookup(n: int, k: int) -> CatalogEntry:
    try:
        return _BY_CELL[(n, k)]
    except KeyError:
        ranked = sorted(_BY_CELL, key=lambda c: (abs(c[0] - n) + abs(c[1] - k), c))
        best = abs(ranked[0][0] - n) + abs(ranked[0][1] - k)
        near = [c for c in ranked if abs(c[0] - n) + abs(c[1] - k) == best]
        raise CatalogLookupError(n, k, near) from None


# -- verification -----------------------------------------------------------

@dataclass
class EntryReport:
    n: int
    k: int
    name: str | None
    edge_count_ok: bool
    regular_ok: bool
    connected: bool
    diameter: int | float
    diameter_ok: bool
    c_ok: bool
    graph6_isomorphic: bool
    label_identical: bool
    corrections: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    raw_edges: list[str] | None = None
    reconciled_edges: list[str] | None = None

    @property
    def passed(self) -> bool:
        return (self.edge_count_ok and self.regular_ok and self.connected
                and self.diameter_ok and self.c_ok and self.graph6_isomorphic)

    def to_line(self) -> str:
        def flag(b: bool) -> str:
            return "ok" if b else "FAIL"

        head = f"{self.n:>2} {self.k} {'PASS' if self.passed else 'FAIL'}"
        body = (f"edges={flag(self.edge_count_ok)} regular={flag(self.regular_ok)} "
                f"connected={flag(self.connected)} d={self.diameter}({flag(self.diameter_ok)}) "
                f"c={flag(self.c_ok)} g6-iso={flag(self.graph6_isomorphic)} "
                f"label-identical={'yes' if self.label_identical else 'no'}")
        tail = "".join(f"\n     corrected: {c}" for c in self.corrections)
        tail += "".join(f"\n     note: {m}" for m in self.notes)
        name = f" [{self.name}]" if self.name else ""
        return f"{head} {body}{name}{tail}"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "name": self.name,
            "passed": self.passed,
            "edge_count_ok": self.edge_count_ok,
            "regular_ok": self.regular_ok,
            "connected": self.connected,
            "diameter": None if self.diameter == float("inf") else self.diameter,
            "diameter_ok": self.diameter_ok,
            "c_ok": self.c_ok,
            "graph6_isomorphic": self.graph6_isomorphic,
            "label_identical": self.label_identical,
            "corrections": self.corrections,
            "notes": self.notes,
            "raw_edges": self.raw_edges,
            "reconciled_edges": self.reconciled_edges,
        }


@dataclass
class CatalogReport:
    entries: list[EntryReport]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def to_text(self) -> str:
        lines = [e.to_line() for e in self.entries]
        ok = sum(e.passed for e in self.entries)
        ident = sum(e.label_identical for e in self.entries)
        fixed = sum(bool(e.corrections) for e in self.entries)
        lines.append(f"{ok}/{len(self.entries)} entries pass; {ident} label-identical to graph6; "
                     f"{fixed} corrected")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({"passed": self.passed, "entries": [e.to_dict() for e in self.entries]},
                          indent=2, ensure_ascii=False)


def _raw_graph_problem(e: CatalogEntry) -> str | None:
    for i, j in e.raw_edges:
        if not (1 <= i <= e.n and 1 <= j <= e.n):
            return f"listed pair {i}-{j} is outside 1..{e.n}"
    return None


def verify_entry(e: CatalogEntry) -> EntryReport:
    g = e.graph
    d = diameter(g)
    decoded = decode_graph6(e.graph6)
    rep = EntryReport(
        n=e.n,
        k=e.k,
        name=e.name,
        edge_count_ok=g.edge_count == required_edge_count(e.n, e.k),
        regular_ok=regularity_holds(g, e.k),
        connected=is_connected(g),
        diameter=d,
        diameter_ok=d == e.d_claimed,
        c_ok=e.c.fraction == completion_ratio(e.n, e.k).fraction
        and e.c.numerator == g.edge_count,
        graph6_isomorphic=decoded.n == e.n and are_isomorphic(decoded, g),
        label_identical=decoded == g,
    )
    if e.corrected:
        raw_set, fixed_set = set(e.raw_edges), set(e.edges)
        dropped = sorted(raw_set - fixed_set)
        added = sorted(fixed_set - raw_set)
        desc = ", ".join(f"{i}-{j}" for i, j in dropped) + " -> " + ", ".join(f"{i}-{j}" for i, j in added)
        problem = _raw_graph_problem(e)
        rep.corrections.append(f"edge list {desc} (matrix wins" + (f"; {problem})" if problem else ")"))
    elif (e.n, e.k) in FLAGGED:
        rep.notes.append("flagged cell: printed edge list matches the matrix, nothing to correct")
    if e.corrected or (e.n, e.k) in FLAGGED:
        rep.raw_edges = [f"{i}-{j}" for i, j in e.raw_edges]
        rep.reconciled_edges = [f"{i}-{j}" for i, j in e.edges]
    late = [f"{b[0]}-{b[1]}" for a, b in zip(e.raw_edges, e.raw_edges[1:]) if b < a]
    if late:
        rep.notes.append("printed edge list out of order at " + ", ".join(late))
    degs = degree_sequence(g)
    if (e.n * e.k) % 2 and rep.regular_ok:
        v = degs.index(e.k + 1)
        where = "list and matrix agree" if not e.corrected else "after reconciliation"
        rep.notes.append(f"vertex {v + 1} has degree {e.k + 1} as the single exceptional vertex ({where})")
    if not rep.label_identical and rep.graph6_isomorphic:
        rep.notes.append("graph6 string uses a different vertex labelling")
    return rep


def verify_catalog() -> CatalogReport:
    return CatalogReport([verify_entry(e) for e in CATALOG])


def export_catalog(directory: str | Path) -> list[Path]:
    """Write ``<n>_<k>.g6`` and ``<n>_<k>.edges`` per entry."""
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    written = []
    for e in CATALOG:
        stem = f"{e.n}_{e.k}"
        g6 = root / f"{stem}.g6"
        g6.write_text(encode_graph6(decode_graph6(e.graph6)) + "\n")
        edges = root / f"{stem}.edges"
        edges.write_text(format_edge_list(e.graph))
        written += [g6, edges]
    return written
