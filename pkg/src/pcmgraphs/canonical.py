"""Canonical labelling by partition refinement and exhaustive branching.

The ordered partition starts from vertex degrees and is refined to the
coarsest equitable partition; every vertex of the first non-singleton cell is
then individualised in turn. Each discrete leaf gives a relabelling, and the
graph6 text of the smallest relabelled graph is the canonical form.
Automorphisms discovered at leaves only prune siblings that lie in the same
orbit of the stabiliser of the current branch, so no leaf class is lost.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .graph6 import decode_graph6, encode_graph6


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class key; serialises as graph6 text."""

    graph6: str

    @property
    def bytes(self) -> bytes:
        return self.graph6.encode("ascii")

    def graph(self) -> Graph:
        return decode_graph6(self.graph6)

    def __str__(self) -> str:
        return self.graph6


Partition = list[list[int]]


def _refine(rows: tuple[int, ...], cells: Partition) -> Partition:
    """Coarsest equitable refinement; cell order depends only on structure."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        s = 0
        while s < len(cells):
            mask = 0
            for v in cells[s]:
                mask |= 1 << v
            out: Partition = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((rows[v] & mask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    split = True
                    out.extend(groups[c] for c in sorted(groups))
            if split:
                cells = out
                changed = True
            s += 1
    return cells


def _relabelled_code(g: Graph, order: list[int]) -> str:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return encode_graph6(g.relabel(pos))


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in gens:
        for v in range(n):
            a, b = find(v), find(gamma[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def _search(g: Graph) -> tuple[str, list[int]]:
    rows = g.rows
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(rows[v].bit_count(), []).append(v)
    root = _refine(rows, [by_degree[d] for d in sorted(by_degree)])

    best: list = [None, None]  # code, order
    leaves: dict[str, list[int]] = {}
    autos: list[tuple[int, ...]] = []

    def leaf(order: list[int]) -> None:
        code = _relabelled_code(g, order)
        seen = leaves.get(code)
        if seen is not None:
            # order[i] and seen[i] play the same role
            gamma = [0] * g.n
            for a, b in zip(seen, order):
                gamma[a] = b
            autos.append(tuple(gamma))
            return
        leaves[code] = order
        if best[0] is None or code < best[0]:
            best[0], best[1] = code, order

    def visit(cells: Partition, fixed: list[int]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            leaf([c[0] for c in cells])
            return
        tried: list[int] = []
        for v in sorted(cells[target]):
            if tried:
                stab = [a for a in autos if all(a[x] == x for x in fixed)]
                if stab:
                    roots = _orbit_roots(g.n, stab)
                    if any(roots[v] == roots[t] for t in tried):
                        continue
            rest = [w for w in cells[target] if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            visit(_refine(rows, child), fixed + [v])
            tried.append(v)

    visit(root, [])
    return best[0], best[1]


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(_search(g)[0])


def canonical_labeling(g: Graph) -> list[int]:
    """``lab[v]`` is the canonical position of vertex ``v``."""
    order = _search(g)[1]
    lab = [0] * g.n
    for i, v in enumerate(order):
        lab[v] = i
    return lab


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(r.bit_count() for r in g1.rows) != sorted(r.bit_count() for r in g2.rows):
        return False
    return canonical_form(g1) == canonical_form(g2)
