"""Reference implementations that share no code with the package."""
from __future__ import annotations

import itertools
import math


def floyd_warshall(n: int, edges) -> list[list[float]]:
    d = [[0.0 if i == j else math.inf for j in range(n)] for i in range(n)]
    for i, j in edges:
        d[i][j] = d[j][i] = 1.0
    for m in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][m] + d[m][j] < d[i][j]:
                    d[i][j] = d[i][m] + d[m][j]
    return d


def fw_diameter(n: int, edges) -> float:
    return max(max(row) for row in floyd_warshall(n, edges))


def _edge_set(edges) -> frozenset:
    return frozenset(frozenset(e) for e in edges)


def brute_isomorphic(n1: int, e1, n2: int, e2) -> bool:
    """Try every bijection that maps each vertex to one of equal degree."""
    if n1 != n2 or len(e1) != len(e2):
        return False
    s2 = _edge_set(e2)
    deg1 = [0] * n1
    deg2 = [0] * n2
    for i, j in e1:
        deg1[i] += 1
        deg1[j] += 1
    for i, j in e2:
        deg2[i] += 1
        deg2[j] += 1
    if sorted(deg1) != sorted(deg2):
        return False
    for perm in itertools.permutations(range(n1)):
        if any(deg1[v] != deg2[perm[v]] for v in range(n1)):
            continue
        if all(frozenset((perm[i], perm[j])) in s2 for i, j in e1):
            return True
    return False


def automorphism_count(n: int, edges) -> int:
    s = _edge_set(edges)
    return sum(
        all(frozenset((p[i], p[j])) in s for i, j in edges)
        for p in itertools.permutations(range(n)))


def labeled_regular_graphs(n: int, k: int):
    """Every labelled k-regular graph on n vertices, as edge lists."""
    pairs = list(itertools.combinations(range(n), 2))
    deg = [0] * n
    chosen: list[tuple[int, int]] = []

    def rec(idx: int):
        if idx == len(pairs):
            if all(d == k for d in deg):
                yield list(chosen)
            return
        i, j = pairs[idx]
        # once every pair touching vertex i is decided its degree is final
        last_i = idx + 1 == len(pairs) or pairs[idx + 1][0] != i
        if deg[i] < k and deg[j] < k:
            deg[i] += 1
            deg[j] += 1
            chosen.append((i, j))
            if not last_i or deg[i] == k:
                yield from rec(idx + 1)
            chosen.pop()
            deg[i] -= 1
            deg[j] -= 1
        if not last_i or deg[i] == k:
            yield from rec(idx + 1)

    yield from rec(0)


def connected(n: int, edges) -> bool:
    adj = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n
