from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cycle, petersen
from oracles import fw_diameter
from pcmgraphs.errors import DegreeError, LoopError, SizeError, VertexIndexError
from pcmgraphs.graph import (
    UNREACHABLE,
    Graph,
    add_edge,
    bfs_distances,
    completion_ratio,
    degree_sequence,
    diameter,
    format_edge_list,
    graph_new,
    is_complete,
    is_connected,
    is_k_quasi_regular,
    is_k_regular,
    parse_edge_list,
    required_edge_count,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, mask) if b])


def test_graph_new():
    g = graph_new(5)
    assert g.n == 5 and g.edge_count == 0
    assert diameter(graph_new(1)) == 0
    assert is_connected(graph_new(1))
    with pytest.raises(SizeError):
        graph_new(63)
    with pytest.raises(SizeError):
        graph_new(0)


def test_add_edge():
    k2 = add_edge(graph_new(2), 0, 1)
    assert k2.edges() == [(0, 1)]
    assert add_edge(k2, 1, 0) == k2
    assert diameter(k2) == 1
    with pytest.raises(LoopError):
        add_edge(k2, 1, 1)
    with pytest.raises(VertexIndexError):
        add_edge(k2, 0, 2)


def test_asymmetric_rows_rejected():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0))


def test_quasi5_degrees(quasi5):
    assert quasi5.edge_count == 8
    assert degree_sequence(quasi5) == [4, 3, 3, 3, 3]
    assert not is_k_regular(quasi5, 3)
    assert is_k_quasi_regular(quasi5, 3)
    assert diameter(quasi5) == 2


def test_petersen():
    p = petersen()
    assert degree_sequence(p) == [3] * 10
    assert is_k_regular(p, 3) and not is_k_quasi_regular(p, 3)
    for v in range(10):
        assert max(bfs_distances(p, v)) == 2


def test_heawood(heawood):
    assert diameter(heawood) == 3
    assert is_k_regular(heawood, 3)


def test_connectivity():
    assert is_connected(add_edge(graph_new(2), 0, 1))
    two_k2 = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert not is_connected(two_k2)
    assert diameter(two_k2) == UNREACHABLE
    assert bfs_distances(two_k2, 0) == [0, 1, math.inf, math.inf]


def test_distances():
    c6 = cycle(6)
    for v in range(6):
        assert sorted(bfs_distances(c6, v)) == [0, 1, 1, 2, 2, 3]
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert bfs_distances(star, 0) == [0, 1, 1, 1, 1]


@pytest.mark.parametrize("n", range(3, 21))
def test_cycle_diameter(n):
    assert diameter(cycle(n)) == n // 2
    assert is_k_regular(cycle(n), 2)


def test_required_edge_count():
    assert required_edge_count(10, 3) == 15
    assert required_edge_count(5, 3) == 8
    assert required_edge_count(20, 5) == 50
    with pytest.raises(DegreeError):
        required_edge_count(4, 4)


def test_completion_ratio():
    c = completion_ratio(5, 3)
    assert (c.numerator, c.denominator, c.value) == (8, 10, 0.8)
    assert completion_ratio(10, 3).fraction == Fraction(1, 3)
    assert str(completion_ratio(12, 4)) == "24/66"
    assert round(completion_ratio(12, 4).value, 3) == 0.364


@pytest.mark.parametrize("k", [3, 4, 5])
def test_completion_ratio_decreasing(k):
    vals = [completion_ratio(n, k).fraction for n in range(k + 1, 21)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_edge_list_round_trip(quasi5):
    text = format_edge_list(quasi5)
    assert text.splitlines() == ["1-2", "1-3", "1-4", "1-5", "2-3", "2-4", "3-5", "4-5"]
    assert parse_edge_list(text) == quasi5
    lonely = Graph.from_edges(4, [(0, 1)])
    assert format_edge_list(lonely).startswith("n=4\n")
    assert parse_edge_list(format_edge_list(lonely)) == lonely
    with pytest.raises(ValueError):
        parse_edge_list("1:2")


def test_diameter_matches_floyd_warshall():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 10)
        p = rng.random()
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        assert diameter(Graph.from_edges(n, edges)) == fw_diameter(n, edges)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_diameter_one_iff_complete(g):
    d = diameter(g)
    if g.n >= 2 and is_connected(g):
        assert (d == 1) == is_complete(g)
        if not is_complete(g):
            assert d >= 2


@settings(max_examples=200, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_invariants(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert sorted(degree_sequence(h)) == sorted(degree_sequence(g))
    assert is_connected(h) == is_connected(g)
    assert diameter(h) == diameter(g)
    assert h.edge_count == g.edge_count == sum(degree_sequence(g)) // 2


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_quasi_regular_edge_count(g):
    for k in range(g.n):
        if is_k_quasi_regular(g, k):
            assert (g.n * k) % 2 == 1
            assert g.edge_count == (g.n * k + 1) // 2
