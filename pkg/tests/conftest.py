from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pcmgraphs.graph import Graph  # noqa: E402
from pcmgraphs.graph6 import decode_graph6  # noqa: E402


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def quasi5() -> Graph:
    return Graph.from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 5), (4, 5)],
                            one_based=True)


@pytest.fixture
def heawood() -> Graph:
    return decode_graph6("MhEGHC@AI?_PC@_G_")


_CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion():
    """``criterion(i, ok, detail)`` records the verdict, then asserts it."""

    def record(i: int, ok: bool, detail: str) -> None:
        _CRITERIA[i] = f"criterion {i}: {'PASS' if ok else 'FAIL'}  {detail}"
        print(_CRITERIA[i])
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for i in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[i])
