from __future__ import annotations

import itertools
import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from quiverlab.quiver import Quiver, build_quiver, quiver_from_matrix

FIXTURES = Path(__file__).parent / "fixtures"


def two_vertex(a: int, b: int, c: int) -> Quiver:
    """``a`` loops at 1, ``b`` arrows 1 -> 2, ``c`` loops at 2."""
    return quiver_from_matrix([[a, b], [0, c]])


def path(n: int) -> Quiver:
    return build_quiver([str(i) for i in range(1, n + 1)], [(str(i), str(i + 1)) for i in range(1, n)])


def cycle(n: int) -> Quiver:
    arrows = [(str(i), str(i % n + 1)) for i in range(1, n + 1)]
    return build_quiver([str(i) for i in range(1, n + 1)], arrows)


JORDAN = build_quiver(["1"], [("1", "1")])


@st.composite
def quivers(draw, max_vertices: int = 3, max_arrows: int = 2, loops: bool = True):
    n = draw(st.integers(1, max_vertices))
    rows = []
    for i in range(n):
        rows.append([draw(st.integers(0, max_arrows)) if (i != j or loops) else 0 for j in range(n)])
    return quiver_from_matrix(rows)


@st.composite
def quiver_and_dim(draw, max_vertices: int = 3, max_arrows: int = 2, max_entry: int = 3,
                   nonzero: bool = True, loops: bool = True):
    q = draw(quivers(max_vertices, max_arrows, loops))
    v = tuple(draw(st.integers(0, max_entry)) for _ in range(q.n))
    if nonzero and not any(v):
        v = (1,) + v[1:]
    return q, v


def random_quiver(rng: random.Random, max_vertices: int, max_arrows: int, loops: bool = True) -> Quiver:
    n = rng.randint(1, max_vertices)
    rows = [[rng.randint(0, max_arrows) if (i != j or loops) else 0 for j in range(n)] for i in range(n)]
    return quiver_from_matrix(rows)


def box(v):
    return itertools.product(*(range(x + 1) for x in v))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
