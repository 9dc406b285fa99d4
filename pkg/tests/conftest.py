from __future__ import annotations

from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from pcfactor.formats import parse_ecg, parse_hypergraph
from pcfactor.graph import ColouredGraph, Graph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def load_fixture(name: str):
    text = (FIXTURES / name).read_text()
    return parse_hypergraph(text) if name.endswith(".hg") else parse_ecg(text)


@pytest.fixture
def fig1():
    return load_fixture("fig1.ecg")


@pytest.fixture
def star():
    return load_fixture("star.ecg")


@pytest.fixture
def k43():
    return load_fixture("k43.hg")


@pytest.fixture
def positive9():
    return load_fixture("positive9.hg")


@st.composite
def plain_graphs(draw, max_n: int = 7):
    n = draw(st.integers(0, max_n))
    names = tuple(f"v{i}" for i in range(n))
    pairs = list(combinations(names, 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(names, tuple(p for p, keep in zip(pairs, chosen) if keep))


@st.composite
def coloured_instances(draw, max_n: int = 5, max_k: int = 3, fmax: int = 2, feasible: bool = True):
    """(ColouredGraph, f); when ``feasible`` f never exceeds the colour degree."""
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    names = tuple(f"v{i}" for i in range(n))
    edges = []
    for u, v in combinations(names, 2):
        c = draw(st.integers(0, k))
        if c:
            edges.append((u, v, c))
    g = ColouredGraph(names, tuple(edges), k)
    cs = g.colour_sets
    f = {v: draw(st.integers(0, min(fmax, len(cs[v])) if feasible else fmax)) for v in names}
    return g, f


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
