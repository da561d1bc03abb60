import itertools
import random

import pytest
from hypothesis import strategies as st

from planturan.constructions import icosahedron_graph, octahedron
from planturan.graph import Graph


def k2n(n: int) -> Graph:
    """K_{2,n}: hubs 0, 1."""
    return Graph.from_edges(n + 2, [(h, v) for v in range(2, n + 2) for h in (0, 1)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def k5_minus_edge() -> Graph:
    return Graph.from_edges(5, [e for e in itertools.combinations(range(5), 2) if e != (0, 1)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def icosa() -> Graph:
    return icosahedron_graph()


@pytest.fixture
def octa() -> Graph:
    return octahedron()
