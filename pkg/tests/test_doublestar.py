import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planturan.doublestar import (
    DoubleStarPattern,
    PatternError,
    Witness,
    backbone_feasible,
    contains_double_star,
    contains_oracle,
    is_free,
)
from planturan.graph import Graph, GraphError
from planturan.search import all_graph_classes, enumerate_maximal_planar

from conftest import graphs, k2n, k5_minus_edge, path, random_graph

S11, S22, S33, S34 = (DoubleStarPattern(*p) for p in [(1, 1), (2, 2), (3, 3), (3, 4)])


def double_star(m: int, k: int) -> Graph:
    edges = [(0, 1)] + [(0, 2 + i) for i in range(m)] + [(1, 2 + m + i) for i in range(k)]
    return Graph.from_edges(m + k + 2, edges)


def patterns_up_to(order: int) -> list[DoubleStarPattern]:
    return [DoubleStarPattern(m, k) for m in range(1, order) for k in range(m, order) if m + k + 2 <= order]


def test_pattern_canonical_and_parse():
    p = DoubleStarPattern(4, 2)
    assert (p.m, p.k) == (2, 4) and p.order == 8
    assert DoubleStarPattern.parse("4,2") == p
    for bad in ("2", "a,b", "0,3"):
        with pytest.raises(PatternError):
            DoubleStarPattern.parse(bad)


def test_backbone_feasible_examples(icosa):
    assert backbone_feasible(double_star(2, 2), 0, 1, S22)
    k23 = k2n(3)
    for x, y in k23.edges():
        assert not backbone_feasible(k23, x, y, S22)
    for x, y in icosa.edges():
        assert not backbone_feasible(icosa, x, y, S34)
    with pytest.raises(GraphError):
        backbone_feasible(k23, 0, 1, S22)


def test_contains_examples():
    star = Graph.from_edges(5, [(0, v) for v in range(1, 5)])
    assert contains_double_star(star, S22) is None
    assert contains_double_star(k2n(4), S22) is None


def test_six_vertex_triangulation_deletions_contain_s22():
    classes = enumerate_maximal_planar(6)
    assert len(classes) == 2
    for g in classes:
        for x, y in g.edges():
            h = g.remove_edge(x, y)
            w = contains_double_star(h, S22)
            assert w is not None
            w.validate(h, S22)


def test_oracle_examples():
    assert not contains_oracle(k5_minus_edge(), S22)
    assert not contains_oracle(Graph.complete(3), S11)
    assert contains_oracle(path(6), S11)


def test_is_free_examples(icosa):
    assert is_free(k2n(4), S22)
    assert is_free(icosa, S34)
    assert not contains_oracle(icosa, S34)


def test_high_degree_next_to_degree_four_contains_s33():
    # a degree-7 vertex adjacent to a degree-4 vertex: hub 0 with leaves 1..7,
    # vertex 1 gets three private neighbours
    edges = [(0, v) for v in range(1, 8)] + [(1, v) for v in (8, 9, 10)]
    g = Graph.from_edges(11, edges)
    assert g.degree(0) == 7 and g.degree(1) == 4
    assert not is_free(g, S33)


def test_witness_prefers_private_then_lowest():
    # x=0 has private 2, y=1 has private 5; shared pool 3, 4
    g = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (1, 5)])
    w = contains_double_star(g, S22)
    assert w == Witness((0, 1), (2, 3), (4, 5))


def test_witness_orientation_reported_with_m_side_first():
    # x=0 can only host 2 leaves, y=1 hosts 4: S_{2,4} uses x as the m-side
    g = double_star(4, 2).relabel([1, 0, 2, 3, 4, 5, 6, 7])
    p = DoubleStarPattern(2, 4)
    w = contains_double_star(g, p)
    w.validate(g, p)
    assert len(w.leaves_x) == 2 and len(w.leaves_y) == 4


def test_witness_validate_rejects_bad():
    g = double_star(2, 2)
    with pytest.raises(ValueError):
        Witness((0, 1), (2, 4), (3, 5)).validate(g, S22)
    with pytest.raises(ValueError):
        Witness((0, 1), (2, 3), (2, 4)).validate(g, S22)


def test_equivalence_all_classes_up_to_six():
    for n in range(1, 7):
        for g in all_graph_classes(n):
            for p in patterns_up_to(7):
                w = contains_double_star(g, p)
                assert (w is not None) == contains_oracle(g, p), (g, p)
                if w is not None:
                    w.validate(g, p)


@pytest.mark.parametrize("n", [7, 8, 9])
def test_equivalence_random(n):
    rng = random.Random(100 + n)
    pats = patterns_up_to(n)
    for _ in range(3400):
        g = random_graph(n, rng.uniform(0.1, 0.7), rng)
        p = rng.choice(pats)
        w = contains_double_star(g, p)
        assert (w is not None) == contains_oracle(g, p), (g, p)
        if w is not None:
            w.validate(g, p)


pattern_st = st.tuples(st.integers(1, 4), st.integers(1, 4)).map(lambda t: DoubleStarPattern(*t))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10), pattern_st)
def test_downward_closed(g, p):
    if is_free(g, p):
        for x, y in g.edges():
            assert is_free(g.remove_edge(x, y), p)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10), pattern_st)
def test_monotone_in_pattern(g, p):
    if not is_free(g, p):
        for m in range(1, p.m + 1):
            for k in range(1, p.k + 1):
                assert not is_free(g, DoubleStarPattern(m, k))
