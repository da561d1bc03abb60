import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from planturan.graph import Graph, disjoint_union
from planturan.planarity import OracleRangeError, is_planar, is_planar_oracle
from planturan.sampling import random_triangulation
from planturan.search import all_graph_classes

from conftest import graphs, k2n, k5_minus_edge, random_graph

K33 = Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])


def test_main_examples():
    assert is_planar(Graph.complete(4))
    assert not is_planar(Graph.complete(5))
    assert is_planar(k2n(4))


def test_oracle_examples(octa):
    assert not is_planar_oracle(K33)
    assert is_planar_oracle(octa) and octa.edge_count == 12
    assert is_planar_oracle(k5_minus_edge())
    with pytest.raises(OracleRangeError):
        is_planar_oracle(Graph.empty(10))


def test_subdivided_kuratowski_graphs_nonplanar():
    # K3,3 with one edge subdivided, K5 with one edge subdivided
    k33s = Graph.from_edges(7, [e for e in K33.edges() if e != (0, 3)] + [(0, 6), (6, 3)])
    k5s = Graph.from_edges(6, [e for e in Graph.complete(5).edges() if e != (0, 1)] + [(0, 5), (5, 1)])
    for g in (k33s, k5s):
        assert not is_planar(g)
        assert not is_planar_oracle(g)


def test_disconnected_inputs():
    g = disjoint_union([Graph.complete(4), Graph.complete(4)])
    assert is_planar(g) and is_planar_oracle(g)
    h = disjoint_union([Graph.complete(4), Graph.complete(5)])
    assert not is_planar(h) and not is_planar_oracle(h)


def test_exhaustive_agreement_up_to_seven():
    for n in range(1, 8):
        for g in all_graph_classes(n):
            assert is_planar(g) == is_planar_oracle(g), g


@pytest.mark.parametrize("n", [8, 9])
def test_random_agreement(n):
    rng = random.Random(n)
    planar = 0
    for _ in range(5000):
        # edge density spread so both verdicts are common
        g = random_graph(n, rng.uniform(0.15, 0.6), rng)
        verdict = is_planar(g)
        planar += verdict
        assert verdict == is_planar_oracle(g), g
    assert 500 < planar < 4500


def _nx_planar(g: Graph) -> bool:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return nx.check_planarity(G)[0]


def test_large_graphs_match_networkx():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(10, 60)
        g = random_triangulation(n, rng)
        assert is_planar(g)
        edges = list(g.edges())
        thinned = Graph.from_edges(n, rng.sample(edges, rng.randint(n, len(edges))))
        non = [e for e in itertools.combinations(range(n), 2) if not thinned.has_edge(*e)]
        extra = thinned
        for e in rng.sample(non, 3):
            extra = extra.add_edge(*e)
        for h in (thinned, extra):
            assert is_planar(h) == _nx_planar(h)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=12))
def test_edge_deletion_preserves_planarity(g):
    if is_planar(g):
        for x, y in g.edges():
            assert is_planar(g.remove_edge(x, y))
