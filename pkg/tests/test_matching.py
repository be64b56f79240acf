from __future__ import annotations

import random

import networkx as nx
import pytest

from oracles import adj_sets, max_matching_size
from squared_path_lab.errors import Overlap
from squared_path_lab.graph import Graph, from_edge_list, mask_of
from squared_path_lab.matching import (
    Matching,
    max_matching_bipartite,
    max_matching_mindeg,
    maximum_matching,
    min_cross_degree,
)
from squared_path_lab.randgraphs import random_bipartite_instance, random_graph

C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])


def test_c5():
    m = max_matching_mindeg(C5)
    assert len(m) == 2 and m.covered_count() == 4 and m.is_valid(C5)


def test_k4_perfect():
    m = max_matching_mindeg(Graph.complete(4))
    assert m.covered_count() == 4


def test_empty_graph():
    assert len(max_matching_mindeg(Graph.empty(6))) == 0


def test_restriction():
    g = Graph.complete(6)
    m = max_matching_mindeg(g, [0, 1, 2])
    assert len(m) == 1 and m.covered & ~mask_of([0, 1, 2]) == 0


def test_k33_minus_perfect_matching():
    edges = [(u, v) for u in range(3) for v in range(3, 6) if v - 3 != u]
    g = from_edge_list(6, edges)
    m = max_matching_bipartite(g, [0, 1, 2], [3, 4, 5])
    assert len(m) == 3 and m.is_valid(g)


def test_star():
    g = from_edge_list(5, [(0, i) for i in range(1, 5)])
    assert len(max_matching_bipartite(g, [0], [1, 2, 3, 4])) == 1


def test_overlapping_sides():
    with pytest.raises(Overlap):
        max_matching_bipartite(Graph.complete(3), [0, 1], [0, 2])


def test_bipartite_ignores_side_edges():
    g = Graph.complete(4)
    m = max_matching_bipartite(g, [0, 1], [2, 3])
    assert all((u in (0, 1)) != (v in (0, 1)) for u, v in m.edges)


def test_invalid_matching_detected():
    g = Graph.complete(4)
    assert not Matching.of([(0, 1), (1, 2)]).is_valid(g)
    assert not Matching.of([(0, 1)]).is_valid(Graph.empty(4))


def test_blossom_needs_contraction():
    # two triangles joined by a path: greedy choices must be undone through a blossom
    g = from_edge_list(8, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7), (0, 6)])
    assert len(maximum_matching(g)) == 4


def test_blossom_matches_brute_force():
    rng = random.Random(11)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 11), rng.random())
        m = maximum_matching(g)
        assert m.is_valid(g)
        assert len(m) == max_matching_size(adj_sets(g))


def test_blossom_matches_networkx_on_larger_graphs():
    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(20, 60)
        g = random_graph(rng, n, rng.choice([0.05, 0.1, 0.3]))
        ref = nx.Graph()
        ref.add_nodes_from(range(n))
        ref.add_edges_from(g.edges())
        assert len(maximum_matching(g)) == len(nx.max_weight_matching(ref, maxcardinality=True))


def test_mindeg_coverage_bound():
    rng = random.Random(13)
    for _ in range(300):
        n = rng.randint(1, 14)
        g = random_graph(rng, n, rng.random())
        assert max_matching_mindeg(g).covered_count() >= 2 * min(g.min_degree(), n // 2)


def test_bipartite_matches_networkx():
    rng = random.Random(14)
    for _ in range(200):
        inst = random_bipartite_instance(rng)
        m = max_matching_bipartite(inst.graph, inst.a, inst.b)
        ref = nx.Graph()
        ref.add_nodes_from(inst.a + inst.b)
        ref.add_edges_from((u, v) for u, v in inst.graph.edges() if (u in inst.a) != (v in inst.a))
        expected = len(nx.bipartite.maximum_matching(ref, top_nodes=inst.a)) // 2
        assert len(m) == expected
        am, bm = mask_of(inst.a), mask_of(inst.b)
        da, db = min_cross_degree(inst.graph, am, bm), min_cross_degree(inst.graph, bm, am)
        assert m.covered_count() >= 2 * min(da + db, len(inst.a), len(inst.b))
