from __future__ import annotations

import random

import pytest

from oracles import adj_sets, interior, triangle_components
from squared_path_lab.errors import HypothesisUnmet, NotAWalk, NotConnected, NotInTriangle
from squared_path_lab.generators import make_gc, make_gp, make_tripartite_extremal
from squared_path_lab.graph import Graph, from_edge_list, iter_bits
from squared_path_lab.randgraphs import random_dense_graph, random_graph
from squared_path_lab.triangles import (
    NONE,
    UnionFind,
    check_component_lemma,
    component_contains_k4,
    component_table,
    decompose,
    make_walk,
    triangles,
    walk_between,
)

K4 = Graph.complete(4)
BOWTIE = from_edge_list(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])


def test_union_find():
    uf = UnionFind(5)
    uf.union(0, 1)
    uf.union(3, 4)
    uf.union(1, 4)
    assert uf.find(0) == uf.find(3)
    assert uf.find(2) != uf.find(0)


def test_triangles_listing():
    assert triangles(K4) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert triangles(C5) == []


def test_k4_single_component():
    d = decompose(K4)
    assert len(d) == 1
    assert len(d.components[0]) == 6
    assert d.interior_set == frozenset()


def test_bowtie_two_components():
    d = decompose(BOWTIE)
    assert len(d) == 2
    assert d.interior_set == {0}
    assert d.exterior(d.component_id(1, 2)) == {1, 2}


def test_edge_outside_triangles():
    g = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    d = decompose(g)
    assert d.component_id(2, 3) == NONE
    assert d.component_id(0, 1) != NONE


def test_gp_components():
    c = make_gp(15, 9)
    d = decompose(c.graph)
    assert len(d) == 2
    assert d.interior_set == c.part("Y")
    cliques = {c.part("X1"), c.part("X2")}
    assert {d.exterior(cid) for cid in range(2)} == cliques


def test_decomposition_matches_flood_fill():
    rng = random.Random(21)
    for _ in range(150):
        g = random_graph(rng, rng.randint(3, 13), rng.random())
        d = decompose(g)
        adj = adj_sets(g)
        expected = {frozenset(c) for c in triangle_components(adj)}
        assert {frozenset(c) for c in d.components} == expected
        assert d.interior_set == interior(adj)


def test_walk_reflexive_and_k4():
    d = decompose(K4)
    assert walk_between(K4, d, (0, 1), (0, 1)).edges == ((0, 1),)
    w = walk_between(K4, d, (0, 1), (2, 3))
    assert len(w) <= 3 and w.verify(K4)
    assert w.edges[0] == (0, 1) and w.edges[-1] == (2, 3)


def test_walk_between_components():
    d = decompose(BOWTIE)
    with pytest.raises(NotConnected):
        walk_between(BOWTIE, d, (1, 2), (3, 4))


def test_walk_needs_triangle_edge():
    g = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    with pytest.raises(NotInTriangle):
        walk_between(g, decompose(g), (2, 3), (0, 1))


def test_make_walk_rejects_non_walk():
    with pytest.raises(NotAWalk):
        make_walk(BOWTIE, [(1, 2), (3, 4)])


def test_random_walks_verify_and_are_shortest():
    rng = random.Random(22)
    for _ in range(60):
        g = random_graph(rng, rng.randint(4, 12), 0.6)
        d = decompose(g)
        for comp in d.components:
            e1, e2 = rng.choice(comp), rng.choice(comp)
            w = walk_between(g, d, e1, e2)
            assert w.verify(g)
            assert w.edges[0] == e1 and w.edges[-1] == e2


def test_k4_detection():
    d = decompose(K4)
    assert component_contains_k4(K4, d, 0) == (0, 1, 2, 3)
    t = make_tripartite_extremal(10, 6).graph
    dt = decompose(t)
    assert len(dt) == 1
    assert component_contains_k4(t, dt, 0) is None
    c = make_gp(15, 9)
    d = decompose(c.graph)
    five = c.part("X2") if len(c.part("X2")) == 5 else c.part("X1")
    cid = next(i for i in range(len(d)) if five <= d.vertex_set(i))
    q = component_contains_k4(c.graph, d, cid)
    assert q is not None and c.graph.is_clique(sum(1 << v for v in q))


def test_component_lemma_examples():
    assert check_component_lemma(make_gp(15, 9).graph).passed
    assert check_component_lemma(make_gc(20, 12).graph).passed
    with pytest.raises(HypothesisUnmet):
        check_component_lemma(C5)


def test_component_lemma_on_dense_random_graphs():
    rng = random.Random(23)
    for _ in range(100):
        rep = check_component_lemma(random_dense_graph(rng, 8, 16))
        assert rep.passed, rep.counterexample


def test_component_table():
    rows = component_table(make_gp(15, 9).graph)
    assert [r["vertices"] for r in rows] == [10, 11]
    assert all(r["interior"] == 6 for r in rows)
    assert sum(r["exterior"] for r in rows) == 9


def test_vertex_sets_are_edge_endpoints():
    g = random_graph(random.Random(24), 12, 0.5)
    d = decompose(g)
    for cid, comp in enumerate(d.components):
        assert set(iter_bits(d.vertices_of[cid])) == {v for e in comp for v in e}
