from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from squared_path_lab.errors import EmptyQuery, FormatError, GraphTooLarge, OutOfRange, SelfLoop
from squared_path_lab.generators import make_gp
from squared_path_lab.graph import (
    MAX_VERTICES,
    Graph,
    common_neighbourhood,
    from_edge_list,
    is_independent_set,
    min_degree,
    parse_graph,
    read_graph,
    write_edge_list,
)

K4 = Graph.complete(4)
C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
BOWTIE = from_edge_list(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def test_triangle_from_edges():
    g = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert g == Graph.complete(3)
    assert g.m == 3


def test_duplicate_edges_collapse():
    g = from_edge_list(4, [(0, 1), (0, 1)])
    assert g.m == 1
    assert from_edge_list(4, [(1, 0), (0, 1)]).m == 1


def test_out_of_range_and_self_loop():
    with pytest.raises(OutOfRange):
        from_edge_list(2, [(0, 2)])
    with pytest.raises(SelfLoop):
        from_edge_list(3, [(1, 1)])


def test_size_cap():
    assert MAX_VERTICES >= 512
    with pytest.raises(GraphTooLarge):
        Graph.empty(MAX_VERTICES + 1)


def test_edge_order_does_not_matter():
    edges = [(0, 1), (2, 3), (1, 3), (0, 4)]
    a = from_edge_list(5, edges)
    b = from_edge_list(5, list(reversed(edges)))
    assert a == b and hash(a) == hash(b)
    assert a.to_edge_list_text() == b.to_edge_list_text()


def test_common_neighbourhood_examples():
    assert common_neighbourhood(K4, {0, 1}) == {2, 3}
    assert common_neighbourhood(C5, {0, 1}) == frozenset()
    assert common_neighbourhood(BOWTIE, {1, 2}) == {0}
    with pytest.raises(EmptyQuery):
        common_neighbourhood(K4, set())
    with pytest.raises(OutOfRange):
        common_neighbourhood(K4, {7})


def test_min_degree_examples():
    assert min_degree(K4) == 3
    assert min_degree(from_edge_list(3, [(0, 1), (1, 2)])) == 1
    assert min_degree(make_gp(15, 9).graph) == 9


def test_independent_set_examples():
    assert not is_independent_set(K4, {0, 1})
    assert is_independent_set(C5, {0, 2})
    gp = make_gp(15, 9)
    assert is_independent_set(gp.graph, gp.part("Y"))


def test_parse_edge_list_with_comments():
    g = parse_graph("# header\n3 2\n0 1  # first\n1 2\n")
    assert g.edges() == [(0, 1), (1, 2)]


def test_parse_adjacency_matrix():
    g = parse_graph("3\n011\n101\n110\n")
    assert g == Graph.complete(3)


@pytest.mark.parametrize(
    "text",
    ["", "3 2\n0 1\n", "3 1\n0 x\n", "2\n01\n00\n", "2\n0\n10\n"],
)
def test_malformed_text(text):
    with pytest.raises(FormatError):
        parse_graph(text)


def test_matrix_diagonal_is_self_loop():
    with pytest.raises(SelfLoop):
        parse_graph("2\n11\n10\n")


def test_file_round_trip(tmp_path):
    g = make_gp(12, 7).graph
    path = tmp_path / "g.txt"
    write_edge_list(g, path)
    assert read_graph(path) == g
    assert parse_graph(g.to_adjacency_matrix_text()) == g


def test_masked_queries():
    g = make_gp(15, 9).graph
    y = make_gp(15, 9).part_mask("Y")
    assert g.degree(0, y) == 0
    assert g.edges(y) == []


@st.composite
def graphs(draw, max_n=14):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_adjacency_symmetric_irreflexive(g):
    for u in range(g.n):
        assert u not in g.neighbours(u)
        assert g.degree(u) == len(g.neighbours(u))
        for v in g.neighbours(u):
            assert u in g.neighbours(v)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_serialisation_round_trip(g):
    assert parse_graph(g.to_edge_list_text()) == g
    assert parse_graph(g.to_adjacency_matrix_text()) == g


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_codegree_pigeonhole(g):
    delta = g.min_degree()
    for u, v in g.edges():
        assert len(common_neighbourhood(g, {u, v})) >= 2 * delta - g.n


def test_codegree_pigeonhole_on_dense_random_graphs():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(5, 30)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.7]
        g = from_edge_list(n, edges)
        for u, v in g.edges():
            assert len(common_neighbourhood(g, {u, v})) >= 2 * g.min_degree() - n
