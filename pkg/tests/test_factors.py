from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest

from oracles import adj_sets, ctf_oracle
from squared_path_lab.embeddings.exact import find_squared_path
from squared_path_lab.errors import HypothesisUnmet, NotTriangleConnected, Overlap, PreconditionViolated, TooLarge
from squared_path_lab.factors import (
    EMPTY_FACTOR,
    ConnectedTriangleFactor,
    ctf_exact,
    ctf_lower_bound,
    fraction_text,
    greedy_connected_factor,
    hall_extension_factor,
    maximal_independent_sets,
    stability_witness,
)
from squared_path_lab.generators import make_gp, make_triangle_free_block
from squared_path_lab.graph import Graph, from_edge_list, mask_of
from squared_path_lab.matching import Matching
from squared_path_lab.randgraphs import random_dense_graph, random_graph
from squared_path_lab.thresholds import sqp

C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
BOWTIE = from_edge_list(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def test_factor_validation():
    f = ConnectedTriangleFactor.of([(0, 1, 2)])
    assert f.size == 3 and f.is_valid(Graph.complete(4))
    assert not ConnectedTriangleFactor.of([(0, 1, 2), (0, 3, 4)]).is_valid(BOWTIE)
    # two triangles of different components
    g = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not ConnectedTriangleFactor.of([(0, 1, 2), (3, 4, 5)]).is_valid(g)
    assert EMPTY_FACTOR.size == 0 and EMPTY_FACTOR.is_valid(g)


def test_ctf_examples():
    assert ctf_exact(make_gp(20, 12).graph).size == 9
    assert ctf_exact(make_gp(15, 9).graph).size == 6
    assert ctf_exact(Graph.complete(9)).size == 9
    assert ctf_exact(BOWTIE).size == 3


def test_ctf_on_gp_matches_threshold():
    for n in range(5, 19):
        for d in range(n // 2 + 1, n):
            f = ctf_exact(make_gp(n, d).graph)
            assert f.size == 3 * (sqp(n, d) // 3), (n, d)


def test_ctf_matches_oracle():
    rng = random.Random(71)
    for _ in range(150):
        g = random_graph(rng, rng.randint(3, 11), rng.random())
        f = ctf_exact(g)
        assert f.is_valid(g)
        assert f.size == ctf_oracle(adj_sets(g))


def test_ctf_cap():
    with pytest.raises(TooLarge):
        ctf_exact(Graph.complete(40))


def test_lower_bound_examples():
    assert ctf_lower_bound(make_gp(100, 57).graph).size >= 27
    assert ctf_lower_bound(make_triangle_free_block(3).graph).size == 0
    assert ctf_lower_bound(Graph.complete(4)).size == 3


def test_lower_bound_is_sound():
    rng = random.Random(72)
    for _ in range(150):
        g = random_graph(rng, rng.randint(3, 18), 0.3 + 0.6 * rng.random())
        lb = ctf_lower_bound(g)
        assert lb.is_valid(g)
        assert lb.size <= ctf_exact(g).size


def test_squared_path_forces_factor():
    rng = random.Random(73)
    for _ in range(60):
        g = random_graph(rng, rng.randint(6, 12), 0.5 + 0.4 * rng.random())
        size = ctf_exact(g).size
        for ell in range(3, g.n + 1):
            if find_squared_path(g, ell) is None:
                break
            assert size >= 3 * (ell // 3)


def test_greedy_factor_gp_15_9():
    c = make_gp(15, 9)
    five = c.part("X2")
    four = c.part("X1")
    assert (len(four), len(five)) == (4, 5)
    f = greedy_connected_factor(c.graph, five, four, 4)
    assert f.is_valid(c.graph) and f.size >= 6


def test_greedy_factor_preconditions():
    c = make_gp(15, 9)
    with pytest.raises(PreconditionViolated) as exc:
        greedy_connected_factor(c.graph, c.part("X1"), c.part("Y"), 3)
    assert exc.value.witness is not None
    with pytest.raises(PreconditionViolated):
        greedy_connected_factor(c.graph, c.part("X1"), (), 9)


def test_greedy_factor_single_triangle():
    g = Graph.complete(7)
    f = greedy_connected_factor(g, [0, 1, 2], [], 2)
    assert f.triangles[0][:2] == (0, 1) and f.size == 3 and f.is_valid(g)


def test_greedy_factor_bound_on_random_graphs():
    rng = random.Random(74)
    checked = 0
    for _ in range(200):
        g = random_dense_graph(rng, 10, 16)
        u1 = [v for v in range(g.n) if rng.random() < 0.5]
        m1 = mask_of(u1)
        u2 = [v for v in range(g.n) if not m1 >> v & 1 and not g.adj(v) & m1]
        try:
            f = greedy_connected_factor(g, u1, u2, g.min_degree(m1) if u1 else 0)
        except PreconditionViolated:
            continue
        checked += 1
        d1 = g.min_degree(m1) if u1 else 0
        bound = min(3 * (len(u1) // 2), 3 * d1, 2 * g.min_degree() - g.n + len(u2))
        assert f.is_valid(g)
        assert f.size >= bound
    assert checked > 20


def test_hall_extension():
    c = make_gp(20, 12)
    x = sorted(c.part("X1"))
    m = Matching.of([(x[0], x[1]), (x[2], x[3]), (x[4], x[5])])
    f = hall_extension_factor(c.graph, m, c.part("Y"))
    assert f.size == 9 and f.is_valid(c.graph)
    assert hall_extension_factor(c.graph, Matching.of([]), c.part("Y")).size == 0
    with pytest.raises(Overlap):
        hall_extension_factor(c.graph, m, [x[0]])
    y = sorted(c.part("Y"))
    x2 = sorted(c.part("X2"))
    with pytest.raises(NotTriangleConnected):
        hall_extension_factor(c.graph, Matching.of([(x[0], x[1]), (x2[0], x2[1])]), y)


def test_stability_examples():
    c = make_gp(20, 12)
    w = stability_witness(c.graph, Fraction(1, 100))
    assert w.outcome == "S3" and w.separator == c.part("Y")
    assert w.component_sizes == [6, 6]
    w = stability_witness(Graph.complete(12), Fraction(1, 100))
    assert w.outcome == "S2" and w.ctf == 12
    with pytest.raises(HypothesisUnmet):
        stability_witness(C5, Fraction(1, 100))


def test_stability_json_is_canonical():
    w = stability_witness(make_gp(20, 12).graph, "1/100")
    text = w.to_json()
    data = json.loads(text)
    assert data["eta"] == "1/100"
    assert text == json.dumps(data, sort_keys=True)
    assert "." not in text.replace('"', "")


def test_stability_s1():
    # 3(2δ-n) = 6 and the two 4-cliques each carry a 6-vertex factor
    g = make_gp(20, 11).graph
    w = stability_witness(g, Fraction(1, 100))
    assert w.outcome == "S1" and w.factor.is_valid(g)


def test_fraction_text():
    assert fraction_text(Fraction(1, 100)) == "1/100"
    assert fraction_text(Fraction(3)) == "3/1"


def test_maximal_independent_sets_of_c5():
    sets = sorted(sorted(b for b in range(5) if s >> b & 1) for s in maximal_independent_sets(C5))
    assert sets == [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]]
