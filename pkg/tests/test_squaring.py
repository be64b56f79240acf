from __future__ import annotations

import random

import pytest

from squared_path_lab.embeddings.exact import Kind, validate_witness
from squared_path_lab.embeddings.squaring import check_sigma, find_sigma, quadruples, square_path_lemma
from squared_path_lab.errors import NotAPath, Overlap, SigmaConditionFails
from squared_path_lab.graph import Graph, from_edge_list, mask_of
from squared_path_lab.randgraphs import random_graph


def test_quadruples_path_and_cycle():
    t = [10, 11, 12, 13, 14, 15]
    assert quadruples(t, False) == [(10, 11), (10, 11, 12, 13), (12, 13, 14, 15), (14, 15)]
    assert quadruples(t, True) == [(14, 15, 10, 11), (10, 11, 12, 13), (12, 13, 14, 15)]


def test_k7_identity_order():
    g = Graph.complete(7)
    w = square_path_lemma(g, [0, 1, 2, 3], {4, 5, 6}, sigma=[0, 1, 2])
    assert w.sequence == (4, 0, 1, 5, 2, 3, 6)
    assert w.kind is Kind.SQUARED_PATH and validate_witness(g, w)


def test_k9_six_cycle():
    g = Graph.complete(9)
    w = square_path_lemma(g, [0, 1, 2, 3, 4, 5], [6, 7, 8], is_cycle=True)
    assert len(w) == 9 and w.kind is Kind.SQUARED_CYCLE and validate_witness(g, w)


def test_two_vertex_cycle_gives_triangle():
    g = Graph.complete(3)
    w = square_path_lemma(g, [0, 1], [2], is_cycle=True)
    assert w.sequence == (2, 0, 1) and validate_witness(g, w)


def test_sigma_failure_reports_position():
    # connector 4 sees only 0 and 1, so the quadruple (2, 3) has none
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4)])
    with pytest.raises(SigmaConditionFails) as exc:
        square_path_lemma(g, [0, 1, 2, 3], [4])
    assert exc.value.index == 1


def test_too_few_connectors():
    # three quadruples but only two connectors: position 3 cannot be served
    edges = list(Graph.complete(4).edges()) + [(v, c) for v in range(4) for c in (6, 7)]
    g = from_edge_list(8, edges)
    with pytest.raises(SigmaConditionFails):
        square_path_lemma(g, [0, 1, 2, 3], [6, 7])
    with pytest.raises(SigmaConditionFails):
        check_sigma(g, [0, 1, 2, 3], [6, 7], False, [2, 1, 0])


def test_bad_inputs():
    g = Graph.complete(6)
    with pytest.raises(NotAPath):
        square_path_lemma(g, [0, 1, 2], [4, 5])
    with pytest.raises(NotAPath):
        square_path_lemma(from_edge_list(6, [(0, 1), (2, 3)]), [0, 1, 2, 3], [4, 5])
    with pytest.raises(Overlap):
        square_path_lemma(g, [0, 1, 2, 3], [3, 4, 5])
    with pytest.raises(ValueError):
        check_sigma(g, [0, 1, 2, 3], [4, 5], False, [0, 0, 1])


def test_random_hosts_validate_and_lengths():
    rng = random.Random(41)
    done = 0
    for _ in range(400):
        n = rng.randint(8, 22)
        g = random_graph(rng, n, 0.8)
        l = rng.randint(1, n // 3)
        t = list(range(2 * l))
        if any(not g.has_edge(a, b) for a, b in zip(t, t[1:])):
            continue
        w = mask_of(range(2 * l, n))
        cyc = l > 1 and g.has_edge(t[-1], t[0]) and rng.random() < 0.5
        try:
            out = square_path_lemma(g, t, w, is_cycle=cyc)
        except SigmaConditionFails:
            continue
        assert validate_witness(g, out)
        assert len(out) == (3 * l if cyc else 3 * l + 1)
        done += 1
    assert done > 50


def test_find_sigma_is_complete():
    # whenever some order satisfies the counting condition, the sorted order does
    import itertools

    rng = random.Random(42)
    for _ in range(200):
        g = random_graph(rng, 10, 0.6)
        t = [0, 1, 2, 3]
        if any(not g.has_edge(a, b) for a, b in zip(t, t[1:])):
            continue
        w = mask_of(range(4, 10))
        some = False
        for perm in itertools.permutations(range(3)):
            try:
                check_sigma(g, t, w, False, perm)
                some = True
                break
            except SigmaConditionFails:
                pass
        try:
            check_sigma(g, t, w, False, find_sigma(g, t, w))
            ok = True
        except SigmaConditionFails:
            ok = False
        assert ok == some
