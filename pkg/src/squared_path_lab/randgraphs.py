"""Seeded random instances for the property suites.

All randomness goes through :class:`random.Random` (Mersenne Twister), which
is portable across platforms and Python versions for the calls used here
(``random``, ``randint``, ``shuffle``, ``sample``, ``choice``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, iter_bits


def gnp_edges(rng: random.Random, vertices: list[int], p: float) -> list[tuple[int, int]]:
    return [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:] if rng.random() < p]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edge_list(n, gnp_edges(rng, list(range(n)), p))


def random_dense_graph(rng: random.Random, n_lo: int = 8, n_hi: int = 16) -> Graph:
    """Uniform order in [n_lo, n_hi], G(n, p) with p in [0.55, 0.95], conditioned on 2δ > n."""
    while True:
        n = rng.randint(n_lo, n_hi)
        p = 0.55 + 0.4 * rng.random()
        g = random_graph(rng, n, p)
        if 2 * g.min_degree() > n:
            return g


@dataclass
class BipartiteInstance:
    graph: Graph
    a: list[int]
    b: list[int]


def random_bipartite_instance(rng: random.Random, max_side: int = 8) -> BipartiteInstance:
    """Two sides with random extra edges inside each side, which the matcher must ignore."""
    na, nb = rng.randint(1, max_side), rng.randint(1, max_side)
    p = rng.random()
    a = list(range(na))
    b = list(range(na, na + nb))
    edges = [(u, v) for u in a for v in b if rng.random() < p]
    edges += gnp_edges(rng, a, 0.3) + gnp_edges(rng, b, 0.3)
    return BipartiteInstance(Graph.from_edge_list(na + nb, edges), a, b)


def random_triangle_walk_host(rng: random.Random) -> Graph:
    n = rng.randint(5, 12)
    return random_graph(rng, n, 0.45 + 0.4 * rng.random())


@dataclass
class NiceHost:
    graph: Graph
    host: int  # mask of H
    bad: list[int]
    connectors: int  # mask of W, disjoint from H
    h: int


def nice_path_host(rng: random.Random, h: int, bad_count: int, p: float = 0.8, p_connect: float = 0.95) -> NiceHost:
    """A host H on vertices 0..h-1 meeting the degree preconditions, plus connectors.

    H starts as G(h, p). A bad vertex keeps only a random set of 9|B| to 20|B|
    neighbours. Every other vertex is then topped up to h/2 + 9|B| + 10 by
    adding random edges to good vertices. The connectors h..2h-1 form an
    independent set; each is joined to each host vertex with probability
    ``p_connect``.
    """
    k = bad_count
    adj = [set() for _ in range(h)]
    for u, v in gnp_edges(rng, list(range(h)), p):
        adj[u].add(v)
        adj[v].add(u)
    bad = sorted(rng.sample(range(h), k))
    bad_set = set(bad)
    for b in bad:
        keep_n = rng.randint(9 * k, 20 * k)
        nbrs = sorted(adj[b] - bad_set)
        keep = set(rng.sample(nbrs, min(keep_n, len(nbrs))))
        for v in list(adj[b]):
            if v not in keep:
                adj[b].discard(v)
                adj[v].discard(b)
    need = -(-(h + 18 * k + 20) // 2)
    good = [v for v in range(h) if v not in bad_set]
    for v in good:
        while len(adj[v]) < need:
            w = rng.choice(good)
            if w != v and w not in adj[v]:
                adj[v].add(w)
                adj[w].add(v)
    edges = [(u, v) for u in range(h) for v in adj[u] if u < v]
    edges += [(u, c) for c in range(h, 2 * h) for u in range(h) if rng.random() < p_connect]
    g = Graph.from_edge_list(2 * h, edges)
    host = (1 << h) - 1
    return NiceHost(g, host, bad, ((1 << (2 * h)) - 1) & ~host, h)


def plant_squared_path(rng: random.Random, n: int, ell: int, p: float = 0.3) -> tuple[Graph, list[int]]:
    """G(n, p) plus the edges of a squared path on a random ordered ``ell``-subset."""
    seq = rng.sample(range(n), ell)
    edges = set(gnp_edges(rng, list(range(n)), p))
    for i in range(ell - 1):
        edges.add(tuple(sorted((seq[i], seq[i + 1]))))
        if i + 2 < ell:
            edges.add(tuple(sorted((seq[i], seq[i + 2]))))
    return Graph.from_edge_list(n, sorted(edges)), seq


def random_walk_edges(rng: random.Random, g: Graph, steps: int) -> list[tuple[int, int]] | None:
    """A random triangle walk with ``steps`` edges and no immediate repetition."""
    from .triangles import triangles

    tris = triangles(g)
    if not tris:
        return None
    a, b, c = rng.choice(tris)
    walk = [tuple(sorted(rng.sample((a, b, c), 2)))]
    while len(walk) < steps:
        u, v = walk[-1]
        common = list(iter_bits(g.adj(u) & g.adj(v)))
        w = rng.choice(common)
        keep = rng.choice((u, v))
        walk.append(tuple(sorted((keep, w))))
    return walk
