"""Squared cycles of every length from a core graph and a connector set.

Squaring an even cycle only produces lengths divisible by three. The other
residues come from small gadgets inside the core:

* l = 3m+1: a triangle abc with b cloned as b'. A path P from a to c on 2m
  vertices avoids b. Squaring bPb' and dropping q1, the clone and the last
  connector leaves the squared cycle (b, a, q2, ..., q_l, c).
* l = 3m+2, m > 1: triangles abc and xyz joined by the edge cx. A path P from
  a to z on 2m-2 vertices avoids b, c, x, y. Squaring bPy (without its first
  and last connector) gives (b, a, ..., z, y). Squaring (b, c, x, y) gives a
  connector q adjacent to all four. Together they close into the squared
  cycle (b, a, ..., z, y, x, q, c).

Core paths and cycles come from :func:`nice_path_cycle` when the core meets
its degree conditions, and from a bounded exact search otherwise.
"""

from __future__ import annotations

from ..errors import (
    ConstructionStuck,
    Five,
    LengthUnreachable,
    NoTriangle,
    Overlap,
    PreconditionViolated,
)
from ..graph import Graph, iter_bits, mask_of
from ..triangles import triangles
from .exact import EmbeddingWitness, cycle_witness, validate_witness
from .nicepath import NicePathBuilder, exact_path
from .squaring import square_path_lemma


def _core_path(g: Graph, core: int, a: int, z: int, count: int) -> list[int] | None:
    if count >= 5:
        try:
            return NicePathBuilder(g, (), (a, z), core).path(count)
        except (PreconditionViolated, ConstructionStuck):
            pass
    return exact_path(g, core, a, z, count)


def _core_cycle(g: Graph, core: int, count: int) -> list[int] | None:
    if count == 2:
        edges = g.edges(core)
        return list(edges[0]) if edges else None
    try:
        return NicePathBuilder(g, (), None, core).cycle(count)
    except (PreconditionViolated, ConstructionStuck):
        pass
    for a, z in g.edges(core):
        # a cycle through the edge az is an a-z path on ``count`` vertices
        path = exact_path(g, core, a, z, count)
        if path is not None:
            return path
    return None


def _clone(g: Graph, b: int) -> Graph:
    """``g`` plus a new vertex with the same neighbours as ``b``."""
    n = g.n
    adj = [a | ((a >> b & 1) << n) for a in g.adjacency]
    adj.append(g.adj(b))
    return Graph(n + 1, adj)


def _one_mod_three(g: Graph, core: int, w: int, m: int) -> EmbeddingWitness:
    found_triangle = False
    for tri in triangles(g, core):
        found_triangle = True
        a, b, c = tri
        path = _core_path(g, core & ~(1 << b), a, c, 2 * m)
        if path is None:
            continue
        g2 = _clone(g, b)
        sq = square_path_lemma(g2, [b] + path + [g.n], w, is_cycle=False)
        seq = sq.sequence[1:-2]
        return cycle_witness(seq)
    if not found_triangle:
        raise NoTriangle("the core has no triangle")
    raise LengthUnreachable(f"no path on {2 * m} core vertices joins a triangle's ends")


def _two_mod_three(g: Graph, core: int, w: int, m: int) -> EmbeddingWitness:
    tris = triangles(g, core)
    if not tris:
        raise NoTriangle("the core has no triangle")
    adj = g.adjacency
    joined = False
    for tri in tris:
        for c in tri:
            a, b = (v for v in tri if v != c)
            t1 = mask_of(tri)
            for x in iter_bits(adj[c] & core & ~t1):
                for y in iter_bits(adj[x] & core & ~t1):
                    for z in iter_bits(adj[x] & adj[y] & core & ~t1):
                        joined = True
                        avoid = 1 << b | 1 << c | 1 << x | 1 << y
                        path = _core_path(g, core & ~avoid, a, z, 2 * m - 2)
                        if path is None:
                            continue
                        first = square_path_lemma(g, [b] + path + [y], w, is_cycle=False)
                        piece = list(first.sequence[1:-1])
                        spare = w & ~mask_of(piece)
                        second = square_path_lemma(g, [b, c, x, y], spare, is_cycle=False)
                        q = second.sequence[3]
                        return cycle_witness(piece + [x, q, c])
    if not joined:
        raise NoTriangle("the core has no two disjoint triangles joined by an edge")
    raise LengthUnreachable(f"no path on {2 * m - 2} core vertices fits between two joined triangles")


def squared_cycle_via_parity_correction(g: Graph, core, connectors, ell: int) -> EmbeddingWitness:
    """A squared cycle on ``ell`` vertices using core paths and connector vertices."""
    core_m = core if isinstance(core, int) else mask_of(core)
    w = connectors if isinstance(connectors, int) else mask_of(connectors)
    if core_m & w:
        raise Overlap("core and connectors must be disjoint")
    if ell == 5:
        raise Five("a squared 5-cycle is K5 and cannot be built this way")
    if ell < 3:
        raise LengthUnreachable(f"squared cycles need at least 3 vertices, got {ell}")
    size = core_m.bit_count()
    m, r = divmod(ell, 3)
    if r == 0:
        if 2 * m > size:
            raise LengthUnreachable(f"a {2 * m}-cycle does not fit into a core of {size} vertices")
        cyc = _core_cycle(g, core_m, 2 * m)
        if cyc is None:
            raise LengthUnreachable(f"the core has no cycle on {2 * m} vertices")
        out = square_path_lemma(g, cyc, w, is_cycle=True)
    elif r == 1:
        if 2 * m + 1 > size:
            raise LengthUnreachable(f"length {ell} needs {2 * m + 1} core vertices, core has {size}")
        out = _one_mod_three(g, core_m, w, m)
    else:
        if 2 * m + 2 > size:
            raise LengthUnreachable(f"length {ell} needs {2 * m + 2} core vertices, core has {size}")
        out = _two_mod_three(g, core_m, w, m)
    if len(out) != ell or not validate_witness(g, out):
        raise ConstructionStuck(f"internal error: parity correction produced an invalid {ell}-cycle")
    return out
