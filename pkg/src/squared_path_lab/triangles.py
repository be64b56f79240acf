"""Triangle walks, triangle components, interiors and exteriors."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import HypothesisUnmet, NotAWalk, NotConnected, NotInTriangle
from .graph import Edge, Graph, iter_bits, mask_of, norm_edge

NONE = -1


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        self.parent[y] = x
        if self.rank[x] == self.rank[y]:
            self.rank[x] += 1


def triangles(g: Graph, within: int | None = None) -> list[tuple[int, int, int]]:
    """All triangles ``(a, b, c)`` with ``a < b < c``, in lexicographic order."""
    out = []
    for a, b in g.edges(within):
        common = g.adj(a) & g.adj(b) >> (b + 1) << (b + 1)
        if within is not None:
            common &= within
        out.extend((a, b, c) for c in iter_bits(common))
    return out


@dataclass
class TriangleDecomposition:
    n: int
    edges: list[Edge]
    component_of: dict[Edge, int]
    components: list[list[Edge]]
    vertices_of: list[int]  # bitmask per component
    interior: int  # bitmask
    exterior_of: list[int] = field(default_factory=list)

    def component_id(self, u: int, v: int) -> int:
        return self.component_of.get(norm_edge(u, v), NONE)

    def vertex_set(self, cid: int) -> frozenset[int]:
        return frozenset(iter_bits(self.vertices_of[cid]))

    def exterior(self, cid: int) -> frozenset[int]:
        return frozenset(iter_bits(self.exterior_of[cid]))

    @property
    def interior_set(self) -> frozenset[int]:
        return frozenset(iter_bits(self.interior))

    def size(self, cid: int) -> int:
        return self.vertices_of[cid].bit_count()

    def __len__(self) -> int:
        return len(self.components)


def decompose(g: Graph) -> TriangleDecomposition:
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    uf = UnionFind(len(edges))
    in_triangle = [False] * len(edges)
    for a, b, c in triangles(g):
        ab, ac, bc = index[(a, b)], index[(a, c)], index[(b, c)]
        uf.union(ab, ac)
        uf.union(ab, bc)
        in_triangle[ab] = in_triangle[ac] = in_triangle[bc] = True

    # ids follow the lexicographically smallest member edge
    root_to_id: dict[int, int] = {}
    component_of: dict[Edge, int] = {}
    components: list[list[Edge]] = []
    vertices_of: list[int] = []
    for i, e in enumerate(edges):
        if not in_triangle[i]:
            continue
        root = uf.find(i)
        cid = root_to_id.get(root)
        if cid is None:
            cid = root_to_id[root] = len(components)
            components.append([])
            vertices_of.append(0)
        component_of[e] = cid
        components[cid].append(e)
        vertices_of[cid] |= 1 << e[0] | 1 << e[1]

    seen = 0
    interior = 0
    for vm in vertices_of:
        interior |= seen & vm
        seen |= vm
    exterior_of = [vm & ~interior for vm in vertices_of]
    return TriangleDecomposition(
        n=g.n,
        edges=edges,
        component_of=component_of,
        components=components,
        vertices_of=vertices_of,
        interior=interior,
        exterior_of=exterior_of,
    )


# triangle walks ---------------------------------------------------------------


@dataclass(frozen=True)
class TriangleWalk:
    edges: tuple[Edge, ...]
    shared_triangles: tuple[tuple[int, int, int], ...]

    def __len__(self) -> int:
        return len(self.edges)

    def verify(self, g: Graph) -> bool:
        """Re-check every witness triangle against the host graph."""
        if len(self.shared_triangles) != max(len(self.edges) - 1, 0):
            return False
        if not all(g.has_edge(*e) for e in self.edges):
            return False
        for e, f, tri in zip(self.edges, self.edges[1:], self.shared_triangles):
            if len(set(tri)) != 3 or not g.is_clique(mask_of(tri)):
                return False
            if not set(e) | set(f) <= set(tri):
                return False
        return True


def make_walk(g: Graph, edges: list[Edge]) -> TriangleWalk:
    """Wrap an edge sequence as a :class:`TriangleWalk`, deriving the witnesses."""
    edges = [norm_edge(*e) for e in edges]
    tris = []
    for e, f in zip(edges, edges[1:]):
        union = set(e) | set(f)
        if e == f or len(union) != 3 or not g.is_clique(mask_of(union)):
            raise NotAWalk(f"edges {e} and {f} do not share a triangle")
        tris.append(tuple(sorted(union)))
    for e in edges:
        if not g.has_edge(*e):
            raise NotAWalk(f"{e} is not an edge")
    return TriangleWalk(tuple(edges), tuple(tris))


def _triangle_neighbours(g: Graph, e: Edge) -> list[tuple[Edge, tuple[int, int, int]]]:
    u, v = e
    out = []
    for w in iter_bits(g.adj(u) & g.adj(v)):
        tri = tuple(sorted((u, v, w)))
        out.append((norm_edge(u, w), tri))
        out.append((norm_edge(v, w), tri))
    out.sort()
    return out


def walk_between(g: Graph, d: TriangleDecomposition, e1: Edge, e2: Edge) -> TriangleWalk:
    """Shortest triangle walk from ``e1`` to ``e2`` (BFS, lexicographic tie-break)."""
    e1, e2 = norm_edge(*e1), norm_edge(*e2)
    c1, c2 = d.component_of.get(e1, NONE), d.component_of.get(e2, NONE)
    if c1 == NONE or c2 == NONE:
        bad = e1 if c1 == NONE else e2
        raise NotInTriangle(f"edge {bad} lies in no triangle")
    if c1 != c2:
        raise NotConnected(f"{e1} and {e2} are in different triangle components")
    if e1 == e2:
        return TriangleWalk((e1,), ())
    parent: dict[Edge, tuple[Edge, tuple[int, int, int]] | None] = {e1: None}
    queue = deque([e1])
    while queue:
        e = queue.popleft()
        for f, tri in _triangle_neighbours(g, e):
            if f in parent:
                continue
            parent[f] = (e, tri)
            if f == e2:
                queue.clear()
                break
            queue.append(f)
    edges = [e2]
    tris = []
    cur = e2
    while parent[cur] is not None:
        prev, tri = parent[cur]
        edges.append(prev)
        tris.append(tri)
        cur = prev
    return TriangleWalk(tuple(reversed(edges)), tuple(reversed(tris)))


# K4 detection -----------------------------------------------------------------


def component_contains_k4(
    g: Graph, d: TriangleDecomposition, cid: int
) -> tuple[int, int, int, int] | None:
    """Lexicographically least K4 whose edges lie in component ``cid``."""
    vm = d.vertices_of[cid]
    for a in iter_bits(vm):
        for b in iter_bits(g.adj(a) & vm & ~((1 << (a + 1)) - 1)):
            if d.component_of.get((a, b)) != cid:
                continue
            ab = g.adj(a) & g.adj(b)
            for c in iter_bits(ab >> (b + 1) << (b + 1)):
                abc = ab & g.adj(c)
                high = abc >> (c + 1) << (c + 1)
                if high:
                    return (a, b, c, (high & -high).bit_length() - 1)
    return None


# Lemma-style component checks ---------------------------------------------------


@dataclass
class ComponentLemmaReport:
    passed: bool
    part_a: bool
    part_c: bool
    part_d: bool
    counterexample: str | None = None


def check_component_lemma(g: Graph, d: TriangleDecomposition | None = None) -> ComponentLemmaReport:
    """Check the size, exterior-separation and link-degree properties of components.

    Requires ``2*delta(G) > n``; otherwise :class:`HypothesisUnmet` is raised.
    """
    n = g.n
    delta = g.min_degree()
    if 2 * delta <= n:
        raise HypothesisUnmet(f"minimum degree {delta} is not above n/2 = {n / 2}")
    if d is None:
        d = decompose(g)

    for cid in range(len(d)):
        if d.size(cid) <= delta:
            return ComponentLemmaReport(
                False, False, True, True,
                f"component {cid} has {d.size(cid)} vertices, not more than delta={delta}",
            )

    for cid, ext in enumerate(d.exterior_of):
        for cid2 in range(cid + 1, len(d)):
            ext2 = d.exterior_of[cid2]
            for u in iter_bits(ext):
                hit = g.adj(u) & ext2
                if hit:
                    v = (hit & -hit).bit_length() - 1
                    return ComponentLemmaReport(
                        False, True, False, True,
                        f"edge {norm_edge(u, v)} joins exteriors of components {cid} and {cid2}",
                    )

    need = 2 * delta - n
    link: list[dict[int, int]] = [dict() for _ in range(len(d))]
    for (u, v), cid in d.component_of.items():
        link[cid][u] = link[cid].get(u, 0) | 1 << v
        link[cid][v] = link[cid].get(v, 0) | 1 << u
    for cid, per_vertex in enumerate(link):
        for u, umask in sorted(per_vertex.items()):
            if umask.bit_count() < need + 1:
                return ComponentLemmaReport(
                    False, True, True, False,
                    f"vertex {u} in component {cid}: link has {umask.bit_count()} < {need + 1} vertices",
                )
            low = g.min_degree(umask)
            if low < need:
                return ComponentLemmaReport(
                    False, True, True, False,
                    f"vertex {u} in component {cid}: link min degree {low} < {need}",
                )
    return ComponentLemmaReport(True, True, True, True)


def component_table(g: Graph, d: TriangleDecomposition | None = None) -> list[dict]:
    """Rows describing each component, used by the command-line ``decompose``."""
    if d is None:
        d = decompose(g)
    rows = []
    for cid in range(len(d)):
        vm = d.vertices_of[cid]
        rows.append(
            {
                "component": cid,
                "vertices": vm.bit_count(),
                "edges": len(d.components[cid]),
                "interior": (vm & d.interior).bit_count(),
                "exterior": d.exterior_of[cid].bit_count(),
                "k4": component_contains_k4(g, d, cid),
            }
        )
    return rows

