"""Connected triangle factors: exact search, constructive builders and a stability classifier."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    HypothesisUnmet,
    NotTriangleConnected,
    Overlap,
    PreconditionViolated,
    TooLarge,
)
from .graph import Graph, iter_bits, lowest, mask_of, norm_edge
from .limits import FACTOR_CAP, exact_cap
from .matching import Matching, bipartite_matching, max_matching_mindeg
from .thresholds import sqp_clamped
from .triangles import NONE, TriangleDecomposition, component_contains_k4, decompose, triangles

Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class ConnectedTriangleFactor:
    triangles: tuple[Triangle, ...]
    component_id: int | None = None

    @classmethod
    def of(cls, tris, component_id: int | None = None) -> "ConnectedTriangleFactor":
        return cls(tuple(sorted(tuple(sorted(t)) for t in tris)), component_id)

    @property
    def size(self) -> int:
        return 3 * len(self.triangles)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for t in self.triangles for v in t)

    def problems(self, g: Graph, d: TriangleDecomposition | None = None) -> list[str]:
        """Everything wrong with the factor; the component ids are re-derived."""
        out = []
        seen = 0
        cids = set()
        d = decompose(g) if d is None and self.triangles else d
        for t in self.triangles:
            tm = mask_of(t)
            if tm.bit_count() != 3 or not g.is_clique(tm):
                out.append(f"{t} is not a triangle")
                continue
            if seen & tm:
                out.append(f"{t} overlaps an earlier triangle")
            seen |= tm
            cids.add(d.component_id(t[0], t[1]))
        if len(cids) > 1:
            out.append(f"triangles lie in components {sorted(cids)}")
        if self.component_id is not None and cids and cids != {self.component_id}:
            out.append(f"declared component {self.component_id} but found {sorted(cids)}")
        return out

    def is_valid(self, g: Graph, d: TriangleDecomposition | None = None) -> bool:
        return not self.problems(g, d)

    def to_json_dict(self) -> dict:
        return {
            "component": self.component_id,
            "size": self.size,
            "triangles": [list(t) for t in self.triangles],
        }


EMPTY_FACTOR = ConnectedTriangleFactor((), None)


# exact search ------------------------------------------------------------------


def _greedy_independent(adj: tuple[int, ...], mask: int) -> int:
    """Greedy independent set, repeatedly taking a vertex of least degree in what is left."""
    chosen = 0
    while mask:
        v = min(iter_bits(mask), key=lambda x: ((adj[x] & mask).bit_count(), x))
        chosen |= 1 << v
        mask &= ~(adj[v] | 1 << v)
    return chosen


class _PackingSearch:
    """Maximum vertex-disjoint triangle packing inside one triangle component."""

    def __init__(self, g: Graph, tris: list[Triangle]):
        self.adj = g.adjacency
        self.by_vertex: dict[int, list[tuple[int, int]]] = {}
        for a, b, c in tris:
            self.by_vertex.setdefault(a, []).append((b, c))
            self.by_vertex.setdefault(b, []).append((a, c))
            self.by_vertex.setdefault(c, []).append((a, b))
        self.best: list[Triangle] = []
        self.chosen: list[Triangle] = []
        self.limit = 0

    def _usable(self, rest: int) -> int:
        # vertices that still have a triangle inside ``rest``
        out = 0
        for v in iter_bits(rest):
            for b, c in self.by_vertex.get(v, ()):
                if rest >> b & 1 and rest >> c & 1:
                    out |= 1 << v
                    break
        return out

    def _bound(self, rest: int) -> int:
        indep = _greedy_independent(self.adj, rest)
        return min(rest.bit_count() // 3, (rest & ~indep).bit_count() // 2)

    def run(self, vertices: int) -> list[Triangle]:
        rest = self._usable(vertices)
        self.limit = rest.bit_count() // 3
        self._search(rest)
        return self.best

    def _search(self, rest: int) -> None:
        rest = self._usable(rest)
        if len(self.chosen) > len(self.best):
            self.best = list(self.chosen)
        if len(self.best) >= self.limit or not rest:
            return
        if len(self.chosen) + self._bound(rest) <= len(self.best):
            return
        v = lowest(rest)
        for b, c in self.by_vertex[v]:
            if rest >> b & 1 and rest >> c & 1:
                self.chosen.append(tuple(sorted((v, b, c))))
                self._search(rest & ~(1 << v | 1 << b | 1 << c))
                self.chosen.pop()
                if len(self.best) >= self.limit:
                    return
        self._search(rest & ~(1 << v))


def _triangles_by_component(g: Graph, d: TriangleDecomposition) -> list[list[Triangle]]:
    out: list[list[Triangle]] = [[] for _ in range(len(d))]
    for t in triangles(g):
        out[d.component_id(t[0], t[1])].append(t)
    return out


def ctf_exact(
    g: Graph, cap: int | None = None, d: TriangleDecomposition | None = None
) -> ConnectedTriangleFactor:
    """A maximum connected triangle factor, by branch and bound per component."""
    cap = exact_cap(FACTOR_CAP) if cap is None else cap
    if g.n > cap:
        raise TooLarge(f"n={g.n} exceeds the exact factor cap {cap}")
    d = decompose(g) if d is None else d
    per_comp = _triangles_by_component(g, d)
    order = sorted(range(len(d)), key=lambda c: (-d.size(c), c))
    best = EMPTY_FACTOR
    for cid in order:
        if 3 * (d.size(cid) // 3) <= best.size:
            continue
        found = _PackingSearch(g, per_comp[cid]).run(d.vertices_of[cid])
        if 3 * len(found) > best.size:
            best = ConnectedTriangleFactor.of(found, cid)
    return best


def ctf_value(g: Graph, cap: int | None = None) -> int:
    return ctf_exact(g, cap).size


# constructive builders -------------------------------------------------------------


def hall_extension_factor(
    g: Graph, m: Matching, apex_pool, d: TriangleDecomposition | None = None
) -> ConnectedTriangleFactor:
    """Turn matching edges into triangles using distinct apexes from ``apex_pool``.

    The auxiliary bipartite graph joins an edge uv of ``m`` to an apex w when
    uvw is a triangle; a maximum matching of it gives the factor.
    """
    pool = mask_of(apex_pool)
    if not m.edges:
        return EMPTY_FACTOR
    if pool & m.covered:
        raise Overlap(f"apex pool meets the matching at {sorted(iter_bits(pool & m.covered))}")
    d = decompose(g) if d is None else d
    cids = {d.component_id(*e) for e in m.edges}
    if NONE in cids or len(cids) != 1:
        raise NotTriangleConnected(f"matching edges lie in components {sorted(cids)}")
    left = [list(iter_bits(g.adj(u) & g.adj(v) & pool)) for u, v in m.edges]
    mates = bipartite_matching(left)
    tris = [(*m.edges[i], w) for w, i in mates.items()]
    return ConnectedTriangleFactor.of(tris, cids.pop())


def _edges_triangle_connected(g: Graph, d: TriangleDecomposition, mask: int) -> tuple[bool, object]:
    cid = None
    for e in g.edges(mask):
        c = d.component_id(*e)
        if c == NONE:
            return False, e
        if cid is None:
            cid = c
        elif c != cid:
            return False, e
    return True, cid


def greedy_connected_factor(g: Graph, u1, u2, delta1: int) -> ConnectedTriangleFactor:
    """Matching inside ``u1`` trimmed to the guaranteed size, then one fresh apex per edge.

    With s = 2*delta - n + |u2|, every pair in ``u1`` has at least s common
    neighbours outside ``u2``. The matching keeps min(|M'|, ceil(s/3)) edges:
    when the j-th edge picks its apex at most 3j - 3 of those neighbours are
    taken, so one is always free. The factor then covers at least
    ``min(3*floor(|u1|/2), 3*delta1, s)`` vertices. Each edge takes the least
    common neighbour not covered by the matching and not already an apex.
    """
    m1, m2 = mask_of(u1), mask_of(u2)
    for u in iter_bits(m1):
        hit = g.adj(u) & m2
        if hit:
            raise PreconditionViolated("u1 has a neighbour in u2", norm_edge(u, lowest(hit)))
    if m1 and g.min_degree(m1) < delta1:
        low = min(iter_bits(m1), key=lambda v: (g.degree(v, m1), v))
        raise PreconditionViolated(f"vertex {low} has degree {g.degree(low, m1)} < {delta1} in u1", low)
    d = decompose(g)
    ok, info = _edges_triangle_connected(g, d, m1)
    if not ok:
        raise PreconditionViolated("edges inside u1 are not all triangle connected", info)
    if not m1 or info is None:
        return EMPTY_FACTOR

    n, delta = g.n, g.min_degree()
    slack = 2 * delta - n + m2.bit_count()
    m = max_matching_mindeg(g, iter_bits(m1))
    keep = max(min(len(m.edges), -(-slack // 3)), 0)
    edges = m.edges[:keep]
    blocked = mask_of(v for e in edges for v in e)
    tris = []
    for u, v in edges:
        free = g.adj(u) & g.adj(v) & ~blocked
        if free:
            w = lowest(free)
            blocked |= 1 << w
            tris.append((u, v, w))
    return ConnectedTriangleFactor.of(tris, info)


def _greedy_packing(g: Graph, tris: list[Triangle], blocked: int = 0) -> list[Triangle]:
    # least-degree triangles first: they are the easiest to lose
    adj = g.adjacency
    ranked = sorted(tris, key=lambda t: (sum(adj[v].bit_count() for v in t), t))
    out = []
    for t in ranked:
        tm = mask_of(t)
        if not tm & blocked:
            out.append(t)
            blocked |= tm
    return out


def ctf_lower_bound(g: Graph, d: TriangleDecomposition | None = None) -> ConnectedTriangleFactor:
    """Best factor from two heuristics per component, for graphs above the exact cap.

    The first is a greedy disjoint packing. The second is a maximum matching on
    the component's exterior, extended through distinct apexes, then topped up
    greedily.
    """
    d = decompose(g) if d is None else d
    per_comp = _triangles_by_component(g, d)
    best = EMPTY_FACTOR
    for cid in range(len(d)):
        if 3 * (d.size(cid) // 3) <= best.size:
            continue
        tris = per_comp[cid]
        candidates = [_greedy_packing(g, tris)]
        ext = d.exterior_of[cid]
        comp_edges = [e for e in g.edges(ext) if d.component_id(*e) == cid]
        if comp_edges:
            sub = Graph.from_edge_list(g.n, comp_edges)
            m = max_matching_mindeg(sub, iter_bits(ext))
            pool = d.vertices_of[cid] & ~m.covered
            hall = hall_extension_factor(g, m, iter_bits(pool), d)
            used = mask_of(hall.vertices)
            candidates.append(list(hall.triangles) + _greedy_packing(g, tris, used))
        top = max(candidates, key=len)
        if 3 * len(top) > best.size:
            best = ConnectedTriangleFactor.of(top, cid)
    return best


# stability classification -------------------------------------------------------


def _as_fraction(x) -> Fraction:
    return Fraction(str(x)) if isinstance(x, float) else Fraction(x)


def fraction_text(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def maximal_independent_sets(g: Graph, within: int | None = None):
    """Maximal independent sets as masks (Bron-Kerbosch with pivoting on the complement)."""
    within = g.all_mask if within is None else within
    non = [(~g.adj(v) & within & ~(1 << v)) for v in range(g.n)]

    def bk(r: int, p: int, x: int):
        if not p and not x:
            yield r
            return
        pivot = max(iter_bits(p | x), key=lambda u: (non[u] & p).bit_count())
        for v in iter_bits(p & ~non[pivot]):
            yield from bk(r | 1 << v, p & non[v], x & non[v])
            p &= ~(1 << v)
            x |= 1 << v

    yield from bk(0, within, 0)


def component_sizes(g: Graph, mask: int) -> list[int]:
    sizes = []
    while mask:
        seen = frontier = mask & -mask
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj(v)
            frontier = nxt & mask & ~seen
            seen |= frontier
        sizes.append(seen.bit_count())
        mask &= ~seen
    return sorted(sizes, reverse=True)


@dataclass
class StabilityWitness:
    outcome: str  # "S1", "S2", "S3" or "INCONCLUSIVE"
    ctf: int
    ctf_exact: bool
    eta: Fraction
    factor: ConnectedTriangleFactor | None = None
    separator: frozenset[int] | None = None
    component_sizes: list[int] = field(default_factory=list)
    k4_per_component: list[tuple[int, int, int, int] | None] = field(default_factory=list)
    thresholds: dict[str, int] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "component_sizes": self.component_sizes,
            "ctf": self.ctf,
            "ctf_exact": self.ctf_exact,
            "eta": fraction_text(self.eta),
            "k4_per_component": [list(q) if q else None for q in self.k4_per_component],
            "outcome": self.outcome,
            "separator": sorted(self.separator) if self.separator is not None else [],
            "thresholds": self.thresholds,
            "triangles": [list(t) for t in self.factor.triangles] if self.factor else [],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _find_separator(g: Graph, need: int, max_comp: int, exact: bool) -> tuple[int, list[int]] | None:
    if exact:
        found = sorted(
            maximal_independent_sets(g),
            key=lambda s: (-s.bit_count(), sorted(iter_bits(s))),
        )
    else:
        found = [_greedy_independent(g.adjacency, g.all_mask)]
    for s in found:
        if s.bit_count() < need:
            break
        sizes = component_sizes(g, g.all_mask & ~s)
        if not sizes or sizes[0] <= max_comp:
            return s, sizes
    return None


def stability_witness(g: Graph, eta, cap: int | None = None) -> StabilityWitness:
    """Classify ``g`` into the outcomes of the stability dichotomy.

    S1: a connected triangle factor on at least 3(2δ-n) vertices.
    S2: one on at least min(sqp(n, δ+⌈ηn⌉), ⌊11n/20⌋) vertices.
    S3: an independent set of size at least n-δ-⌈11ηn⌉ whose removal leaves
    components of at most ⌊19(2δ-n)/10⌋ vertices.
    INCONCLUSIVE when none is certified, which is expected at small orders.
    """
    n = g.n
    if n == 0:
        raise HypothesisUnmet("empty graph")
    delta = g.min_degree()
    if 2 * delta <= n:
        raise HypothesisUnmet(f"minimum degree {delta} is not above n/2 = {n / 2}")
    eta = _as_fraction(eta)
    cap = exact_cap(FACTOR_CAP) if cap is None else cap
    exact = n <= cap
    d = decompose(g)
    factor = ctf_exact(g, cap, d) if exact else ctf_lower_bound(g, d)

    s1 = 3 * (2 * delta - n)
    shifted = delta + math.ceil(eta * n)
    s2 = min(sqp_clamped(n, min(shifted, n - 1)), (11 * n) // 20)
    need = n - delta - math.ceil(11 * eta * n)
    max_comp = (19 * (2 * delta - n)) // 10
    th = {"s1": s1, "s2": s2, "s3_min_separator": need, "s3_max_component": max_comp}
    k4 = [component_contains_k4(g, d, c) for c in range(len(d))]
    w = StabilityWitness("INCONCLUSIVE", factor.size, exact, eta, thresholds=th)
    if factor.size >= s1:
        w.outcome, w.factor = "S1", factor
        return w
    w.k4_per_component = k4
    if factor.size >= s2:
        w.outcome, w.factor = "S2", factor
        return w
    sep = _find_separator(g, need, max_comp, exact)
    if sep is not None:
        mask, sizes = sep
        w.outcome = "S3"
        w.separator = frozenset(iter_bits(mask))
        w.component_sizes = sizes
    return w
