"""Deterministic constructors for the extremal graph families.

Every constructor returns a :class:`LabeledConstruction`: the graph, one part
label per vertex and a list of property claims. Claims are only statements;
:func:`verify_claims` checks them against the graph.

Vertex numbering is canonical: independent or interior parts come first, then
the cliques or exterior parts in index order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, NotPrime, TooSmall
from .graph import Graph, iter_bits, mask_of
from .thresholds import rc, rp


@dataclass(frozen=True)
class Claim:
    name: str
    arg: object = None

    def __str__(self) -> str:
        return self.name if self.arg is None else f"{self.name}({self.arg})"


@dataclass
class LabeledConstruction:
    graph: Graph
    part_labels: list[str]
    claims: list[Claim] = field(default_factory=list)
    params: dict = field(default_factory=dict)

    def part(self, label: str) -> frozenset[int]:
        return frozenset(v for v, lab in enumerate(self.part_labels) if lab == label)

    def part_mask(self, label: str) -> int:
        return mask_of(self.part(label))

    @property
    def labels(self) -> list[str]:
        """Distinct labels in order of first appearance."""
        return list(dict.fromkeys(self.part_labels))

    def labels_text(self) -> str:
        return "".join(f"{v} {lab}\n" for v, lab in enumerate(self.part_labels))


def _check_dense(n: int, delta: int) -> None:
    if not (2 * delta > n and delta <= n - 1):
        raise DomainError(f"need n/2 < delta <= n-1, got n={n}, delta={delta}")


def _balanced_sizes(total: int, parts: int) -> list[int]:
    """Sizes of an almost-equal partition, smaller parts first."""
    small, extra = divmod(total, parts)
    return [small] * (parts - extra) + [small + 1] * extra


class _Builder:
    def __init__(self) -> None:
        self.labels: list[str] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, count: int, label: str) -> list[int]:
        start = len(self.labels)
        self.labels.extend([label] * count)
        return list(range(start, start + count))

    def clique(self, vs: list[int]) -> None:
        self.edges.extend((a, b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def join(self, xs: list[int], ys: list[int]) -> None:
        self.edges.extend((a, b) for a in xs for b in ys)

    def build(self, claims: list[Claim], **params) -> LabeledConstruction:
        g = Graph.from_edge_list(len(self.labels), self.edges)
        return LabeledConstruction(g, self.labels, claims, params)


def make_gp(n: int, delta: int) -> LabeledConstruction:
    """Independent set Y of size n-delta joined to rp(n, delta) disjoint cliques."""
    _check_dense(n, delta)
    r = rp(n, delta)
    b = _Builder()
    y = b.add(n - delta, "Y")
    for i, size in enumerate(_balanced_sizes(delta, r), 1):
        x = b.add(size, f"X{i}")
        b.clique(x)
        b.join(y, x)
    claims = [
        Claim("ORDER", n),
        Claim("MIN_DEGREE", delta),
        Claim("PART_INDEPENDENT", "Y"),
        Claim("TRIANGLE_COMPONENTS", r),
    ]
    if r > 1:
        # with a single clique there is one component and no interior
        claims.append(Claim("INTERIOR_EQUALS", "Y"))
    return b.build(claims, family="gp", n=n, delta=delta, r=r)


def make_gc(n: int, delta: int) -> LabeledConstruction:
    """Cycle variant: rc(n, delta) cliques of size ceil(delta/r) with merged vertices.

    With k = r*ceil(delta/r) - delta, the least vertex of each of the first
    k+1 cliques is identified into one vertex V. That is k+1 vertices
    collapsing to one, which brings the order down from n+k to exactly n.
    """
    _check_dense(n, delta)
    r = rc(n, delta)
    s = -(-delta // r)
    k = r * s - delta
    b = _Builder()
    y = b.add(n - delta, "Y")
    merged = b.add(1, "V") if k else []
    cliques = []
    for i in range(1, r + 1):
        rest = b.add(s - 1 if i <= k + 1 and k else s, f"X{i}")
        cliques.append((merged if i <= k + 1 else []) + rest)
    for x in cliques:
        b.clique(x)
        b.join(y, [v for v in x if v not in merged])
    if merged:
        b.join(y, merged)
    claims = [
        Claim("ORDER", n),
        Claim("MIN_DEGREE", delta),
        Claim("PART_INDEPENDENT", "Y"),
    ]
    return b.build(claims, family="gc", n=n, delta=delta, r=r, merged=k + 1 if k else 0)


def make_tripartite_extremal(n: int, delta: int) -> LabeledConstruction:
    """Complete tripartite graph with parts of sizes n-delta, n-delta, 2*delta-n.

    The minimum degree equals delta only while 2(n-delta) >= delta, so
    n/2 < delta <= 2n/3 is required.
    """
    if not (2 * delta > n and 3 * delta <= 2 * n):
        raise DomainError(f"need n/2 < delta <= 2n/3, got n={n}, delta={delta}")
    b = _Builder()
    parts = [b.add(n - delta, "A"), b.add(n - delta, "B"), b.add(2 * delta - n, "C")]
    for i in range(3):
        for j in range(i + 1, 3):
            b.join(parts[i], parts[j])
    claims = [
        Claim("ORDER", n),
        Claim("MIN_DEGREE", delta),
        Claim("PART_INDEPENDENT", "A"),
        Claim("PART_INDEPENDENT", "B"),
        Claim("PART_INDEPENDENT", "C"),
    ]
    return b.build(claims, family="tripartite", n=n, delta=delta)


def make_triangle_free_block(t: int) -> LabeledConstruction:
    """Three copies of K_{t,t} plus three disjoint bridges inside the left classes.

    Copy c occupies vertices 2tc .. 2tc+2t-1, its left class first. The bridges
    join L0[0]-L1[0], L0[1]-L2[0] and L1[1]-L2[1].
    """
    if t < 2:
        raise DomainError(f"need t >= 2 for three disjoint bridges, got t={t}")
    b = _Builder()
    left = []
    for c in range(3):
        lc = b.add(t, f"L{c}")
        rc_ = b.add(t, f"R{c}")
        b.join(lc, rc_)
        left.append(lc)
    b.edges.extend([(left[0][0], left[1][0]), (left[0][1], left[2][0]), (left[1][1], left[2][1])])
    claims = [
        Claim("ORDER", 6 * t),
        Claim("TRIANGLE_FREE"),
        Claim("NO_EVEN_CYCLE_LEAVING_COPY"),
    ]
    return b.build(claims, family="tfblock", t=t)


def make_gp_k(k: int, n: int, delta: int) -> LabeledConstruction:
    """Higher-power analogue: balanced (k-1)-partite interior joined to exterior cliques.

    The interior has l = (k-1)(n-delta) vertices in parts of size n-delta; the
    exterior splits the other n-l vertices into floor((n-l)/(delta-l+1))
    almost-equal cliques.
    """
    if k < 2:
        raise DomainError(f"need k >= 2, got {k}")
    if not ((k - 1) * n < k * delta and delta <= n - 1):
        raise DomainError(f"need (k-1)n/k < delta <= n-1, got k={k}, n={n}, delta={delta}")
    ell = (k - 1) * (n - delta)
    if ell >= n or delta - ell + 1 < 1:
        raise DomainError(f"interior size {ell} incompatible with n={n}, delta={delta}")
    count = (n - ell) // (delta - ell + 1)
    b = _Builder()
    interior_parts = [b.add(n - delta, f"I{i}") for i in range(1, k)]
    interior = [v for p in interior_parts for v in p]
    for i, p in enumerate(interior_parts):
        for q in interior_parts[i + 1:]:
            b.join(p, q)
    for i, size in enumerate(_balanced_sizes(n - ell, count), 1):
        x = b.add(size, f"X{i}")
        b.clique(x)
        b.join(interior, x)
    claims = [Claim("ORDER", n), Claim("MIN_DEGREE", delta)]
    claims.extend(Claim("PART_INDEPENDENT", f"I{i}") for i in range(1, k))
    return b.build(claims, family="gpk", k=k, n=n, delta=delta, cliques=count)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % p for p in range(2, math.isqrt(q) + 1))


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Points of PG(2, q) as triples whose first nonzero coordinate is 1, sorted."""
    pts = [(1, a, b) for a in range(q) for b in range(q)]
    pts += [(0, 1, b) for b in range(q)]
    pts.append((0, 0, 1))
    return sorted(pts)


def polarity_graph(q: int) -> Graph:
    """Orthogonality graph of PG(2, q) with the loops at absolute points dropped."""
    pts = projective_points(q)
    edges = []
    for i, u in enumerate(pts):
        for j in range(i + 1, len(pts)):
            v = pts[j]
            if (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % q == 0:
                edges.append((i, j))
    return Graph.from_edge_list(len(pts), edges)


def make_no_c6_counterexample(q: int, independent_size: int | None = None) -> LabeledConstruction:
    """Polarity graph F of PG(2, q) completely joined to an independent set I.

    By default ``|I| = m - floor(sqrt(m)/2)`` with ``m = q^2+q+1``.
    """
    if q < 3:
        raise TooSmall(f"need q >= 3, got {q}")
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    f = polarity_graph(q)
    m = f.n
    size = m - math.isqrt(m) // 2 if independent_size is None else independent_size
    if size < 0:
        raise DomainError("independent set size must be non-negative")
    b = _Builder()
    fv = b.add(m, "F")
    iv = b.add(size, "I")
    b.edges.extend(f.edges())
    b.join(fv, iv)
    n = m + size
    claims = [
        Claim("ORDER", n),
        Claim("PART_INDEPENDENT", "I"),
        Claim("C4_FREE", "F"),
        Claim("MIN_DEGREE_ABOVE_HALF_PLUS_SQRT_OVER_5"),
        Claim("NO_SQUARED_CYCLE", 6),
    ]
    return b.build(claims, family="noc6", q=q, m=m, independent=size)


# claim verification -----------------------------------------------------------


def has_c4(g: Graph, within: int | None = None) -> bool:
    """True iff some pair of vertices has two common neighbours inside ``within``."""
    within = g.all_mask if within is None else within
    vs = list(iter_bits(within))
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if (g.adj(u) & g.adj(v) & within).bit_count() >= 2:
                return True
    return False


def degree_above_half_plus_sqrt_over_5(n: int, delta: int) -> bool:
    # delta > n/2 + sqrt(n)/5  <=>  10*delta - 5n > 2*sqrt(n)
    lhs = 10 * delta - 5 * n
    return lhs > 0 and lhs * lhs > 4 * n


def _check_claim(c: LabeledConstruction, claim: Claim) -> bool:
    g = c.graph
    name = claim.name
    if name == "ORDER":
        return g.n == claim.arg
    if name == "MIN_DEGREE":
        return g.min_degree() == claim.arg
    if name == "PART_INDEPENDENT":
        return g.is_independent(c.part_mask(claim.arg))
    if name == "TRIANGLE_COMPONENTS":
        from .triangles import decompose

        return len(decompose(g)) == claim.arg
    if name == "INTERIOR_EQUALS":
        from .triangles import decompose

        return decompose(g).interior == c.part_mask(claim.arg)
    if name == "TRIANGLE_FREE":
        from .triangles import triangles

        return not triangles(g)
    if name == "C4_FREE":
        return not has_c4(g, c.part_mask(claim.arg))
    if name == "MIN_DEGREE_ABOVE_HALF_PLUS_SQRT_OVER_5":
        return degree_above_half_plus_sqrt_over_5(g.n, g.min_degree())
    if name == "NO_SQUARED_CYCLE":
        from .embeddings.exact import find_octahedron, find_squared_cycle

        if claim.arg == 6:
            return find_octahedron(g) is None
        return find_squared_cycle(g, claim.arg) is None
    if name == "NO_EVEN_CYCLE_LEAVING_COPY":
        from .embeddings.exact import even_cycle_through

        bridges = [
            (u, v) for u, v in g.edges() if c.part_labels[u][1:] != c.part_labels[v][1:]
        ]
        return all(even_cycle_through(g, e) is None for e in bridges)
    raise ValueError(f"unknown claim {name!r}")


def verify_claims(c: LabeledConstruction, skip: tuple[str, ...] = ()) -> dict[str, bool]:
    """Check every claim; keys are the claims' string forms."""
    return {str(cl): _check_claim(c, cl) for cl in c.claims if cl.name not in skip}


GENERATORS = {
    "gp": (make_gp, ("n", "delta")),
    "gc": (make_gc, ("n", "delta")),
    "tripartite": (make_tripartite_extremal, ("n", "delta")),
    "tfblock": (make_triangle_free_block, ("t",)),
    "gpk": (make_gp_k, ("k", "n", "delta")),
    "noc6": (make_no_c6_counterexample, ("q",)),
}


def generate(family: str, *params: int) -> LabeledConstruction:
    try:
        fn, names = GENERATORS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(GENERATORS)}") from None
    if len(params) != len(names):
        raise ValueError(f"{family} takes parameters {' '.join(names)}")
    return fn(*params)
