"""Maximum matchings: Edmonds' blossom algorithm and bipartite augmenting paths."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import Overlap
from .graph import Edge, Graph, iter_bits, mask_of, norm_edge


@dataclass(frozen=True)
class Matching:
    edges: tuple[Edge, ...]

    @classmethod
    def of(cls, edges: Iterable[Edge]) -> "Matching":
        return cls(tuple(sorted(norm_edge(*e) for e in edges)))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def covered(self) -> int:
        return mask_of(v for e in self.edges for v in e)

    def covered_count(self) -> int:
        return 2 * len(self.edges)

    def is_valid(self, g: Graph) -> bool:
        seen = 0
        for u, v in self.edges:
            if not g.has_edge(u, v) or (seen >> u & 1) or (seen >> v & 1):
                return False
            seen |= 1 << u | 1 << v
        return True


def _blossom_matching(n: int, nbrs: list[list[int]], active: list[int]) -> list[int]:
    """Maximum-cardinality matching of a general graph; returns the mate array."""
    mate = [-1] * n
    # a greedy start keeps the number of augmentation searches small
    for v in active:
        if mate[v] == -1:
            for w in nbrs[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break

    for root in active:
        if mate[root] != -1:
            continue
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            on_path = [False] * n
            while True:
                a = base[a]
                on_path[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if on_path[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        found = -1
        while queue and found == -1:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in active:
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        found = to
                        break
                    used[mate[to]] = True
                    queue.append(mate[to])
        v = found
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
    return mate


def maximum_matching(g: Graph, within: int | None = None) -> Matching:
    """Maximum matching of ``g[within]`` (whole graph when ``within`` is None)."""
    within = g.all_mask if within is None else within
    active = list(iter_bits(within))
    nbrs = [[] for _ in range(g.n)]
    for v in active:
        nbrs[v] = list(iter_bits(g.adj(v) & within))
    mate = _blossom_matching(g.n, nbrs, active)
    return Matching.of((v, mate[v]) for v in active if mate[v] > v)


def max_matching_mindeg(g: Graph, restrict: Iterable[int] | None = None) -> Matching:
    """Maximum matching inside ``g[restrict]``.

    It covers at least ``2*min(delta, floor(|restrict|/2))`` vertices, where
    delta is the minimum degree of the induced subgraph.
    """
    within = None if restrict is None else mask_of(restrict)
    return maximum_matching(g, within)


def bipartite_matching(left_adj: list[list[int]]) -> dict[int, int]:
    """Kuhn's augmenting-path matching; returns right vertex -> matched left index.

    Left vertices are tried in index order and their neighbours in list order,
    so the result is deterministic.
    """
    match_right: dict[int, int] = {}

    def try_augment(u: int, seen: set[int]) -> bool:
        for w in left_adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in match_right or try_augment(match_right[w], seen):
                match_right[w] = u
                return True
        return False

    for u in range(len(left_adj)):
        try_augment(u, set())
    return match_right


def max_matching_bipartite(g: Graph, a: Iterable[int], b: Iterable[int]) -> Matching:
    """Maximum matching using only edges between the disjoint sets ``a`` and ``b``."""
    a_mask, b_mask = mask_of(a), mask_of(b)
    if a_mask & b_mask:
        raise Overlap(f"sides share vertices {sorted(iter_bits(a_mask & b_mask))}")
    left = list(iter_bits(a_mask))
    match_b = bipartite_matching([list(iter_bits(g.adj(u) & b_mask)) for u in left])
    return Matching.of((left[i], w) for w, i in match_b.items())


def min_cross_degree(g: Graph, side: int, other: int) -> int:
    if not side:
        return 0
    return min((g.adj(v) & other).bit_count() for v in iter_bits(side))
