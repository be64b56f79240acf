"""Witness validation and exact searches for squared paths and cycles.

The searches are depth-first over vertex sequences. The next vertex must lie
in the common neighbourhood of the last two. Two prunings keep them practical:

* twin reduction: if two unused vertices have the same neighbourhood apart
  from each other, swapping them is an automorphism fixing the prefix, so only
  the smaller one is tried;
* reachability: the remaining vertices of the sequence all lie in the part of
  the unused graph reachable from the current candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..errors import TooLarge
from ..graph import Graph, iter_bits, lowest, norm_edge
from ..limits import EMBEDDING_CAP, exact_cap


class Kind(str, Enum):
    SQUARED_PATH = "squared_path"
    SQUARED_CYCLE = "squared_cycle"


@dataclass(frozen=True)
class EmbeddingWitness:
    kind: Kind
    sequence: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sequence)

    def to_json_dict(self) -> dict:
        return {"kind": self.kind.value, "vertices": list(self.sequence)}


def path_witness(seq) -> EmbeddingWitness:
    return EmbeddingWitness(Kind.SQUARED_PATH, tuple(seq))


def cycle_witness(seq) -> EmbeddingWitness:
    return EmbeddingWitness(Kind.SQUARED_CYCLE, tuple(seq))


def is_squared_path(g: Graph, seq) -> bool:
    seq = list(seq)
    if not seq or len(set(seq)) != len(seq) or not all(0 <= v < g.n for v in seq):
        return False
    for i in range(len(seq) - 1):
        if not g.has_edge(seq[i], seq[i + 1]):
            return False
        if i + 2 < len(seq) and not g.has_edge(seq[i], seq[i + 2]):
            return False
    return True


def is_squared_cycle(g: Graph, seq) -> bool:
    seq = list(seq)
    ell = len(seq)
    if ell < 3 or len(set(seq)) != ell or not all(0 <= v < g.n for v in seq):
        return False
    return all(
        g.has_edge(seq[i], seq[(i + 1) % ell]) and g.has_edge(seq[i], seq[(i + 2) % ell])
        for i in range(ell)
    )


def validate_witness(g: Graph, w: EmbeddingWitness) -> bool:
    if w.kind == Kind.SQUARED_PATH:
        return is_squared_path(g, w.sequence)
    return is_squared_cycle(g, w.sequence)


# search machinery ---------------------------------------------------------------


def smaller_twins(g: Graph) -> list[int]:
    """Per vertex, the mask of smaller vertices with the same neighbourhood up to each other."""
    adj = g.adjacency
    out = [0] * g.n
    for v in range(g.n):
        for u in range(v):
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                out[v] |= 1 << u
    return out


def _reach(adj: tuple[int, ...], frontier: int, avail: int) -> int:
    seen = frontier
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & avail & ~seen
        seen |= frontier
    return seen


def _check_cap(g: Graph, cap: int | None) -> None:
    cap = exact_cap(EMBEDDING_CAP) if cap is None else cap
    if g.n > cap:
        raise TooLarge(f"n={g.n} exceeds the exact-search cap {cap}")


class _Search:
    """Depth-first enumeration of squared paths with optional closing checks."""

    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adjacency
        self.twins = smaller_twins(g)

    def _choices(self, cands: int, avail: int) -> list[int]:
        return [v for v in iter_bits(cands) if not self.twins[v] & avail]

    def _roots(self, avail: int) -> list[tuple[int, int]]:
        out = []
        for a in self._choices(avail, avail):
            rest = avail & ~(1 << a)
            out.extend((a, b) for b in self._choices(self.adj[a] & rest, rest))
        return out

    def path_of_length(self, ell: int) -> list[int] | None:
        n = self.g.n
        if ell <= 0 or ell > n:
            return None
        if ell == 1:
            return [0]
        if ell == 2:
            edges = self.g.edges()
            return list(edges[0]) if edges else None
        full = self.g.all_mask
        for a, b in self._roots(full):
            seq = [a, b]
            if self._extend(seq, full & ~(1 << a | 1 << b), ell, None):
                return seq
        return None

    def cycle_of_length(self, ell: int) -> list[int] | None:
        if ell < 3 or ell > self.g.n:
            return None
        adj = self.adj
        for s in range(self.g.n):
            # the least vertex of the cycle is placed first
            avail = self.g.all_mask >> (s + 1) << (s + 1)
            for b in self._choices(adj[s] & avail, avail):
                seq = [s, b]
                if self._extend(seq, avail & ~(1 << b), ell, s):
                    return seq
        return None

    def _extend(self, seq: list[int], avail: int, ell: int, start: int | None) -> bool:
        depth = len(seq)
        if depth == ell:
            if start is None:
                return True
            adj = self.adj
            return bool(adj[seq[-1]] >> start & 1 and adj[seq[-1]] >> seq[1] & 1
                        and adj[seq[-2]] >> start & 1)
        adj = self.adj
        cands = adj[seq[-1]] & adj[seq[-2]] & avail
        if start is not None:
            if depth == ell - 1:
                cands &= adj[start] & adj[seq[1]]
            elif depth == ell - 2:
                cands &= adj[start]
        if not cands:
            return False
        if depth + _reach(adj, cands, avail).bit_count() < ell:
            return False
        for v in self._choices(cands, avail):
            seq.append(v)
            if self._extend(seq, avail & ~(1 << v), ell, start):
                return True
            seq.pop()
        return False

    def longest(self, cycle: bool) -> list[int]:
        """A longest squared path (or cycle); empty list when there is none."""
        n = self.g.n
        adj = self.adj
        best: list[int] = []
        if not cycle:
            if n == 0:
                return []
            best = [0]
            edges = self.g.edges()
            if edges:
                best = list(edges[0])
        roots: list[tuple[int, int, int]] = []
        if cycle:
            for s in range(n):
                avail = self.g.all_mask >> (s + 1) << (s + 1)
                roots.extend((s, b, avail) for b in self._choices(adj[s] & avail, avail))
        else:
            roots = [(a, b, self.g.all_mask) for a, b in self._roots(self.g.all_mask)]
        for a, b, avail in roots:
            if len(best) == n:
                break
            seq = [a, b]
            best = self._longest_from(seq, avail & ~(1 << a | 1 << b), cycle, best)
        return best

    def _longest_from(self, seq: list[int], avail: int, cycle: bool, best: list[int]) -> list[int]:
        adj = self.adj
        depth = len(seq)
        if depth > len(best) and depth >= 3:
            if not cycle:
                best = list(seq)
            elif (adj[seq[-1]] >> seq[0] & 1 and adj[seq[-1]] >> seq[1] & 1
                  and adj[seq[-2]] >> seq[0] & 1):
                best = list(seq)
        if len(best) == self.g.n:
            return best
        cands = adj[seq[-1]] & adj[seq[-2]] & avail
        if not cands:
            return best
        if depth + _reach(adj, cands, avail).bit_count() <= len(best):
            return best
        for v in self._choices(cands, avail):
            seq.append(v)
            best = self._longest_from(seq, avail & ~(1 << v), cycle, best)
            seq.pop()
            if len(best) == self.g.n:
                break
        return best


def find_squared_path(g: Graph, ell: int, cap: int | None = None) -> EmbeddingWitness | None:
    """A squared path on exactly ``ell`` vertices, or None if there is none."""
    _check_cap(g, cap)
    seq = _Search(g).path_of_length(ell)
    return None if seq is None else path_witness(seq)


def find_squared_cycle(g: Graph, ell: int, cap: int | None = None) -> EmbeddingWitness | None:
    """A squared cycle on exactly ``ell`` vertices, or None if there is none."""
    _check_cap(g, cap)
    seq = _Search(g).cycle_of_length(ell)
    return None if seq is None else cycle_witness(seq)


def longest_squared_path(g: Graph, cap: int | None = None) -> EmbeddingWitness | None:
    _check_cap(g, cap)
    seq = _Search(g).longest(cycle=False)
    return path_witness(seq) if seq else None


def longest_squared_cycle(g: Graph, cap: int | None = None) -> EmbeddingWitness | None:
    _check_cap(g, cap)
    seq = _Search(g).longest(cycle=True)
    return cycle_witness(seq) if seq else None


# special shapes -------------------------------------------------------------------


def find_octahedron(g: Graph) -> EmbeddingWitness | None:
    """A copy of K_{2,2,2}, which is the squared six-cycle, as a cycle witness.

    Works at any order: it extends each triangle (a, b, c) by a' ~ b, c, then
    b' ~ a, c, a', then c' ~ a, b, a', b'.
    """
    adj = g.adjacency
    for a, b in g.edges():
        for c in iter_bits(adj[a] & adj[b] >> (b + 1) << (b + 1)):
            for a2 in iter_bits(adj[b] & adj[c] & ~(1 << a)):
                for b2 in iter_bits(adj[a] & adj[c] & adj[a2] & ~(1 << b)):
                    rest = adj[a] & adj[b] & adj[a2] & adj[b2] & ~(1 << c)
                    if rest:
                        return cycle_witness((a, b, c, a2, b2, lowest(rest)))
    return None


def even_cycle_through(g: Graph, edge: tuple[int, int]) -> list[int] | None:
    """An even cycle using ``edge``, as a vertex sequence starting at its endpoints."""
    u, v = norm_edge(*edge)
    adj = g.adjacency
    path = [u]

    def dfs(x: int, used: int) -> bool:
        for y in iter_bits(adj[x] & ~used):
            if y == v:
                # the path u..x plus xv has len(path) edges; closing with vu adds one
                if len(path) >= 3 and len(path) % 2 == 1:
                    path.append(v)
                    return True
                continue
            path.append(y)
            if dfs(y, used | 1 << y):
                return True
            path.pop()
        return False

    # the first step must avoid the edge itself
    for y in iter_bits(adj[u] & ~(1 << v)):
        path.append(y)
        if dfs(y, 1 << u | 1 << y):
            return path
        path.pop()
    return None


def longest_cycle(g: Graph, parity: int | None = None, cap: int | None = None) -> list[int]:
    """A longest cycle (optionally restricted to lengths of the given parity)."""
    _check_cap(g, cap)
    adj = g.adjacency
    best: list[int] = []

    def dfs(path: list[int], used: int, avail: int) -> None:
        nonlocal best
        x = path[-1]
        if len(path) >= 3 and adj[x] >> path[0] & 1 and len(path) > len(best):
            if parity is None or len(path) % 2 == parity:
                best = list(path)
        nxt = adj[x] & avail & ~used
        if len(path) + _reach(adj, nxt, avail & ~used).bit_count() <= len(best):
            return
        for y in iter_bits(nxt):
            path.append(y)
            dfs(path, used | 1 << y, avail)
            path.pop()

    for s in range(g.n):
        avail = g.all_mask >> (s + 1) << (s + 1)
        if (avail | 1 << s).bit_count() <= len(best):
            break
        dfs([s], 1 << s, avail)
    return best
