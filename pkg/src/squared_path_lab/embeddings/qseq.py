"""Vertex sequences that follow a triangle walk, and their lengths modulo three.

Starting from an oriented first edge (a, b), each later edge E of the walk
shares one vertex with the current last pair (a, b):

* E = {a, c}: append (c, a);
* E = {b, c}: append (c, a, b, c).

Every entry is then adjacent to its two predecessors and the last two
entries always orient the current edge.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..errors import BadOrientation, NotAWalk
from ..graph import Graph, norm_edge
from ..triangles import TriangleWalk, make_walk


@dataclass(frozen=True)
class QSequence:
    clusters: tuple[int, ...]
    walk: TriangleWalk
    orientation: tuple[int, int]
    ends: tuple[int, ...]  # sequence length after each walk edge

    def __len__(self) -> int:
        return len(self.clusters)

    def orientation_at(self, i: int) -> tuple[int, int]:
        """How the sequence orients walk edge ``i`` (0-based)."""
        end = self.ends[i]
        return self.clusters[end - 2], self.clusters[end - 1]

    def follows_adjacency(self, g: Graph) -> bool:
        s = self.clusters
        return all(g.has_edge(s[i], s[i - 1]) and g.has_edge(s[i], s[i - 2]) for i in range(2, len(s)))


def _as_walk(g: Graph, w) -> TriangleWalk:
    if isinstance(w, TriangleWalk):
        if not w.verify(g) or any(e == f for e, f in zip(w.edges, w.edges[1:])):
            raise NotAWalk("walk does not verify against the graph")
        return w
    return make_walk(g, list(w))


def q_sequence(g: Graph, w, orientation: tuple[int, int]) -> QSequence:
    walk = _as_walk(g, w)
    if not walk.edges:
        raise NotAWalk("empty walk")
    a, b = orientation
    if norm_edge(a, b) != walk.edges[0]:
        raise BadOrientation(f"{orientation} does not orient the first edge {walk.edges[0]}")
    seq = [a, b]
    ends = [2]
    for e in walk.edges[1:]:
        if a in e:
            c = e[0] if e[1] == a else e[1]
            seq.extend((c, a))
            a, b = c, a
        else:
            c = e[0] if e[1] == b else e[1]
            seq.extend((c, a, b, c))
            a, b = b, c
        ends.append(len(seq))
    out = QSequence(tuple(seq), walk, (orientation[0], orientation[1]), tuple(ends))
    if not out.follows_adjacency(g):
        raise NotAWalk("sequence breaks adjacency; the walk is not a triangle walk")
    return out


def parity_sum(g: Graph, w, edge: tuple[int, int]) -> int:
    """|Q(W, uv)| + |Q(W, vu)| modulo 3, which is 1 for walks with at least two edges."""
    u, v = edge
    return (len(q_sequence(g, w, (u, v))) + len(q_sequence(g, w, (v, u)))) % 3


@dataclass
class ConcatenationReport:
    forward_length: int
    piece_lengths: list[int]  # |Q(W_i, reversed orientation)|
    f: list[int]  # f_1 .. f_r
    total_mod3: int
    reverse_is_concatenation: bool

    @property
    def holds(self) -> bool:
        return self.total_mod3 == 0 and self.reverse_is_concatenation


def concatenation_identity(
    g: Graph,
    walks: Sequence[Sequence[tuple[int, int]]],
    orientation: tuple[int, int],
    first_gap: int = 1,
    last_gap: int = 1,
) -> ConcatenationReport:
    """Evaluate the mod-3 identity for the concatenation W' = W_1 ... W_{r-1}.

    Each W_i joins triangle T_i to T_{i+1}. The forward run on W' fixes an
    orientation (u_i, v_i) of each first edge. The reverse run must split as
    Q(W_1, v_1u_1), Q~_2, Q(W_2, v_2u_2), ..., Q(W_{r-1}, v_{r-1}u_{r-1}),
    where each Q~_i is the transition part, of size 0 or 2. With
    f_i = |Q~_i| mod 3 and f_1, f_r the sizes of T_1 and T_r minus an edge
    (one vertex each by default), the sum
    |Q(W', u_1v_1)| + sum_i (|Q(W_i, v_iu_i)| + f_i) + f_r is 0 mod 3.
    """
    walks = [[norm_edge(*e) for e in wi] for wi in walks]
    joined = [e for wi in walks for e in wi]
    fwd = q_sequence(g, joined, orientation)
    rev = q_sequence(g, joined, (orientation[1], orientation[0]))
    starts = []
    pos = 0
    for wi in walks:
        starts.append(pos)
        pos += len(wi)

    pieces = []
    f = [first_gap]
    rebuilt: list[int] = []
    for i, (wi, s) in enumerate(zip(walks, starts)):
        u, v = fwd.orientation_at(s)
        piece = q_sequence(g, wi, (v, u))
        pieces.append(len(piece))
        if i > 0:
            # reverse run: entries after the previous walk's end and before this piece's first pair
            prev_end = rev.ends[s - 1]
            gap = rev.ends[s] - prev_end - 2
            f.append(gap % 3)
            rebuilt.extend(rev.clusters[prev_end: prev_end + gap])
        rebuilt.extend(piece.clusters)
    f.append(last_gap)
    total = (len(fwd) + sum(pieces) + sum(f)) % 3
    return ConcatenationReport(len(fwd), pieces, f, total, tuple(rebuilt) == rev.clusters)


PADDING = {0: "ABC", 1: "ABCDABC", 2: "ABCDABCDABC"}


def k4_padding(residue: int) -> str:
    """Pattern over a K4 ABCD of length 3, 7 or 11 that starts and ends with AB..BC."""
    if residue not in PADDING:
        raise ValueError(f"residue must be 0, 1 or 2, got {residue}")
    return PADDING[residue]


def realize_padding(residue: int, k4: Sequence[int]) -> list[int]:
    """The padding pattern with A, B, C, D replaced by the given K4 vertices."""
    names = dict(zip("ABCD", k4))
    return [names[ch] for ch in k4_padding(residue)]
