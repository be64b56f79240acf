"""Squaring a path or an even cycle by interleaving connector vertices.

For a path T = (t1, ..., t_2l) the quadruples are Q1 = (t1, t2),
Qi = (t_{2i-3}, ..., t_{2i}) for 1 < i <= l and Q_{l+1} = (t_{2l-1}, t_2l).
Each Qi receives its own connector qi from W adjacent to all of Qi, which
yields the squared path (q1, t1, t2, q2, t3, t4, ..., t_2l, q_{l+1}).
For an even cycle Q1 wraps around to (t_{2l-1}, t_2l, t1, t2) and the result
is a squared cycle on 3l vertices.
"""

from __future__ import annotations

from collections.abc import Sequence

from ..errors import NotAPath, Overlap, SigmaConditionFails
from ..graph import Graph, lowest, mask_of
from .exact import EmbeddingWitness, cycle_witness, path_witness


def quadruples(t: Sequence[int], is_cycle: bool) -> list[tuple[int, ...]]:
    l = len(t) // 2
    middle = [tuple(t[2 * i - 4: 2 * i]) for i in range(2, l + 1)]
    if is_cycle:
        if l == 1:
            return [(t[0], t[1])]
        return [(t[-2], t[-1], t[0], t[1])] + middle
    return [(t[0], t[1])] + middle + [(t[-2], t[-1])]


def _check_base(g: Graph, t: Sequence[int], w: int, is_cycle: bool) -> None:
    if len(t) < 2 or len(t) % 2:
        raise NotAPath(f"need an even number (>= 2) of base vertices, got {len(t)}")
    if len(set(t)) != len(t) or not all(0 <= v < g.n for v in t):
        raise NotAPath("base vertices must be distinct vertices of the graph")
    for a, b in zip(t, t[1:]):
        if not g.has_edge(a, b):
            raise NotAPath(f"({a},{b}) is not an edge")
    if is_cycle and len(t) > 2 and not g.has_edge(t[-1], t[0]):
        raise NotAPath(f"closing pair ({t[-1]},{t[0]}) is not an edge")
    if w & mask_of(t):
        raise Overlap("connector set meets the base path")


def common_counts(g: Graph, quads: list[tuple[int, ...]], w: int) -> list[int]:
    return [g.common_mask(q, w).bit_count() for q in quads]


def find_sigma(g: Graph, t: Sequence[int], w, is_cycle: bool = False) -> list[int]:
    """Quadruple indices (0-based) ordered by number of common connectors, fewest first.

    This order satisfies the counting condition whenever any order does.
    """
    wm = w if isinstance(w, int) else mask_of(w)
    counts = common_counts(g, quadruples(t, is_cycle), wm)
    return sorted(range(len(counts)), key=lambda i: (counts[i], i))


def check_sigma(g: Graph, t: Sequence[int], w, is_cycle: bool, sigma: Sequence[int]) -> None:
    """Raise :class:`SigmaConditionFails` at the first position i (1-based) whose
    quadruple has fewer than i common neighbours in ``w``."""
    wm = w if isinstance(w, int) else mask_of(w)
    quads = quadruples(t, is_cycle)
    if sorted(sigma) != list(range(len(quads))):
        raise ValueError(f"sigma must order the {len(quads)} quadruple indices 0..{len(quads) - 1}")
    counts = common_counts(g, quads, wm)
    for pos, idx in enumerate(sigma, 1):
        if counts[idx] < pos:
            raise SigmaConditionFails(
                f"quadruple {idx + 1} at position {pos} has only {counts[idx]} common connectors",
                pos,
            )


def square_path_lemma(
    g: Graph,
    t: Sequence[int],
    w,
    is_cycle: bool = False,
    sigma: Sequence[int] | None = None,
) -> EmbeddingWitness:
    """Interleave connectors from ``w`` into ``t`` to get a squared path or cycle.

    ``sigma`` is a 0-based ordering of the quadruples; by default
    :func:`find_sigma`. Following it, each quadruple takes its least unused
    common neighbour in ``w``.
    """
    t = list(t)
    wm = w if isinstance(w, int) else mask_of(w)
    _check_base(g, t, wm, is_cycle)
    quads = quadruples(t, is_cycle)
    if sigma is None:
        sigma = find_sigma(g, t, wm, is_cycle)
    check_sigma(g, t, wm, is_cycle, sigma)

    q = [0] * len(quads)
    used = 0
    for idx in sigma:
        free = g.common_mask(quads[idx], wm) & ~used
        q[idx] = lowest(free)
        used |= 1 << q[idx]

    seq: list[int] = []
    for i in range(len(t) // 2):
        seq.extend((q[i], t[2 * i], t[2 * i + 1]))
    if is_cycle:
        return cycle_witness(seq)
    seq.append(q[-1])
    return path_witness(seq)
