"""Immutable simple graphs over dense vertex ids with bitset adjacency.

Vertex sets are exchanged with callers as ``frozenset[int]``; internally every
set is a Python ``int`` used as a bitmask (bit ``v`` set iff ``v`` is present).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from pathlib import Path
from typing import TextIO

from .errors import (
    EmptyGraph,
    EmptyQuery,
    FormatError,
    GraphTooLarge,
    OutOfRange,
    SelfLoop,
)

MAX_VERTICES = 512

Edge = tuple[int, int]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    return list(iter_bits(mask))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; restrict to a subset by passing a vertex mask to
    the query methods instead of building a new graph.
    """

    __slots__ = ("_n", "_adj", "_m", "_hash")

    def __init__(self, n: int, adjacency: Iterable[int]):
        adj = tuple(adjacency)
        if len(adj) != n:
            raise ValueError("adjacency must have one mask per vertex")
        if n > MAX_VERTICES:
            raise GraphTooLarge(f"n={n} exceeds the cap of {MAX_VERTICES} vertices")
        self._n = n
        self._adj = adj
        self._m = sum(a.bit_count() for a in adj) // 2
        self._hash: int | None = None

    # construction -----------------------------------------------------

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        if n < 0:
            raise OutOfRange(f"negative vertex count {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    # basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def all_mask(self) -> int:
        return (1 << self._n) - 1

    def adj(self, v: int) -> int:
        """Neighbourhood of ``v`` as a bitmask."""
        return self._adj[v]

    @property
    def adjacency(self) -> tuple[int, ...]:
        return self._adj

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int, within: int | None = None) -> int:
        a = self._adj[v]
        if within is not None:
            a &= within
        return a.bit_count()

    def edges(self, within: int | None = None) -> list[Edge]:
        """All edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        out = []
        for u in range(self._n):
            if within is not None and not within >> u & 1:
                continue
            higher = self._adj[u] >> (u + 1) << (u + 1)
            if within is not None:
                higher &= within
            out.extend((u, v) for v in iter_bits(higher))
        return out

    def common_mask(self, vertices: Iterable[int], within: int | None = None) -> int:
        acc = self.all_mask if within is None else within
        for v in vertices:
            acc &= self._adj[v]
        return acc

    def min_degree(self, within: int | None = None) -> int:
        if within is None:
            if self._n == 0:
                raise EmptyGraph("minimum degree of the empty graph is undefined")
            return min(a.bit_count() for a in self._adj)
        if not within:
            raise EmptyGraph("minimum degree over an empty vertex set is undefined")
        return min((self._adj[v] & within).bit_count() for v in iter_bits(within))

    def is_clique(self, mask: int) -> bool:
        return all((self._adj[v] | (1 << v)) & mask == mask for v in iter_bits(mask))

    def is_independent(self, mask: int) -> bool:
        return all(not self._adj[v] & mask for v in iter_bits(mask))

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edge_list(self._n, ((perm[u], perm[v]) for u, v in self.edges()))

    # value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"

    # serialisation -----------------------------------------------------

    def to_edge_list_text(self) -> str:
        lines = [f"{self._n} {self._m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    def to_adjacency_matrix_text(self) -> str:
        rows = [str(self._n)]
        for v in range(self._n):
            rows.append("".join("1" if self._adj[v] >> u & 1 else "0" for u in range(self._n)))
        return "\n".join(rows) + "\n"


def from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    return Graph.from_edge_list(n, edges)


def common_neighbourhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Vertices adjacent to every member of ``s``."""
    s = list(s)
    if not s:
        raise EmptyQuery("common neighbourhood of an empty set")
    for v in s:
        if not 0 <= v < g.n:
            raise OutOfRange(f"vertex {v} not in graph")
    return frozenset(iter_bits(g.common_mask(s)))


def min_degree(g: Graph) -> int:
    return g.min_degree()


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    return g.is_independent(mask_of(s))


# text formats ------------------------------------------------------------


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("missing header line 'n m'")
    try:
        n, m = (int(tok) for tok in lines[0].split())
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"header announces {m} edges but {len(lines) - 1} follow")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"bad edge line {line!r}") from exc
    return Graph.from_edge_list(n, edges)


def parse_adjacency_matrix(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("missing header line 'n'")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    rows = lines[1:]
    if len(rows) != n:
        raise FormatError(f"expected {n} matrix rows, got {len(rows)}")
    edges = []
    for u, row in enumerate(rows):
        if len(row) != n or set(row) - {"0", "1"}:
            raise FormatError(f"row {u} must be {n} characters of 0/1")
        if row[u] != "0":
            raise SelfLoop(f"nonzero diagonal at vertex {u}")
        for v, ch in enumerate(row):
            if ch != rows[v][u]:
                raise FormatError(f"matrix not symmetric at ({u},{v})")
            if ch == "1" and u < v:
                edges.append((u, v))
    return Graph.from_edge_list(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse either text format, telling them apart by the header line."""
    lines = _content_lines(text)
    if lines and len(lines[0].split()) == 1:
        return parse_adjacency_matrix(text)
    return parse_edge_list(text)


def read_graph(source: str | Path | TextIO) -> Graph:
    if hasattr(source, "read"):
        return parse_graph(source.read())
    return parse_graph(Path(source).read_text())


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(g.to_edge_list_text())
