"""Paths and cycles of prescribed length that keep a small bad set B spread out.

The host H is ``g`` restricted to a vertex mask. With |B| <= h/100, degree at
least 9|B| on B and at least h/2 + 9|B| + 10 elsewhere, the construction is:

1. a seed path P = (x, y, u0, w0, v0, b1, u1, w1, v1, b2, ..., b_k, u_k, w_k, v_k)
   with three good vertices between consecutive bad ones. For paths xy is a
   dummy edge between the requested end vertices; for cycles it is an edge of
   H - B;
2. extension of P at its tail to a spanning path, rerouting through an edge
   u'v' beyond P whenever the tail is stuck;
3. closing into a spanning cycle T, again through a crossing edge if needed;
4. shortening. Lengths h-|B|-2 <= l < h cut h-l vertices out of T - P with a
   chord pair. Shorter lengths come from cycles through xy in H - B, obtained
   by shrinking a spanning cycle of H - B one vertex at a time.

Every step that the counting arguments guarantee is a search that must
succeed; a failure raises :class:`ConstructionStuck`.
"""

from __future__ import annotations

from ..errors import ConstructionStuck, PreconditionViolated
from ..graph import Graph, iter_bits, lowest, mask_of


def separated(seq: list[int], bad: int, cyclic: bool) -> bool:
    """True iff no four consecutive entries contain two members of ``bad``."""
    n = len(seq)
    flags = [bad >> v & 1 for v in seq]
    if cyclic:
        if n < 4:
            return sum(flags) <= 1
        return all(flags[i] + flags[(i + 1) % n] + flags[(i + 2) % n] + flags[(i + 3) % n] <= 1 for i in range(n))
    return all(sum(flags[i:i + 4]) <= 1 for i in range(max(n - 3, 1)))


def check_preconditions(g: Graph, host: int, bad: int) -> None:
    h = host.bit_count()
    k = bad.bit_count()
    if bad & ~host:
        raise PreconditionViolated("bad vertices must lie in the host", sorted(iter_bits(bad & ~host)))
    if 100 * k > h:
        raise PreconditionViolated(f"|B|={k} exceeds h/100 with h={h}", k)
    for v in iter_bits(host):
        deg = g.degree(v, host)
        if bad >> v & 1:
            if deg < 9 * k:
                raise PreconditionViolated(f"bad vertex {v} has degree {deg} < {9 * k}", v)
        elif 2 * deg < h + 18 * k + 20:
            raise PreconditionViolated(
                f"vertex {v} has degree {deg} < h/2 + 9|B| + 10 = {h / 2 + 9 * k + 10}", v
            )


class NicePathBuilder:
    """Builds the spanning cycle once and answers every target length from it.

    ``endpoints=None`` gives cycles; a pair ``(x, y)`` gives x-y paths.
    """

    def __init__(self, g: Graph, b=(), endpoints: tuple[int, int] | None = None, within=None):
        self.g = g
        self.host = g.all_mask if within is None else (within if isinstance(within, int) else mask_of(within))
        self.bad = mask_of(b)
        self.h = self.host.bit_count()
        check_preconditions(g, self.host, self.bad)
        self.is_path = endpoints is not None
        if endpoints is not None:
            x, y = endpoints
            for v in (x, y):
                if not self.host >> v & 1 or self.bad >> v & 1:
                    raise PreconditionViolated(f"end vertex {v} must be a host vertex outside B", v)
            if x == y:
                raise PreconditionViolated("end vertices must differ", x)
        else:
            good = self.host & ~self.bad
            edge = next(iter(g.edges(good)), None)
            if edge is None:
                raise PreconditionViolated("H - B has no edge", None)
            x, y = edge
        self.x, self.y = x, y
        self._seed: list[int] | None = None
        self._spanning: list[int] | None = None
        self._short: dict[int, list[int]] | None = None

    # basic steps ------------------------------------------------------------

    def _adj(self, v: int) -> int:
        return self.g.adj(v) & self.host

    def seed_path(self) -> list[int]:
        if self._seed is not None:
            return self._seed
        x, y = self.x, self.y
        bs = list(iter_bits(self.bad))
        if not bs:
            self._seed = [x, y]
            return self._seed
        good = self.host & ~self.bad
        used = 1 << x | 1 << y
        k = len(bs)

        def pick(cands: int, what: str) -> int:
            nonlocal used
            free = cands & good & ~used
            if not free:
                raise ConstructionStuck(f"no free vertex for {what}")
            v = lowest(free)
            used |= 1 << v
            return v

        # u_i follows b_i (u_0 follows y), v_i precedes b_{i+1}
        us = [pick(self._adj(y), "u0")]
        vs = []
        for i in range(k):
            vs.append(pick(self._adj(bs[i]), f"v{i}"))
            us.append(pick(self._adj(bs[i]), f"u{i + 1}"))
        ws = []
        for i in range(k):
            ws.append(pick(self._adj(us[i]) & self._adj(vs[i]), f"w{i}"))
        ws.append(pick(self._adj(us[k]), f"w{k}"))
        vs.append(pick(self._adj(ws[k]), f"v{k}"))
        seq = [x, y]
        for i in range(k):
            seq.extend((us[i], ws[i], vs[i], bs[i]))
        seq.extend((us[k], ws[k], vs[k]))
        self._seed = seq
        return seq

    def _extend(self, path: list[int], keep: int, host: int) -> list[int]:
        """Grow ``path`` at its tail until it spans ``host``; the first ``keep`` entries stay fixed."""
        adj = self.g.adjacency
        path = list(path)
        on = mask_of(path)
        while True:
            u = path[-1]
            free = adj[u] & host & ~on
            if free:
                v = lowest(free)
                path.append(v)
                on |= 1 << v
                continue
            missing = host & ~on
            if not missing:
                return path
            v = lowest(missing)
            for i in range(keep, len(path) - 2):
                if adj[u] >> path[i] & 1 and adj[v] >> path[i + 1] & 1:
                    path = path[: i + 1] + path[i + 1:][::-1] + [v]
                    on |= 1 << v
                    break
            else:
                raise ConstructionStuck(f"path stuck at {u} with {v} uncovered and no crossing edge")

    def _close(self, path: list[int], keep: int) -> list[int]:
        adj = self.g.adjacency
        u, x = path[-1], path[0]
        if adj[u] >> x & 1:
            return path
        for j in range(keep, len(path) - 2):
            if adj[u] >> path[j] & 1 and adj[x] >> path[j + 1] & 1:
                return path[: j + 1] + path[j + 1:][::-1]
        raise ConstructionStuck("no crossing edge closes the spanning path")

    def spanning_cycle(self) -> list[int]:
        """A spanning cycle of H starting (x, y, ...) with the seed path as a prefix."""
        if self._spanning is None:
            seed = self.seed_path()
            path = self._extend(seed, len(seed), self.host)
            self._spanning = self._close(path, len(seed))
        return self._spanning

    # shortening ---------------------------------------------------------------

    def _chord_cut(self, cycle: list[int], keep: int, drop: int) -> list[int] | None:
        """Drop ``drop`` vertices of ``cycle[keep:]`` using chords uu' and vv'."""
        adj = self.g.adjacency
        rest = cycle[keep:]
        if len(rest) < drop + 2:
            return None
        u, v = rest[0], rest[1]
        for i in range(1, len(rest) - drop - 1):
            j = i + drop + 1
            if adj[u] >> rest[i] & 1 and adj[v] >> rest[j] & 1:
                return cycle[:keep] + [u] + rest[1: i + 1][::-1] + rest[j:]
        return None

    def _shrink_step(self, line: list[int]) -> list[int] | None:
        """Remove one vertex from a y..x line, keeping both ends."""
        adj = self.g.adjacency
        for k in range(1, len(line) - 1):
            if adj[line[k - 1]] >> line[k + 1] & 1:
                return line[:k] + line[k + 1:]
        m = len(line)
        for a in range(m - 3):
            u, v = line[a], line[a + 1]
            for i in range(a + 1, m - 2):
                j = i + 2
                if adj[u] >> line[i] & 1 and adj[v] >> line[j] & 1:
                    return line[: a + 1] + line[a + 1: i + 1][::-1] + line[j:]
        return None

    def _short_cycles(self) -> dict[int, list[int]]:
        """Cycles through xy in H - B for every length, as lines from y to x."""
        if self._short is not None:
            return self._short
        good = self.host & ~self.bad
        path = self._extend([self.x, self.y], 2, good)
        cycle = self._close(path, 2)
        line = cycle[1:] + cycle[:1]
        out = {len(line): line}
        while len(line) > 3:
            nxt = self._shrink_step(line)
            if nxt is None:
                nxt = _exact_line(self.g, good, line[0], line[-1], len(line) - 1)
            if nxt is None:
                raise ConstructionStuck(f"cannot shorten the {len(line)}-cycle through xy")
            line = nxt
            out[len(line)] = line
        self._short = out
        return out

    def _cycle_order(self, ell: int) -> list[int]:
        """A cycle of length ``ell`` through the pair (x, y), listed from x."""
        h, k = self.h, self.bad.bit_count()
        if ell == h:
            return self.spanning_cycle()
        if ell >= h - k - 2:
            cyc = self._chord_cut(self.spanning_cycle(), len(self.seed_path()), h - ell)
            if cyc is None:
                raise ConstructionStuck(f"no chord pair cuts the spanning cycle to length {ell}")
            return cyc
        line = self._short_cycles()[ell]
        return [line[-1]] + line[:-1]

    # public answers -------------------------------------------------------------

    def cycle(self, ell: int) -> list[int]:
        if self.is_path:
            raise ValueError("this builder was set up for paths")
        if not 3 <= ell <= self.h:
            raise PreconditionViolated(f"cycle length must lie in 3..{self.h}", ell)
        cyc = self._cycle_order(ell)
        self._verify(cyc, ell, cyclic=True)
        return cyc

    def path(self, ell: int) -> list[int]:
        if not self.is_path:
            raise ValueError("this builder was set up for cycles")
        if not 5 <= ell <= self.h:
            raise PreconditionViolated(f"path length must lie in 5..{self.h}", ell)
        cyc = self._cycle_order(ell)
        # drop the (possibly dummy) edge xy: x, then the cycle backwards to y
        path = [cyc[0]] + cyc[1:][::-1]
        self._verify(path, ell, cyclic=False)
        return path

    def _verify(self, seq: list[int], ell: int, cyclic: bool) -> None:
        g = self.g
        ok = len(seq) == ell and len(set(seq)) == ell and all(self.host >> v & 1 for v in seq)
        ok = ok and all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))
        if cyclic:
            ok = ok and g.has_edge(seq[-1], seq[0])
            bad = self.bad
        else:
            ok = ok and seq[0] == self.x and seq[-1] == self.y
            bad = self.bad | 1 << self.x | 1 << self.y
        if not ok:
            raise ConstructionStuck(f"internal error: result for length {ell} is not a valid path/cycle")
        if not separated(seq, bad, cyclic):
            raise ConstructionStuck(f"result for length {ell} violates the separation property")


def _exact_line(g: Graph, mask: int, start: int, end: int, count: int, limit: int = 200_000) -> list[int] | None:
    """A path from ``start`` to ``end`` on exactly ``count`` vertices of ``mask`` (bounded DFS)."""
    adj = g.adjacency
    budget = [limit]
    path = [start]

    def dfs(used: int) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            return False
        v = path[-1]
        if len(path) == count - 1:
            if adj[v] >> end & 1:
                path.append(end)
                return True
            return False
        for w in iter_bits(adj[v] & mask & ~used & ~(1 << end)):
            path.append(w)
            if dfs(used | 1 << w):
                return True
            path.pop()
        return False

    if count < 2 or start == end:
        return None
    if count == 2:
        return [start, end] if adj[start] >> end & 1 else None
    return list(path) if dfs(1 << start | 1 << end) else None


def exact_path(g: Graph, mask: int, start: int, end: int, count: int) -> list[int] | None:
    return _exact_line(g, mask, start, end, count)


def nice_path_cycle(
    g: Graph,
    b,
    target_len: int,
    endpoints: tuple[int, int] | None = None,
    within=None,
) -> list[int]:
    """One cycle (or x-y path) of length ``target_len`` with B spread out."""
    builder = NicePathBuilder(g, b, endpoints, within)
    if endpoints is None:
        return builder.cycle(target_len)
    return builder.path(target_len)
