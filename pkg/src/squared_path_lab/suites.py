"""Seeded property suites.

Each trial draws its own 64-bit seed from the master seed, so trials are
independent of each other and of the order they run in.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .embeddings.exact import validate_witness
from .embeddings.nicepath import NicePathBuilder, separated
from .embeddings.qseq import concatenation_identity, parity_sum
from .embeddings.squaring import square_path_lemma
from .errors import ConstructionStuck
from .factors import ctf_exact
from .matching import max_matching_bipartite, max_matching_mindeg, min_cross_degree
from .randgraphs import (
    nice_path_host,
    random_bipartite_instance,
    random_dense_graph,
    random_graph,
    random_triangle_walk_host,
    random_walk_edges,
)
from .graph import mask_of
from .triangles import check_component_lemma, decompose, walk_between


@dataclass
class SuiteReport:
    name: str
    seed: int
    trials: int = 0
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.trials} trials, {self.checks} checks, {len(self.failures)} failures (seed {self.seed})"


def trial_rngs(seed: int, trials: int):
    master = random.Random(seed)
    for i in range(trials):
        s = master.getrandbits(64)
        yield i, s, random.Random(s)


def lemma3_suite(trials: int = 200, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("lemma3", seed)
    for i, s, rng in trial_rngs(seed, trials):
        g = random_dense_graph(rng, 8, 16)
        res = check_component_lemma(g)
        rep.trials += 1
        rep.checks += 3
        if not res.passed:
            rep.failures.append(f"trial {i} (seed {s}): {res.counterexample}")
    return rep


def prop4_suite(trials: int = 500, seed: int = 0) -> SuiteReport:
    """Matching coverage bounds: part (a) on random graphs, part (b) on bipartite instances."""
    rep = SuiteReport("prop4", seed)
    for i, s, rng in trial_rngs(seed, trials):
        n = rng.randint(1, 16)
        g = random_graph(rng, n, rng.random())
        m = max_matching_mindeg(g)
        need = 2 * min(g.min_degree(), n // 2)
        rep.checks += 1
        if not m.is_valid(g) or m.covered_count() < need:
            rep.failures.append(f"(a) trial {i} (seed {s}): covers {m.covered_count()} < {need}")

        inst = random_bipartite_instance(rng)
        am, bm = mask_of(inst.a), mask_of(inst.b)
        mb = max_matching_bipartite(inst.graph, inst.a, inst.b)
        da = min_cross_degree(inst.graph, am, bm)
        db = min_cross_degree(inst.graph, bm, am)
        need_b = 2 * min(da + db, len(inst.a), len(inst.b))
        rep.checks += 1
        if not mb.is_valid(inst.graph) or mb.covered_count() < need_b:
            rep.failures.append(f"(b) trial {i} (seed {s}): covers {mb.covered_count()} < {need_b}")
        rep.trials += 1
    return rep


def _planted_concatenation(rng: random.Random):
    """Disjoint triangles T_1..T_r of one component joined by triangle walks."""
    while True:
        g = random_graph(rng, rng.randint(9, 14), 0.45 + 0.2 * rng.random())
        f = ctf_exact(g)
        if len(f.triangles) < 2:
            continue
        r = rng.randint(2, min(4, len(f.triangles)))
        tris = list(f.triangles)
        rng.shuffle(tris)
        tris = tris[:r]
        d = decompose(g)
        walks = []
        prev_last = None
        for a, b in zip(tris, tris[1:]):
            firsts = [(a[0], a[1]), (a[0], a[2]), (a[1], a[2])]
            firsts = [e for e in firsts if e != prev_last]
            lasts = [(b[0], b[1]), (b[0], b[2]), (b[1], b[2])]
            walk = list(walk_between(g, d, rng.choice(firsts), rng.choice(lasts)).edges)
            walks.append(walk)
            prev_last = walk[-1]
        return g, walks


def parity_suite(trials: int = 200, seed: int = 0, concatenations: int = 50) -> SuiteReport:
    rep = SuiteReport("parity", seed)
    done = 0
    for i, s, rng in trial_rngs(seed, 10 * trials):
        if done == trials:
            break
        g = random_triangle_walk_host(rng)
        walk = random_walk_edges(rng, g, rng.randint(2, 15))
        if walk is None:
            continue
        done += 1
        rep.checks += 1
        if parity_sum(g, walk, walk[0]) != 1:
            rep.failures.append(f"walk trial {i} (seed {s}): orientation sum not 1 mod 3")
    if done < trials:
        rep.failures.append(f"only {done} of {trials} walks could be drawn")
    for i, s, rng in trial_rngs(seed + 1, concatenations):
        g, walks = _planted_concatenation(rng)
        res = concatenation_identity(g, walks, walks[0][0])
        rep.checks += 1
        if not res.holds:
            rep.failures.append(f"concatenation trial {i} (seed {s}): {res}")
    rep.trials = done + concatenations
    return rep


def _is_walk(g, seq, closed: bool) -> bool:
    pairs = zip(seq, seq[1:] + seq[:1] if closed else seq[1:])
    return len(set(seq)) == len(seq) and all(g.has_edge(a, b) for a, b in pairs)


def lemma67_suite(trials: int = 100, seed: int = 0, square: bool = True, name: str = "lemma67") -> SuiteReport:
    """Every cycle length 3..h and path length 5..h on random hosts, optionally squared.

    Squaring needs an even number of base vertices, so it is applied to the
    even-length outputs.
    """
    rep = SuiteReport(name, seed)
    for i, s, rng in trial_rngs(seed, trials):
        host = nice_path_host(rng, rng.randint(100, 140), rng.randint(0, 1))
        g = host.graph
        bad = mask_of(host.bad)
        good = [v for v in range(host.h) if not bad >> v & 1]
        x, y = rng.sample(good, 2)
        rep.trials += 1
        try:
            cycles = NicePathBuilder(g, host.bad, None, host.host)
            paths = NicePathBuilder(g, host.bad, (x, y), host.host)
            for ell in range(3, host.h + 1):
                cyc = cycles.cycle(ell)
                rep.checks += 1
                if not (len(cyc) == ell and _is_walk(g, cyc, True) and separated(cyc, bad, True)):
                    rep.failures.append(f"trial {i} (seed {s}): bad {ell}-cycle")
                if square and ell % 2 == 0:
                    rep.checks += 1
                    if not validate_witness(g, square_path_lemma(g, cyc, host.connectors, True)):
                        rep.failures.append(f"trial {i} (seed {s}): squared {ell}-cycle invalid")
            for ell in range(5, host.h + 1):
                path = paths.path(ell)
                rep.checks += 1
                ends_ok = (path[0], path[-1]) == (x, y)
                if not (len(path) == ell and ends_ok and _is_walk(g, path, False) and separated(path, bad | 1 << x | 1 << y, False)):
                    rep.failures.append(f"trial {i} (seed {s}): bad {ell}-path")
                if square and ell % 2 == 0:
                    rep.checks += 1
                    if not validate_witness(g, square_path_lemma(g, path, host.connectors, False)):
                        rep.failures.append(f"trial {i} (seed {s}): squared {ell}-path invalid")
        except ConstructionStuck as exc:
            rep.failures.append(f"trial {i} (seed {s}): construction stuck: {exc}")
    return rep


SUITES = {
    "lemma3": lambda trials, seed: lemma3_suite(trials, seed),
    "prop4": lambda trials, seed: prop4_suite(trials, seed),
    "parity": lambda trials, seed: parity_suite(trials, seed),
    "nicepath": lambda trials, seed: lemma67_suite(trials, seed, square=False, name="nicepath"),
    "squaring": lambda trials, seed: lemma67_suite(trials, seed, square=True, name="squaring"),
}
