"""Command-line front end: ``spl <command> ...``.

Exit statuses: 0 ok, 2 usage error, 3 instance over the exact-search cap,
4 internal invariant failure (a repro bundle is printed to stderr).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .embeddings.exact import (
    find_squared_cycle,
    find_squared_path,
    longest_squared_cycle,
    longest_squared_path,
    validate_witness,
)
from .errors import DomainError, GraphError, HypothesisUnmet, SquaredPathLabError, TooLarge
from .factors import ctf_exact, ctf_lower_bound, stability_witness
from .generators import GENERATORS, generate
from .graph import Graph, read_graph
from .limits import ENV_VAR
from .suites import SUITES
from .thresholds import sqc, sqp, sweep, sweep_csv
from .triangles import component_table

EXIT_OK, EXIT_USAGE, EXIT_TOO_LARGE, EXIT_INVARIANT = 0, 2, 3, 4


class UsageError(Exception):
    pass


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def load_graph(source: str) -> Graph:
    """A graph file, or a named graph: ``k<n>``, ``c<n>``, ``e<n>`` or ``family:p1:p2``."""
    if Path(source).is_file():
        return read_graph(source)
    m = re.fullmatch(r"([kce])(\d+)", source)
    if m:
        n = int(m.group(2))
        if m.group(1) == "k":
            return Graph.complete(n)
        if m.group(1) == "e":
            return Graph.empty(n)
        if n < 3:
            raise UsageError("a cycle needs at least 3 vertices")
        return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if ":" in source:
        family, *raw = source.split(":")
        return build(family, raw).graph
    raise UsageError(f"{source!r} is neither a file nor a named graph")


def build(family: str, raw: list[str]):
    if family not in GENERATORS:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(sorted(GENERATORS))}")
    try:
        params = [int(p) for p in raw]
    except ValueError:
        raise UsageError(f"parameters must be integers, got {raw}") from None
    try:
        return generate(family, *params)
    except (DomainError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if not m:
        raise UsageError(f"range must look like a..b, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise UsageError(f"empty range {text}")
    return lo, hi


def parse_fraction(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None
    if q < 0:
        raise UsageError("eta must be non-negative")
    return q


def invariant_failure(what: str, bundle: dict) -> int:
    bundle = dict(bundle, failure=what, version=__version__)
    print(f"INVARIANT FAILURE: {what}", file=sys.stderr)
    print(dump(bundle), file=sys.stderr)
    return EXIT_INVARIANT


# commands ---------------------------------------------------------------------


def cmd_gen(args) -> int:
    c = build(args.family, args.params)
    text = c.graph.to_edge_list_text()
    if args.out:
        Path(args.out).write_text(text)
        labels = args.labels or args.out + ".labels"
        Path(labels).write_text(c.labels_text())
    else:
        sys.stdout.write(text)
        if args.labels:
            Path(args.labels).write_text(c.labels_text())
    return EXIT_OK


def cmd_thresholds(args) -> int:
    n = args.n
    lo, hi = parse_range(args.range) if args.range else (n // 2 + 1, n - 1)
    if 2 * lo <= n or hi >= n:
        raise UsageError(f"delta must satisfy n/2 < delta < n, got {lo}..{hi} for n={n}")
    sys.stdout.write(sweep_csv(sweep(args.variant, n, (lo, hi))))
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = load_graph(args.graph)
    cols = ["component", "vertices", "edges", "interior", "exterior", "k4"]
    print("\t".join(cols))
    for row in component_table(g):
        k4 = row["k4"]
        row = dict(row, k4=",".join(map(str, k4)) if k4 else "-")
        print("\t".join(str(row[c]) for c in cols))
    return EXIT_OK


def cmd_ctf(args) -> int:
    g = load_graph(args.graph)
    if args.bound:
        f, method = ctf_lower_bound(g), "bound"
    else:
        f, method = ctf_exact(g, args.cap), "exact"
    if not f.is_valid(g):
        return invariant_failure("factor does not validate", {"command": "ctf", "graph": args.graph, "factor": f.to_json_dict()})
    print(dump(dict(f.to_json_dict(), method=method)))
    return EXIT_OK


def cmd_find(args) -> int:
    g = load_graph(args.graph)
    if args.len < 1:
        raise UsageError("--len must be positive")
    search = find_squared_cycle if args.cycle else find_squared_path
    kind = "squared_cycle" if args.cycle else "squared_path"
    try:
        w = search(g, args.len, args.cap)
    except TooLarge as exc:
        print(dump({"kind": kind, "length": args.len, "reason": str(exc), "status": "TOO_LARGE"}))
        return EXIT_TOO_LARGE
    if w is None:
        print(dump({"kind": kind, "length": args.len, "status": "ABSENT"}))
        return EXIT_OK
    if not validate_witness(g, w):
        return invariant_failure("witness does not validate", {"command": "find", "graph": args.graph, "witness": w.to_json_dict()})
    print(dump(dict(w.to_json_dict(), length=args.len, status="FOUND")))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.target == "tightness":
        return verify_tightness(args)
    if args.params:
        raise UsageError(f"verify {args.target} takes no positional parameters")
    if args.seed is None:
        raise UsageError(f"verify {args.target} needs --seed")
    rep = SUITES[args.target](args.trials, args.seed)
    print(rep.line())
    if not rep.passed:
        return invariant_failure(
            f"{args.target} suite failed",
            {"command": "verify", "suite": args.target, "trials": args.trials, "seed": args.seed, "failures": rep.failures[:20]},
        )
    return EXIT_OK


def verify_tightness(args) -> int:
    if not args.params or args.params[0] not in ("gp", "gc"):
        raise UsageError("verify tightness takes gp or gc followed by n and delta")
    family, raw = args.params[0], args.params[1:]
    c = build(family, raw)
    n, delta = c.params["n"], c.params["delta"]
    if family == "gp":
        w, expected, what = longest_squared_path(c.graph, args.cap), sqp(n, delta), "P²"
    else:
        w, expected, what = longest_squared_cycle(c.graph, args.cap), sqc(n, delta), "C²"
    found = len(w) if w is not None else 0
    name = "sqp" if family == "gp" else "sqc"
    if found == expected:
        print(f"PASS (longest {what} = {found} = {name}({n},{delta}))")
        return EXIT_OK
    print(f"FAIL (longest {what} = {found}, {name}({n},{delta}) = {expected})")
    return invariant_failure(
        "extremal length differs from threshold",
        {"command": "verify tightness", "family": family, "n": n, "delta": delta, "found": found, "expected": expected,
         "witness": w.to_json_dict() if w else None},
    )


def cmd_stability(args) -> int:
    g = load_graph(args.graph)
    eta = parse_fraction(args.eta)
    try:
        w = stability_witness(g, eta, args.cap)
    except HypothesisUnmet as exc:
        raise UsageError(str(exc)) from None
    if w.factor is not None and not w.factor.is_valid(g):
        return invariant_failure("stability factor does not validate", {"command": "stability", "graph": args.graph, "eta": args.eta})
    print(w.to_json())
    return EXIT_OK


# parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spl", description="Squared path and cycle thresholds toolkit.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--deterministic", action="store_true", help="accepted for scripts; every command is deterministic")
    p.add_argument("--exact-cap", type=int, default=None, help=f"override the exact-search cap (also via {ENV_VAR})")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="write a named construction as an edge list")
    s.add_argument("family", help=", ".join(sorted(GENERATORS)))
    s.add_argument("params", nargs="*")
    s.add_argument("-o", "--out", help="edge-list path; labels go to OUT.labels unless --labels is given")
    s.add_argument("--labels", help="label sidecar path")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("thresholds", help="CSV sweep of sqp (or sqc) over delta")
    s.add_argument("n", type=int)
    s.add_argument("--range", help="delta range a..b, inclusive")
    s.add_argument("--variant", choices=("path", "cycle"), default="path")
    s.set_defaults(func=cmd_thresholds)

    s = sub.add_parser("decompose", help="triangle component table (TSV)")
    s.add_argument("graph")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("ctf", help="connected triangle factor witness (JSON)")
    s.add_argument("graph")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="maximum factor by branch and bound (default)")
    g.add_argument("--bound", action="store_true", help="constructive lower bound")
    s.set_defaults(func=cmd_ctf)

    s = sub.add_parser("find", help="search for a squared path or cycle of one length")
    s.add_argument("graph")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--path", action="store_true")
    g.add_argument("--cycle", action="store_true")
    s.add_argument("--len", type=int, required=True)
    s.set_defaults(func=cmd_find)

    s = sub.add_parser("verify", help="tightness check or seeded property suite")
    s.add_argument("target", choices=("tightness", *SUITES))
    s.add_argument("params", nargs="*", help="for tightness: gp|gc n delta")
    s.add_argument("--trials", type=int, default=20)
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("stability", help="stability dichotomy witness (JSON)")
    s.add_argument("graph")
    s.add_argument("--eta", required=True, help="rational, e.g. 1/100")
    s.set_defaults(func=cmd_stability)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    # None lets each search read the environment variable
    args.cap = args.exact_cap
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"spl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLarge as exc:
        print(f"spl: too large: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (GraphError, DomainError) as exc:
        print(f"spl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SquaredPathLabError as exc:
        # anything else raised by the library is a broken internal guarantee
        return invariant_failure(f"{type(exc).__name__}: {exc}", {"argv": argv if argv is not None else sys.argv[1:]})
    except ValueError as exc:
        print(f"spl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
