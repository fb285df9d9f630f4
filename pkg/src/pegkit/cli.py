"""Command-line front end: ``pegkit {invariant,reach,verify,enumerate}``.

Machine output is canonical JSON (sorted keys) on stdout; diagnostics go to
stderr.  Vertices are 0-based throughout.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .cache import InvariantCache
from .engine import (
    BudgetExhausted,
    MultiDistribution,
    reach,
    reach_all_moves,
    reach_within,
    weight_certificate,
)
from .graphs import (
    Graph,
    GraphError,
    bits_to_list,
    canonical_form,
    diameter,
    enumerate_graphs,
    graph_hash,
    independence_number,
    is_connected,
    loads_graph,
    make_family,
    vertex_edge_diameter,
)
from .solvers import INFINITY, InvariantResult
from .theory import INVARIANTS, SUITES, SuiteParams, UnknownSuite, run_suite

log = logging.getLogger("pegkit")

STRUCTURAL = ("alpha", "diameter", "dve")
INVARIANT_IDS = tuple(INVARIANTS) + STRUCTURAL


class UsageError(Exception):
    """Bad user input; reported on stderr with exit status 1."""


def _emit(obj: Any) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# graph sources


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.family:
        name, *params = args.family
        try:
            return make_family(name, [int(p) for p in params])
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    try:
        return loads_graph(text)
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"malformed graph file {args.file}: {exc}") from exc


def _graph_label(g: Graph, args: argparse.Namespace) -> str:
    return g.name or f"file:{args.file}"


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", nargs="+", metavar="NAME_OR_PARAM",
                     help="named family followed by integer parameters, e.g. --family cycle 7")
    src.add_argument("--file", help="path to a graph JSON file {\"n\": .., \"edges\": [[u, v], ..]}")


# ---------------------------------------------------------------------------
# invariant


def structural_result(g: Graph, inv: str) -> InvariantResult:
    if inv == "alpha":
        size, witness = independence_number(g)
        return InvariantResult("alpha", size, list(witness))
    try:
        value = diameter(g) if inv == "diameter" else vertex_edge_diameter(g)
    except GraphError as exc:
        if inv == "diameter" and g.n and not is_connected(g):
            return InvariantResult("diameter", INFINITY)
        raise UsageError(str(exc)) from exc
    return InvariantResult(inv, value)


def compute_invariant(g: Graph, inv: str, budget: int | None = None) -> InvariantResult:
    if inv in STRUCTURAL:
        return structural_result(g, inv)
    return INVARIANTS[inv](g, budget=budget)


def _relabel_witness(witness: Any, mapping: Sequence[int]) -> Any:
    """Rename the vertices in a stored witness through ``mapping``."""
    if witness is None:
        return None
    if isinstance(witness, dict) and "counts" in witness:
        return {"counts": {str(mapping[int(v)]): c for v, c in witness["counts"].items()}}
    return sorted(mapping[v] for v in witness)


def _cache_coordinates(g: Graph) -> tuple[list[int], list[int]]:
    """Maps between ``g``'s labels and the labels the cache stores."""
    if g.n <= 7:
        _, perm = canonical_form(g)
        to_canon = [0] * g.n
        for i, v in enumerate(perm):
            to_canon[v] = i
        return to_canon, list(perm)
    ident = list(range(g.n))
    return ident, ident


def cmd_invariant(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    cache = InvariantCache(args.cache) if args.cache else None
    key = graph_hash(g)
    result = None
    hit = False
    if cache is not None:
        stored = cache.get(key, args.invariant)
        if stored is not None:
            _, from_canon = _cache_coordinates(g)
            result = InvariantResult(
                args.invariant,
                INFINITY if stored["value"] == "infinity" else stored["value"],
                _relabel_witness(stored["witness"], from_canon),
                stored.get("stats", {}),
            )
            hit = True
            print(f"cache hit for {args.invariant} ({key})", file=sys.stderr)
    if result is None:
        try:
            result = compute_invariant(g, args.invariant, args.budget)
        except BudgetExhausted as exc:
            print(f"budget exhausted after {exc.states} states (level {exc.level})", file=sys.stderr)
            return 2
        if cache is not None:
            to_canon, _ = _cache_coordinates(g)
            record = result.to_json()
            record["witness"] = _relabel_witness(result.witness, to_canon)
            cache.put(key, args.invariant, {k: record[k] for k in ("value", "witness", "stats")})
    out = result.to_json(_graph_label(g, args))
    out["graph_hash"] = key
    if not args.witness:
        out.pop("witness")
    if cache is not None:
        out["cache"] = "hit" if hit else "miss"
    _emit(out)
    return 0


# ---------------------------------------------------------------------------
# reach


def _parse_json_arg(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except ValueError as exc:
        raise UsageError(f"{what} must be JSON, got {text!r}") from exc


def _parse_pegs(g: Graph, text: str) -> list[int]:
    pegs = _parse_json_arg(text, "--pegs")
    if not isinstance(pegs, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in pegs):
        raise UsageError("--pegs must be a JSON list of vertex indices")
    if len(set(pegs)) != len(pegs):
        raise UsageError("--pegs lists a vertex twice; use --counts for multi-distributions")
    bad = [v for v in pegs if not 0 <= v < g.n]
    if bad:
        raise UsageError(f"peg vertices {bad} out of range for a graph on {g.n} vertices")
    return sorted(pegs)


def _parse_counts(g: Graph, text: str) -> MultiDistribution:
    data = _parse_json_arg(text, "--counts")
    if isinstance(data, list) and len(data) != g.n:
        raise UsageError(f"--counts list needs {g.n} entries, got {len(data)}")
    try:
        if isinstance(data, list):
            return MultiDistribution(tuple(data))
        if isinstance(data, dict):
            return MultiDistribution.from_dict(g.n, {"counts": data})
    except (ValueError, TypeError) as exc:
        raise UsageError(f"invalid --counts: {exc}") from exc
    raise UsageError("--counts must be a JSON list of per-vertex counts or an object {vertex: count}")


def cmd_reach(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if (args.pegs is None) == (args.counts is None):
        raise UsageError("give exactly one of --pegs or --counts")
    if args.target is not None and not 0 <= args.target < g.n:
        raise UsageError(f"target {args.target} out of range for a graph on {g.n} vertices")
    if args.certificate and args.target is None:
        raise UsageError("--certificate needs --target")
    out: dict[str, Any] = {"graph": _graph_label(g, args)}
    if args.counts is not None:
        dist = _parse_counts(g, args.counts)
        if args.max_moves is not None or args.witness:
            raise UsageError("--max-moves and --witness apply to proper distributions only")
        out["counts"] = dist.to_dict()["counts"]
        out["moves"] = "extended"
        mask = reach_all_moves(g, dist)
        state: Any = dist
    else:
        pegs = _parse_pegs(g, args.pegs)
        out["pegs"] = pegs
        state = pegs
        if args.all_moves:
            out["moves"] = "extended"
            mask = reach_all_moves(g, pegs)
        elif args.max_moves is not None:
            out["moves"] = "pegging"
            out["max_moves"] = args.max_moves
            mask = reach_within(g, pegs, args.max_moves)
        else:
            out["moves"] = "pegging"
            try:
                report = reach(g, pegs, witness=args.witness, budget=args.budget)
            except BudgetExhausted as exc:
                print(f"budget exhausted after {exc.states} states", file=sys.stderr)
                return 2
            mask = report.reachable_mask
            if args.witness:
                out["witnesses"] = report.to_json()["witnesses"]
    out["reachable"] = bits_to_list(mask)
    if args.target is not None:
        out["target"] = args.target
        out["target_reachable"] = bool(mask >> args.target & 1)
        if args.witness and "witnesses" in out:
            out["witnesses"] = {k: v for k, v in out["witnesses"].items() if k == str(args.target)}
    if args.certificate:
        try:
            cert = weight_certificate(g, state, args.target)
        except GraphError as exc:
            raise UsageError(str(exc)) from exc
        out["certificate"] = cert.to_json() if cert else None
    _emit(out)
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args: argparse.Namespace) -> int:
    params = SuiteParams(max_n=args.max_n, extended=args.extended, seed=args.seed, samples=args.samples,
                         budget=args.budget)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        try:
            report = run_suite(name, params, jobs=args.jobs)
        except UnknownSuite as exc:
            raise UsageError(exc.args[0]) from exc
        reports.append(report)
        print(f"{report.name}: {'PASS' if report.passed else 'FAIL'} in {report.runtime:.1f}s", file=sys.stderr)
    payload = {
        "passed": all(r.passed for r in reports),
        "suites": [r.to_json() for r in reports],
        "version": __version__,
    }
    if args.report:
        Path(args.report).write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    if args.json:
        _emit(payload)
    else:
        print("\n\n".join(r.table() for r in reports))
    return 0 if payload["passed"] else 1


# ---------------------------------------------------------------------------
# enumerate

FILTER_FIELDS = ("alpha", "diameter", "dve", "P", "p", "n", "edges")
_CLAUSE = re.compile(r"^\s*([A-Za-z]+)\s*(==|!=|<=|>=|<|>)\s*(-?\d+)\s*$")
_OPS = {
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "<": lambda a, b: a < b,
    ">": lambda a, b: a > b,
}


def parse_filter(expr: str) -> list[tuple[str, str, int]]:
    """``"P==3 and alpha>=2"`` -> ``[("P", "==", 3), ("alpha", ">=", 2)]``."""
    clauses = []
    for part in re.split(r"\band\b", expr):
        m = _CLAUSE.match(part)
        if not m:
            raise UsageError(f"bad filter clause {part.strip()!r}; expected FIELD OP INTEGER")
        field_name, op, value = m.groups()
        if field_name not in FILTER_FIELDS:
            raise UsageError(f"unknown filter field {field_name!r}; choose from {list(FILTER_FIELDS)}")
        clauses.append((field_name, op, int(value)))
    return clauses


def graph_fields(g: Graph, names: Sequence[str]) -> dict[str, int | None]:
    out: dict[str, int | None] = {}
    for name in names:
        if name == "n":
            out[name] = g.n
        elif name == "edges":
            out[name] = g.edge_count
        elif name == "alpha":
            out[name] = independence_number(g)[0]
        elif name in ("diameter", "dve"):
            try:
                out[name] = diameter(g) if name == "diameter" else vertex_edge_diameter(g)
            except GraphError:
                out[name] = None
        else:
            value = INVARIANTS[name](g).value
            out[name] = None if value == INFINITY else value
    return out


def cmd_enumerate(args: argparse.Namespace) -> int:
    clauses = parse_filter(args.filter) if args.filter else []
    fields = [f.strip() for f in args.fields.split(",") if f.strip()] if args.fields else []
    for f in fields:
        if f not in FILTER_FIELDS:
            raise UsageError(f"unknown field {f!r}; choose from {list(FILTER_FIELDS)}")
    needed = sorted(set(fields) | {c[0] for c in clauses}, key=FILTER_FIELDS.index)
    try:
        graphs = enumerate_graphs(args.n, dedup=args.dedup)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for g in graphs:
        values = graph_fields(g, needed)
        if all(values[f] is not None and _OPS[op](values[f], v) for f, op, v in clauses):
            rec: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.edges()]}
            if fields:
                rec["fields"] = {f: values[f] for f in fields}
            _emit(rec)
    return 0


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pegkit", description="Exact pegging-game invariants and verification suites.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="compute one invariant of a graph")
    _add_graph_source(p)
    p.add_argument("--invariant", required=True, choices=INVARIANT_IDS)
    p.add_argument("--budget", type=int, help="cap on explored search states (exit 2 when hit)")
    p.add_argument("--witness", action="store_true", help="include the witness distribution")
    p.add_argument("--cache", nargs="?", const="", default=None, metavar="PATH",
                   help="JSONL results cache (default: $PEGKIT_CACHE or ~/.cache/pegkit)")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("reach", help="reach set of a distribution")
    _add_graph_source(p)
    p.add_argument("--pegs", help="JSON list of occupied vertices, e.g. [1,2]")
    p.add_argument("--counts", help="multi-distribution: JSON list of counts or {vertex: count}")
    p.add_argument("--target", type=int)
    p.add_argument("--max-moves", type=int, help="only sequences of at most this many moves")
    p.add_argument("--all-moves", action="store_true", help="allow stacking, pebbling and removal moves")
    p.add_argument("--certificate", action="store_true", help="weight certificate for --target")
    p.add_argument("--witness", action="store_true", help="shortest move sequence per reached vertex")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"one of {', '.join(SUITES)} or 'all' (underscores accepted)")
    p.add_argument("--max-n", type=int, help="order bound for graph sweeps")
    p.add_argument("--extended", action="store_true", help="larger sweeps")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, help="sample count for randomised checks")
    p.add_argument("--budget", type=int, help="state budget for budgeted cases")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--json", action="store_true", help="print the JSON report instead of the table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list graphs on n vertices as JSON lines")
    p.add_argument("n", type=int)
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--filter", help='e.g. "P==3 and alpha>=2"')
    p.add_argument("--fields", help=f"comma list from {','.join(FILTER_FIELDS)}")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if getattr(args, "cache", None) == "":
        from .cache import default_path

        args.cache = str(default_path())
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
