"""Command-line entry point: ``pcmgraphs <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails or a request
cannot be met, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import catalog
from .census import (
    DEFAULT_NODE_BUDGET,
    INFEASIBLE,
    CensusQuery,
    default_jobs,
    min_diameter_census,
)
from .errors import CatalogLookupError, FrontierError, GraphError
from .graph import (
    Graph,
    completion_ratio,
    diameter,
    format_edge_list,
    is_connected,
    parse_edge_list,
    regularity_holds,
    required_edge_count,
)
from .graph6 import decode_graph6, encode_graph6
from .pcm import FillingPattern, graph_from_mask, parse_mask, recommend
from .search import stochastic_low_diameter_search

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(out: TextIO, args: argparse.Namespace, text: str, data: object) -> None:
    if args.json:
        out.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _fmt_d(d: int | float) -> str:
    return "inf" if d == float("inf") else str(d)


# -- subcommands --------------------------------------------------------------

def cmd_info(args, out) -> int:
    n, k = args.n, args.k
    edges = required_edge_count(n, k)
    c = completion_ratio(n, k)
    data = {"n": n, "k": k, "edges": edges, "c": str(c), "c_value": round(c.value, 4),
            "d_min": None, "catalog": None}
    text = f"edges={edges} c={c}≈{c.value:.4f}"
    if catalog.covered(n, k):
        e = catalog.lookup(n, k)
        data["d_min"] = e.d_claimed
        data["catalog"] = e.label
        text += f" d_min={e.d_claimed} (catalog: {e.label})"
    else:
        text += " d_min=? (no catalog entry; see `census`)"
    _emit(out, args, text, data)
    return EXIT_OK


def cmd_recommend(args, out) -> int:
    try:
        r = recommend(args.n, args.max_d, args.max_comparisons, census_tiebreak=args.census_tiebreak)
    except FrontierError as exc:
        frontier = [{"k": k, "d": d, "comparisons": e} for k, d, e in exc.frontier]
        _emit(out, args, f"infeasible: {exc}", {"error": str(exc), "frontier": frontier})
        return EXIT_FAIL
    p = r.pattern
    body = {"pairs": "\n".join(f"{i}-{j}" for i, j in p.pairs) + "\n",
            "csv": p.to_csv(), "matrix": p.to_matrix(), "g6": p.to_graph6() + "\n"}[args.format]
    text = (f"n={r.n} k={r.chosen_k} d={r.expected_d} comparisons={len(p)} c={r.c}≈{r.c.value:.4f}\n"
            f"source: {r.source}\n{r.rationale}\n{body}")
    _emit(out, args, text, r.to_dict())
    return EXIT_OK


def cmd_census(args, out) -> int:
    if args.unbounded and args.budget is not None:
        raise UsageError("--budget and --unbounded are exclusive")
    budget = None if args.unbounded else (args.budget or DEFAULT_NODE_BUDGET)
    if (args.n, args.k) in INFEASIBLE and not (args.force and args.budget):
        raise UsageError(f"exhaustive census of ({args.n},{args.k}) is out of reach; "
                         "use `search`, or pass --force with an explicit --budget")
    q = CensusQuery(args.n, args.k, collect="optima" if args.store_optima else "count",
                    budget=budget, max_diameter=args.max_d, exact=args.exact)
    res = min_diameter_census(q, jobs=args.jobs)
    lines = [res.to_line()]
    if res.optima:
        lines += [str(f) for f in res.optima]
    _emit(out, args, "\n".join(lines), res.to_dict())
    return EXIT_OK


def cmd_search(args, out) -> int:
    res = stochastic_low_diameter_search(
        args.n, args.k, args.target_d, args.attempts, args.distinct_goal,
        seed=args.seed, bias=args.bias, max_swaps=args.max_swaps, stall=args.stall)
    lines = [f"{res.n} {res.k} target_d={res.target_d} distinct={res.distinct_count} "
             f"attempts={res.attempts} seed={res.seed}"]
    lines += [str(f) for f in res.graphs]
    _emit(out, args, "\n".join(lines), res.to_dict())
    return EXIT_OK


def _check_graph(g: Graph, k: int | None, d: int | None) -> dict:
    dg = diameter(g)
    checks = {"connected": is_connected(g)}
    if k is not None:
        checks["regularity"] = regularity_holds(g, k)
        checks["edge_count"] = k < g.n and g.edge_count == required_edge_count(g.n, k)
    if d is not None:
        checks["diameter"] = dg == d
    return {"n": g.n, "edges": g.edge_count, "diameter": None if dg == float("inf") else dg,
            "checks": checks, "passed": all(checks.values())}


def cmd_verify(args, out, stdin) -> int:
    if args.catalog:
        rep = catalog.verify_catalog()
        if args.json:
            out.write(rep.to_json() + "\n")
        else:
            out.write(rep.to_text() + "\n")
        return EXIT_OK if rep.passed else EXIT_FAIL
    strings = [args.graph6] if args.graph6 else [ln.strip() for ln in stdin if ln.strip()]
    if not strings:
        raise UsageError("verify needs --catalog, --graph6 STR, or graph6 lines on stdin")
    results = []
    for s in strings:
        r = _check_graph(decode_graph6(s), args.expect_k, args.expect_d)
        r["graph6"] = s
        results.append(r)
    text = "\n".join(
        f"{'PASS' if r['passed'] else 'FAIL'} {r['graph6']} n={r['n']} edges={r['edges']} "
        f"d={_fmt_d(r['diameter'] if r['diameter'] is not None else float('inf'))} "
        + " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in r["checks"].items())
        for r in results)
    ok = all(r["passed"] for r in results)
    _emit(out, args, text, {"passed": ok, "graphs": results})
    return EXIT_OK if ok else EXIT_FAIL


def _read_graphs(fmt: str, text: str, n: int | None) -> list[Graph]:
    if fmt == "g6":
        return [decode_graph6(ln.strip()) for ln in text.splitlines() if ln.strip()]
    if fmt == "edges":
        return [parse_edge_list(text, n)]
    return [graph_from_mask(parse_mask(text))]


def _write_graph(fmt: str, g: Graph) -> str:
    if fmt == "g6":
        return encode_graph6(g) + "\n"
    if fmt == "edges":
        return format_edge_list(g)
    p = FillingPattern(g.n, tuple((i + 1, j + 1) for i, j in g.edges()))
    return p.to_csv() if fmt == "csv" else p.to_matrix()


def cmd_convert(args, out, stdin) -> int:
    if args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = stdin.read()
    graphs = _read_graphs(args.src, text, args.n)
    if args.json:
        _emit(out, args, "", [{"n": g.n, "output": _write_graph(args.dst, g)} for g in graphs])
    else:
        out.write("".join(_write_graph(args.dst, g) for g in graphs))
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    if args.action == "export":
        if not args.directory:
            raise UsageError("catalog export needs a target directory")
        paths = catalog.export_catalog(args.directory)
        _emit(out, args, f"wrote {len(paths)} files to {args.directory}",
              {"directory": args.directory, "files": [p.name for p in paths]})
        return EXIT_OK
    rows = catalog.entries()
    text = "\n".join(f"{e.n:>2} {e.k} d={e.d_claimed} {e.uniqueness_note:<16} {e.graph6}  {e.label}"
                     for e in rows)
    _emit(out, args, text, [e.to_dict() for e in rows])
    return EXIT_OK


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ap = argparse.ArgumentParser(prog="pcmgraphs",
                                 description="Minimal-diameter regular graphs as comparison patterns.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="edge count and completion ratio")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("recommend", parents=[common], help="filling pattern for n items")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-d", type=int)
    p.add_argument("--max-comparisons", type=int)
    p.add_argument("--census-tiebreak", action="store_true",
                   help="use the census optimum with the smallest canonical form")
    p.add_argument("--format", choices=["pairs", "csv", "matrix", "g6"], default="pairs")

    p = sub.add_parser("census", parents=[common], help="exhaustive minimal-diameter census")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--store-optima", action="store_true")
    p.add_argument("--budget", type=int, help=f"search-node limit (default {DEFAULT_NODE_BUDGET:.0e})")
    p.add_argument("--unbounded", action="store_true", help="no node limit")
    p.add_argument("--max-d", type=int, help="only generate graphs of diameter at most this")
    p.add_argument("--exact", action=argparse.BooleanOptionalAction, default=True,
                   help="exact diameter histogram (--no-exact stops BFS at the incumbent)")
    p.add_argument("--force", action="store_true", help="allow cells flagged infeasible")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default $PCMGRAPHS_JOBS or 1)")

    p = sub.add_parser("search", parents=[common], help="seeded stochastic search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--target-d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--attempts", type=int, default=1000)
    p.add_argument("--distinct-goal", type=int)
    p.add_argument("--bias", choices=["plain", "sparse", "mixed"], default="mixed")
    p.add_argument("--max-swaps", type=int, default=100_000)
    p.add_argument("--stall", type=int, default=8000)

    p = sub.add_parser("verify", parents=[common], help="check catalog or given graphs")
    p.add_argument("--catalog", action="store_true")
    p.add_argument("--graph6")
    p.add_argument("--expect-k", type=int)
    p.add_argument("--expect-d", type=int)

    p = sub.add_parser("convert", parents=[common], help="translate between graph formats")
    p.add_argument("--from", dest="src", choices=["g6", "edges", "mask"], required=True)
    p.add_argument("--to", dest="dst", choices=["g6", "edges", "matrix", "csv"], required=True)
    p.add_argument("--input", help="file to read (default stdin)")
    p.add_argument("--n", type=int, help="vertex count for edge lists without a header")

    p = sub.add_parser("catalog", parents=[common], help="list or export the catalog")
    p.add_argument("action", choices=["list", "export"])
    p.add_argument("directory", nargs="?")
    return ap


def main(argv: Sequence[str] | None = None, *, stdout: TextIO | None = None,
         stdin: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    inp = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", None) is None and args.command == "census":
        args.jobs = default_jobs()
    try:
        if args.command == "verify":
            return cmd_verify(args, out, inp)
        if args.command == "convert":
            return cmd_convert(args, out, inp)
        return {"info": cmd_info, "recommend": cmd_recommend, "census": cmd_census,
                "search": cmd_search, "catalog": cmd_catalog}[args.command](args, out)
    except (UsageError, GraphError, CatalogLookupError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"pcmgraphs: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
