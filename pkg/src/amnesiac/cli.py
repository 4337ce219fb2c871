"""Command-line front end.

Exit codes: 0 success (or "yes" for ``decide``), 1 "no" from ``decide`` or a
failing gating suite from ``verify``, 2 usage/parse/I-O error, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from . import centers as centers_mod
from .auxgraph import build_aux_multi, build_aux_single
from .flood import RoundCapExceeded, simulate
from .graph import Graph, GraphError, format_graph, parse_graph
from .reductions import FloodingInstance, decide_flooding, reduce_total_domination
from .verify import SUITES, random_connected, random_tree, run_suite

FAMILIES = ("path", "cycle", "complete", "star", "tree-random", "gnp")
OBJECTIVES = ("k_radius", "ni_k_radius", "total_domination", "flood_k", "greedy_k_center")


class UsageError(Exception):
    pass


def _read(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _nodes(tokens: list[str]) -> list[int]:
    out = []
    for tok in tokens:
        for part in tok.split(","):
            if part:
                try:
                    out.append(int(part))
                except ValueError:
                    raise UsageError(f"not a node id: {part!r}") from None
    return out


def cmd_gen(args) -> int:
    n = args.n
    if args.family == "path":
        g = Graph.path(n)
    elif args.family == "cycle":
        g = Graph.cycle(n)
    elif args.family == "complete":
        g = Graph.complete(n)
    elif args.family == "star":
        g = Graph.star(n)
    elif args.family == "tree-random":
        g = random_tree(n, args.seed)
    else:
        if args.p is None:
            raise UsageError("gnp needs --p")
        g = random_connected(n, args.p, args.seed)
    _emit(format_graph(g), args.out)
    return 0


def cmd_run(args) -> int:
    g = _read(args.graph)
    trace = simulate(g, _nodes(args.sources))
    if args.trace:
        _emit(trace.to_jsonl(), args.trace)
    print(f"rounds={trace.rounds_count} messages={trace.total_messages}")
    return 0


def cmd_aux(args) -> int:
    g = _read(args.graph)
    sources = _nodes(args.sources)
    if len(sources) == 1 and not args.multi:
        aux = build_aux_single(g, sources[0])
    else:
        aux = build_aux_multi(g, sources)
    map_path = args.map or (args.out + ".map" if args.out else None)
    _emit(format_graph(aux.graph), args.out)
    _emit(aux.format_mapping(), map_path)
    return 0


def cmd_centers(args) -> int:
    g = _read(args.graph)
    obj = args.objective
    if obj != "total_domination" and args.k is None:
        raise UsageError(f"--k is required for {obj}")
    if obj == "total_domination":
        report = centers_mod.total_domination_number(g, force=args.force)
    elif obj == "greedy_k_center":
        report = centers_mod.greedy_k_center(g, args.k)
    else:
        report = getattr(centers_mod, obj)(g, args.k, force=args.force)
    if report is None:
        print(f"{obj} {args.k} infeasible")
    else:
        print(report.to_line())
    return 0


def _witness(nodes) -> str:
    return "{" + ",".join(map(str, nodes)) + "}"


def cmd_decide(args) -> int:
    g = _read(args.graph)
    decision = decide_flooding(FloodingInstance(g, args.k, args.c), force=args.force)
    if decision:
        print(f"yes witness={_witness(decision.witness)}")
        return 0
    print("no")
    return 1


def cmd_reduce(args) -> int:
    g = _read(args.graph)
    inst = reduce_total_domination(g, args.k)
    _emit(f"# k {inst.k} c {inst.c}\n" + format_graph(inst.g), args.out)
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == ["all"] else args.suite
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
    status = 0
    reports = []
    for name in names:
        result = run_suite(name, args.n_max, n_min=args.n_min, seed=args.seed,
                           samples=args.samples, workers=args.workers)
        print(result.line(), flush=True)
        reports.append(result.report())
        if result.gating_failure:
            status = 1
    if args.report:
        _emit("".join(reports), args.report)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="amnesiac", description="Amnesiac flooding toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("run", help="simulate amnesiac flooding")
    p.add_argument("graph")
    p.add_argument("sources", nargs="+")
    p.add_argument("--trace", help="write the JSON-lines trace here")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("aux", help="export the auxiliary bipartite graph")
    p.add_argument("graph")
    p.add_argument("sources", nargs="+")
    p.add_argument("--multi", action="store_true",
                   help="use the virtual-source construction even for one source")
    p.add_argument("-o", "--out")
    p.add_argument("--map", help="mapping sidecar path (default: OUT.map, or stdout)")
    p.set_defaults(func=cmd_aux)

    p = sub.add_parser("centers", help="k-radius, total domination, Flood_k")
    p.add_argument("graph")
    p.add_argument("--objective", choices=OBJECTIVES, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--force", action="store_true", help="allow brute force above n=24")
    p.set_defaults(func=cmd_centers)

    p = sub.add_parser("decide", help="(k,c)-flooding decision")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("reduce", help="total domination to (k,2)-flooding")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", action="append", required=True,
                   help=f"suite name or 'all'; one of: {', '.join(SUITES)}")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--workers", type=int, help="process count (default FLOOD_THREADS or CPU count)")
    p.add_argument("--report", help="write detailed reports here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RoundCapExceeded, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (GraphError, UsageError, KeyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
