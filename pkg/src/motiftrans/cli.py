"""Command-line interface.

Exit codes: 0 ok, 1 usage or I/O error, 2 parse error, 3 internal invariant
violation, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from contextlib import contextmanager

from motiftrans.errors import ContractViolation, InvariantViolation, ParseError
from motiftrans.graph_io import TemporalGraph, gen_uniform, parse_edge_list, serialize_edge_list
from motiftrans.parallel import diff_stats, merge, run_sequential, run_zones
from motiftrans.report import parse_stats, proportions, render_dot, render_tree, serialize
from motiftrans.tzp import RunConfig, ZoneKind, partition_graph, zone_table

log = logging.getLogger("motiftrans")

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INVARIANT, EXIT_MISMATCH = range(5)


class UsageError(Exception):
    pass


def _add_run_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--delta", type=int, default=600, help="max gap between consecutive edges (s)")
    p.add_argument("--lmax", type=int, default=6, help="max edges per process")
    p.add_argument("--omega", type=int, default=20, help="growth zone length factor (>= 2)")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--backend", choices=("process", "thread"), default="process",
                   help=argparse.SUPPRESS)


def _add_io_options(p: argparse.ArgumentParser, with_format: bool = True) -> None:
    p.add_argument("--input", "-i", help="input file ('-' or absent: stdin)")
    p.add_argument("--output", "-o", help="output file (absent: stdout)")
    if with_format:
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motiftrans", description="Zone-parallel motif transition process discovery."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("discover", help="count transitions with zone-parallel discovery")
    _add_io_options(p)
    _add_run_options(p)
    p.add_argument("--lenient", action="store_true", help="skip malformed input lines")

    p = sub.add_parser("verify", help="compare zone-parallel and whole-graph results")
    _add_io_options(p, with_format=False)
    _add_run_options(p)
    p.add_argument("--lenient", action="store_true")
    p.add_argument("--corrupt-boundary", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("zones", help="print the zone partition as TSV")
    _add_io_options(p, with_format=False)
    _add_run_options(p)
    p.add_argument("--lenient", action="store_true")

    p = sub.add_parser("gen", help="write a uniform random edge list")
    p.add_argument("--output", "-o")
    p.add_argument("--nodes", type=int, default=200)
    p.add_argument("--edges", type=int, default=5000)
    p.add_argument("--span", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--self-loops", action="store_true")

    p = sub.add_parser("report", help="render stats written by 'discover'")
    _add_io_options(p, with_format=False)
    p.add_argument("--tree", metavar="CODE", help="render the transition tree rooted at CODE")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--dot", action="store_true", help="emit the tree as Graphviz DOT")
    return parser


@contextmanager
def _open_out(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _read_text(path) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(args) -> TemporalGraph:
    graph = parse_edge_list(_read_text(args.input), strict=not args.lenient)
    if graph.skipped:
        log.warning("skipped %d malformed line(s)", graph.skipped)
    return graph


def _config(args) -> RunConfig:
    try:
        return RunConfig(args.delta, args.lmax, args.omega, args.threads)
    except ContractViolation as exc:
        raise UsageError(str(exc)) from None


def _meta(cfg: RunConfig, graph: TemporalGraph) -> dict:
    # threads deliberately left out: output must not depend on it
    return {
        "delta": cfg.delta,
        "l_max": cfg.l_max,
        "omega": cfg.omega,
        "zones": len(partition_graph(graph, cfg)),
        "edges": graph.edge_count,
    }


def cmd_discover(args) -> int:
    cfg = _config(args)
    graph = _load_graph(args)
    stats = merge(run_zones(graph, cfg, args.backend))
    with _open_out(args.output) as fh:
        fh.write(serialize(stats, args.format, _meta(cfg, graph)))
    return EXIT_OK


def _corrupt_one_boundary(results) -> bool:
    for r in results:
        if r.zone.kind is ZoneKind.BOUNDARY and r.stats.terminals:
            code = min(r.stats.terminals)
            r.stats.terminals[code] -= 1
            return True
    return False


def cmd_verify(args) -> int:
    cfg = _config(args)
    graph = _load_graph(args)
    results = run_zones(graph, cfg, args.backend)
    if args.corrupt_boundary and not _corrupt_one_boundary(results):
        log.warning("no boundary zone with counts to corrupt")
    parallel = merge(results)
    sequential = run_sequential(graph, cfg)
    diffs = diff_stats(parallel, sequential)
    with _open_out(args.output) as fh:
        fh.write(f"zones\t{len(results)}\n")
        for name in ("transitions", "terminals", "observed", "dwell"):
            n_keys = len(getattr(sequential, name))
            n_diff = sum(1 for d in diffs if d[0] == name)
            fh.write(f"{name}\tkeys={n_keys}\tdiffering={n_diff}\n")
        if diffs:
            name, key, got, want = diffs[0]
            fh.write(f"MISMATCH\t{name}\t{key}\tparallel={got}\tsequential={want}\n")
            return EXIT_MISMATCH
        fh.write("OK\n")
    return EXIT_OK


def cmd_zones(args) -> int:
    cfg = _config(args)
    graph = _load_graph(args)
    with _open_out(args.output) as fh:
        fh.write(zone_table(graph, cfg))
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        graph = gen_uniform(args.nodes, args.edges, args.span, args.seed, args.self_loops)
    except ContractViolation as exc:
        raise UsageError(str(exc)) from None
    with _open_out(args.output) as fh:
        fh.write(serialize_edge_list(graph))
    return EXIT_OK


def cmd_report(args) -> int:
    try:
        stats, _ = parse_stats(_read_text(args.input))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(0, "", str(exc)) from None
    with _open_out(args.output) as fh:
        if args.tree:
            try:
                render = render_dot if args.dot else render_tree
                fh.write(render(stats, args.tree, args.depth))
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        else:
            fh.write(proportions(stats).render())
    return EXIT_OK


COMMANDS = {
    "discover": cmd_discover,
    "verify": cmd_verify,
    "zones": cmd_zones,
    "gen": cmd_gen,
    "report": cmd_report,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return COMMANDS[args.command](args)
    except (UsageError, OSError) as exc:
        _fail(str(exc))
        return EXIT_USAGE
    except ParseError as exc:
        _fail(f"parse error: {exc}")
        return EXIT_PARSE
    except InvariantViolation as exc:
        _fail(f"internal invariant violated: {exc}")
        return EXIT_INVARIANT


def _fail(message: str) -> None:
    print(f"motiftrans: error: {message}", file=sys.stderr)

if __name__ == "__main__":
    sys.exit(main())
