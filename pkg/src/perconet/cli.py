"""Command-line interface.

Subcommands: ingest, stats, centrality, communities, percolate, generate,
report.  Commands compose through files only (graph JSON, trace JSON/CSV);
randomized commands require an explicit --seed.  Exit codes: 0 success,
1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import generators, percolation, report
from .community import filter_communities, louvain
from .centrality import DEGREE_MEASURES, MEASURES, centrality_scores, top_k
from .errors import PerconetError
from .graph import CLEANING_POLICIES, TUNNEL_CASCADE, graph_to_json, ingest_csv, load_graph
from .metrics import compute_snapshot, float9


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _write_text(text: str, path: str | None, note: str, quiet: bool) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        if not quiet:
            print(note.format(path=path), file=sys.stderr)
    else:
        sys.stdout.write(text)


def _json_line(doc) -> str:
    return json.dumps(doc) + "\n"


def _add_common(parser: argparse.ArgumentParser, need_input: bool = True) -> None:
    parser.add_argument("--input", required=need_input, help="input file path")
    parser.add_argument("--output", help="output file path (default: stdout)")
    parser.add_argument("--seed", type=int, help="RNG seed for randomized operations")
    parser.add_argument("--quiet", action="store_true", help="suppress progress notes")


def _cmd_ingest(args) -> int:
    graph, cleaning = ingest_csv(
        args.input,
        src_col=args.src_col,
        dst_col=args.dst_col,
        tunnel_col=args.tunnel_col,
        policy=args.policy,
    )
    _write_text(graph_to_json(graph) + "\n", args.output, "wrote graph to {path}", args.quiet)
    if not args.quiet:
        print(json.dumps(cleaning.to_dict()), file=sys.stderr)
    return 0


def _cmd_stats(args) -> int:
    graph = load_graph(args.input)
    snapshot = compute_snapshot(graph)
    _write_text(snapshot.to_json() + "\n", args.output, "wrote stats to {path}", args.quiet)
    return 0


def _cmd_centrality(args) -> int:
    graph = load_graph(args.input)
    ranked = top_k(centrality_scores(graph, args.measure), args.top)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if args.measure in DEGREE_MEASURES:
        writer.writerow(["label", "in_degree", "out_degree", "total_degree"])
        for label, _ in ranked:
            writer.writerow(
                [label, graph.in_degree(label), graph.out_degree(label), graph.total_degree(label)]
            )
    else:
        writer.writerow(["label", "score"])
        for label, score in ranked:
            writer.writerow([label, format(score, ".9g")])
    _write_text(buffer.getvalue(), args.output, "wrote centrality to {path}", args.quiet)
    return 0


def _cmd_communities(args) -> int:
    if args.seed is None:
        raise ValueError("communities requires --seed")
    graph = load_graph(args.input)
    partition = louvain(graph, seed=args.seed, resolution=args.resolution)
    communities = [
        {"id": cid, "size": len(members), "members": members}
        for cid, members in filter_communities(partition, args.min_size)
    ]
    doc = {
        "seed": partition.seed,
        "resolution": partition.resolution,
        "community_count": partition.community_count,
        "modularity": float9(partition.modularity),
        "communities": communities,
    }
    _write_text(_json_line(doc), args.output, "wrote communities to {path}", args.quiet)
    return 0


def _cmd_percolate(args) -> int:
    graph = load_graph(args.input)
    strategy = percolation.AttackStrategy(kind=args.strategy, measure=args.measure, seed=args.seed)
    metrics = tuple(name.strip() for name in args.metrics.split(",") if name.strip())
    trace = percolation.run_attack(graph, strategy, args.steps, metrics)
    format = "csv" if args.output and args.output.endswith(".csv") else "json"
    text = report.emit_trace_series(trace, format)
    if format == "json":
        text += "\n"
    _write_text(text, args.output, "wrote trace to {path}", args.quiet)
    return 0


def _cmd_generate(args) -> int:
    spec = generators.GeneratorSpec(
        model=args.model,
        n=args.n,
        m=args.m,
        in_degrees=tuple(int(x) for x in args.in_degrees.split(",")) if args.in_degrees else None,
        out_degrees=tuple(int(x) for x in args.out_degrees.split(",")) if args.out_degrees else None,
        seed=args.seed if args.seed is not None else 0,
    )
    if args.seed is None and spec.model != generators.BIDIRECTED_STAR:
        raise ValueError("generate requires --seed for randomized models")
    graph = generators.generate(spec)
    _write_text(graph_to_json(graph) + "\n", args.output, "wrote graph to {path}", args.quiet)
    return 0


def _cmd_report(args) -> int:
    graph = load_graph(args.input)
    mapping = report.load_country_mapping(args.country_map) if args.country_map else None
    snapshot = compute_snapshot(graph)
    doc = report.report_document(graph, snapshot, mapping, args.top)
    _write_text(_json_line(doc), args.output, "wrote report to {path}", args.quiet)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="perconet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ingest", help="CSV contact rows -> cleaned graph JSON")
    _add_common(p)
    p.add_argument("--src-col", default="Src IP", help='source column name (default "Src IP")')
    p.add_argument("--dst-col", default="Dst IP", help='destination column name (default "Dst IP")')
    p.add_argument("--tunnel-col", default=None, help="tunnel id column name (default: none)")
    p.add_argument("--policy", choices=CLEANING_POLICIES, default=TUNNEL_CASCADE)
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("stats", help="full metrics snapshot of a graph JSON file")
    _add_common(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("centrality", help="top-k centrality ranking as CSV")
    _add_common(p)
    p.add_argument("--measure", choices=MEASURES, default="total-degree")
    p.add_argument("-k", "--top", type=int, default=10)
    p.set_defaults(func=_cmd_centrality)

    p = sub.add_parser("communities", help="Louvain communities as JSON")
    _add_common(p)
    p.add_argument("--resolution", type=float, default=1.0)
    p.add_argument("--min-size", type=int, default=5, help="report communities larger than this")
    p.set_defaults(func=_cmd_communities)

    p = sub.add_parser("percolate", help="run a node-removal attack, emit the trace")
    _add_common(p)
    p.add_argument("--strategy", choices=percolation.STRATEGY_KINDS, default=percolation.ADAPTIVE_DEGREE)
    p.add_argument("--measure", choices=MEASURES, default="total-degree")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--metrics", default="density,apl", help="comma list of per-step metrics")
    p.set_defaults(func=_cmd_percolate)

    p = sub.add_parser("generate", help="synthesize a graph JSON file")
    _add_common(p, need_input=False)
    p.add_argument("--model", choices=generators.MODELS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--in-degrees", default=None, help="comma list (directed-configuration)")
    p.add_argument("--out-degrees", default=None, help="comma list (directed-configuration)")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("report", help="summary + top-degree table + country rollup")
    _add_common(p)
    p.add_argument("--country-map", default=None, help="label,country CSV file")
    p.add_argument("-k", "--top", type=int, default=10)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"perconet {args.command}: usage error: {exc}", file=sys.stderr)
        return 1
    except (PerconetError, OSError) as exc:
        print(f"perconet {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
