"""Command-line entry point: score, generate, optimize, sweep-ring, compare-series.

Exit codes: 0 success, 2 usage error, 3 input validation error,
4 computation refused (size guard).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import generators
from .closed_forms import RingSpec
from .errors import InputError, RefusalError
from .graph import format_edge_list, parse_edge_list
from .harness import average_differences, load_series_file
from .metrics import report, report_to_text, report_to_tsv
from .optimizer import Objective, exhaustive_best, greedy_agglomerate
from .partition import Partition, format_partition, parse_partition
from .sweep import rows_to_tsv, sweep_ring

EXIT_USAGE, EXIT_INPUT, EXIT_REFUSED = 2, 3, 4


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args):
    text = _read(args.graph)
    try:
        return parse_edge_list(text, directed=args.directed, weighted=args.weighted)
    except InputError as exc:
        raise InputError(f"{args.graph}: {exc}") from None


def parse_range(text: str) -> list[int]:
    """``"30"``, ``"2,4,8"`` or inclusive ``"start:stop[:step]"``."""
    try:
        if ":" in text:
            parts = [int(x) for x in text.split(":")]
            if len(parts) not in (2, 3):
                raise ValueError
            start, stop = parts[:2]
            step = parts[2] if len(parts) == 3 else 1
            if step <= 0:
                raise ValueError
            return list(range(start, stop + 1, step))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}") from None


def cmd_score(args) -> int:
    g = _load_graph(args)
    try:
        p = parse_partition(_read(args.partition), g.node_count)
    except InputError as exc:
        raise InputError(f"{args.partition}: {exc}") from None
    r = report(g, p)
    sys.stdout.write(report_to_tsv(r, args.precision) if args.tsv else report_to_text(r, args.precision))
    return 0


def _write(path: Path, text: str) -> None:
    path.write_text(text)
    print(path)


def cmd_generate(args) -> int:
    prefix = Path(args.out)
    fam, par = args.family, args.params
    need = {"complete": 1, "two-cliques": 2, "clique-tree": 0, "ring": 2, "two-pairs": 2, "random": 2}
    if len(par) != need[fam]:
        raise InputError(f"family {fam!r} takes {need[fam]} parameter(s), got {len(par)}")
    if fam != "random":
        try:
            ints = [int(x) for x in par]
        except ValueError:
            raise InputError(f"family {fam!r} takes integer parameters, got {par}") from None
    outputs: list[tuple[str, str]] = []
    if fam == "complete":
        g = generators.complete_graph(ints[0])
        outputs = [(".edges", format_edge_list(g)), (".single.part", format_partition(Partition.single(g.node_count)))]
    elif fam == "two-cliques":
        g, p = generators.two_cliques(*ints)
        outputs = [
            (".edges", format_edge_list(g)),
            (".planted.part", format_partition(p)),
            (".single.part", format_partition(Partition.single(g.node_count))),
        ]
    elif fam == "clique-tree":
        a, b, pa, pb = generators.clique_pair_vs_tree_pair()
        outputs = [
            (".cliques.edges", format_edge_list(a)),
            (".cliques.part", format_partition(pa)),
            (".trees.edges", format_edge_list(b)),
            (".trees.part", format_partition(pb)),
        ]
    elif fam == "ring":
        g, single, pairs = generators.ring_of_cliques(RingSpec(*ints))
        outputs = [(".edges", format_edge_list(g)), (".single.part", format_partition(single)),
                   (".pairs.part", format_partition(pairs))]
    elif fam == "two-pairs":
        m, p = ints
        layout = generators.hub_bridges if args.layout == "hub" else generators.ring_bridges
        g, four, merged = generators.two_pairs_cliques(m, p, layout(m, p))
        outputs = [(".edges", format_edge_list(g)), (".four.part", format_partition(four)),
                   (".merged.part", format_partition(merged))]
    else:
        try:
            n, prob = int(par[0]), float(par[1])
        except ValueError:
            raise InputError(f"random takes 'NODES PROBABILITY', got {par}") from None
        g = generators.random_graph(n, prob, weighted=args.weighted, directed=args.directed, seed=args.seed)
        outputs = [(".edges", format_edge_list(g))]
    for suffix, text in outputs:
        _write(prefix.with_name(prefix.name + suffix), text)
    return 0


def cmd_optimize(args) -> int:
    g = _load_graph(args)
    search = exhaustive_best if args.method == "exhaustive" else greedy_agglomerate
    p, value = search(g, Objective(args.objective))
    summary = f"# {args.objective} = {value:.{args.precision}f}, communities = {p.community_count}\n"
    if args.output:
        Path(args.output).write_text(format_partition(p))
    else:
        sys.stdout.write(format_partition(p))
    sys.stdout.write(summary)
    return 0


def cmd_sweep_ring(args) -> int:
    for n in args.n:
        RingSpec(n, 3)
    for m in args.m:
        RingSpec(2, m)
    sys.stdout.write(rows_to_tsv(sweep_ring(args.n, args.m), args.precision))
    return 0


def cmd_compare_series(args) -> int:
    try:
        series = load_series_file(args.manifest)
    except OSError as exc:
        raise InputError(f"cannot read {args.manifest}: {exc.strerror}") from None
    sys.stdout.write(average_differences(series).to_tsv(args.precision))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modularity-density", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def flags(p, graph_kind=True):
        p.add_argument("--precision", type=int, default=4, help="decimal places in printed values (default 4)")
        if graph_kind:
            p.add_argument("--directed", action="store_true", help="treat edges as directed arcs")
            p.add_argument("--weighted", action="store_true", help="read a third weight column")

    p = sub.add_parser("score", help="print all metrics for a graph and partition")
    p.add_argument("graph")
    p.add_argument("partition")
    p.add_argument("--tsv", action="store_true", help="TSV output (one row per community plus summary)")
    flags(p)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("generate", help="write benchmark graphs and their partitions")
    p.add_argument("family", choices=["complete", "two-cliques", "clique-tree", "ring", "two-pairs", "random"])
    p.add_argument("params", nargs="*", help="family parameters, e.g. 'ring 30 5' or 'two-cliques 4 2'")
    p.add_argument("-o", "--out", required=True, help="output path prefix")
    p.add_argument("--layout", choices=["ring", "hub"], default="ring", help="two-pairs bridge layout")
    p.add_argument("--seed", type=int, default=0, help="random family seed")
    flags(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("optimize", help="search for a partition maximizing an objective")
    p.add_argument("graph")
    p.add_argument("--objective", choices=[o.value for o in Objective], default="qds")
    p.add_argument("--method", choices=["exhaustive", "greedy"], default="greedy")
    p.add_argument("-o", "--output", help="partition output file (default stdout)")
    flags(p)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("sweep-ring", help="Q and Qds of ring-of-cliques partitions over an (n, m) grid")
    p.add_argument("--n", type=parse_range, default=parse_range("2:60:2"), help="clique counts (default 2:60:2)")
    p.add_argument("--m", type=parse_range, default=parse_range("3:20"), help="clique sizes (default 3:20)")
    flags(p, graph_kind=False)
    p.set_defaults(func=cmd_sweep_ring)

    p = sub.add_parser("compare-series", help="average metric differences between two partition streams")
    p.add_argument("manifest")
    flags(p, graph_kind=False)
    p.set_defaults(func=cmd_compare_series)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RefusalError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED


if __name__ == "__main__":
    sys.exit(main())
