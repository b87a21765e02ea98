"""Command line front end.

Subcommands: gen, orient, cores, rigid-components, thresholds, sweep.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Sequence

from .asymptotics import threshold_report
from .cores import core_stats
from .experiments import SweepConfig, compare, emit_csv, run_sweep
from .graph import ErConfig, GraphFormatError, read_graph, sample_er, write_graph
from .orientation import DenseWitness, find_orientation
from .rigidity import _edges_connect, rigid_components


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sliderig",
        description="Rigidity, orientability and core analysis of typed "
                    "random graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="sample a typed random graph to a file")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--c", type=float, required=True, help="mean degree")
    p.add_argument("--q", type=float, required=True,
                   help="probability of a free (type 2) vertex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True, metavar="FILE")

    p = sub.add_parser("orient", help="orient a graph within type capacities")
    p.add_argument("file")

    p = sub.add_parser("cores", help="2.5-core and accreted core sizes")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true",
                   help="also print the peeling order")

    p = sub.add_parser("rigid-components",
                       help="decompose into maximal rigid components")
    p.add_argument("file")

    p = sub.add_parser("thresholds", help="limit formulas for one (q, c)")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--c", type=float, default=None)
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("sweep", help="Monte-Carlo sweep over mean degrees")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--c-min", type=float, required=True)
    p.add_argument("--c-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, metavar="CSV")
    p.add_argument("--measures", default="orient,cores",
                   help="comma list from orient,cores,rigid,witness_scan")
    p.add_argument("--svg", default=None, metavar="FILE",
                   help="render the summary chart to this file")
    return parser


def _cmd_gen(args) -> int:
    g = sample_er(ErConfig(n=args.n, c=args.c, q=args.q, seed=args.seed))
    write_graph(g, args.output)
    return 0


def _cmd_orient(args) -> int:
    g = read_graph(args.file)
    result = find_orientation(g)
    if isinstance(result, DenseWitness):
        print(f"WITNESS {len(result.vertices)} {result.n1} {result.n2} "
              f"{result.m}")
        print(" ".join(str(v) for v in result.vertices))
        return 1
    print("ORIENTABLE")
    for (u, v) in g.edges:
        print(f"{u} {v} -> {result.head[(u, v)]}")
    return 0


def _cmd_cores(args) -> int:
    g = read_graph(args.file)
    st = core_stats(g, trace=args.trace)
    print(f"n1_core {st.n1_core}")
    print(f"n2_core {st.n2_core}")
    print(f"m_core {st.m_core}")
    print(f"n_core_plus {st.n_core_plus}")
    if args.trace and st.peel_trace is not None:
        for v, t, d in st.peel_trace:
            print(f"peel {v} type {t} degree {d}")
    return 0


def _cmd_rigid_components(args) -> int:
    g = read_graph(args.file)
    dec = rigid_components(g)
    for idx, (vs, es) in enumerate(dec.components):
        n1 = sum(1 for v in vs if int(g.types[v]) == 1)
        connected = "yes" if _edges_connect(vs, es) else "no"
        print(f"component {idx}: size {len(vs)} n1 {n1} "
              f"n2 {len(vs) - n1} m {len(es)} connected {connected}")
    if dec.isolated:
        print(f"isolated {len(dec.isolated)}")
    print(f"largest_component {dec.largest_component_size()}")
    print(f"largest_connected_component {dec.largest_connected_component_size()}")
    return 0


def _cmd_thresholds(args) -> int:
    report = threshold_report(args.q, args.c)
    data = dataclasses.asdict(report)
    if args.as_json:
        print(json.dumps(data))
        return 0
    for key, value in data.items():
        if value is None:
            shown = "-"
        elif isinstance(value, bool):
            shown = "yes" if value else "no"
        elif isinstance(value, float):
            shown = f"{value:.10g}"
        else:
            shown = str(value)
        print(f"{key:<22} {shown}")
    return 0


def _cmd_sweep(args) -> int:
    if args.steps < 1:
        raise ValueError("--steps must be at least 1")
    if args.steps == 1:
        cs = [args.c_min]
    else:
        span = args.c_max - args.c_min
        cs = [args.c_min + k * span / (args.steps - 1)
              for k in range(args.steps)]
    measures = frozenset(tok for tok in args.measures.split(",") if tok)
    cfg = SweepConfig(q=args.q, c_values=tuple(cs), n=args.n,
                      trials=args.trials, base_seed=args.seed,
                      measures=measures)
    records = run_sweep(cfg)
    emit_csv(records, args.out)
    summary = compare(records, threshold_report(args.q))
    header = (f"{'c':>8} {'measure':<30} {'trials':>6} {'mean':>10} "
              f"{'stderr':>10} {'predicted':>10} {'|dev|':>8}")
    print(header)
    for row in summary:
        pred = "-" if row.predicted is None else f"{row.predicted:10.4f}"
        dev = "-" if row.abs_dev is None else f"{row.abs_dev:8.4f}"
        print(f"{row.c:8.4f} {row.measure:<30} {row.trials:>6} "
              f"{row.mean:10.4f} {row.stderr:10.4f} {pred:>10} {dev:>8}")
    if args.svg:
        from .plotting import render_summary
        render_summary(summary, args.svg,
                       title=f"q={args.q} n={args.n} trials={args.trials}")
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "orient": _cmd_orient,
    "cores": _cmd_cores,
    "rigid-components": _cmd_rigid_components,
    "thresholds": _cmd_thresholds,
    "sweep": _cmd_sweep,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except GraphFormatError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
