"""Command-line entry point: ``domdyn gen|seq|run|verify``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .graph import GraphError, OpKind, read_graph, write_graph


def _cmd_gen(args) -> int:
    n, s, edges = bench.gen_family(args.kind, args.n, args.m, args.seed)
    write_graph(args.output, n, s, edges)
    print(f"wrote {args.kind} graph: n={n} m={len(edges)} s={s} -> {args.output}")
    return 0


def _cmd_seq(args) -> int:
    n, _, edges = read_graph(args.graph)
    cfg = bench.GeneratorConfig(args.ifrac, args.dfrac, args.seed, args.qfrac)
    _, seq = bench.generate_sequence(n, edges, cfg)
    bench.write_sequence(args.output, seq)
    print(f"wrote sequence: initial={seq.initial_edge_count} "
          f"insertions={seq.count(OpKind.INSERT)} "
          f"deletions={seq.count(OpKind.DELETE)} -> {args.output}")
    if seq.empty_deletes:
        print(f"note: {seq.empty_deletes} deletions drawn on an empty graph were dropped")
    return 0


def _cmd_run(args) -> int:
    n, s, edges = read_graph(args.graph)
    seq = bench.read_sequence(args.seq)
    report = bench.run(args.algo, n, s, edges, seq, args.verify_every,
                       graph_name=Path(args.graph).stem)
    row = report.row()
    print(" ".join(f"{k}={v}" for k, v in row.items()))
    if args.csv:
        bench.append_csv(args.csv, [report])
    return 0


def _cmd_verify(args) -> int:
    n, s, edges = read_graph(args.graph)
    seq = bench.read_sequence(args.seq)
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    checks = bench.verify_lockstep(n, s, edges, seq, algos)
    print(f"ok: {','.join(algos)} agree with the reference at {checks} checkpoints")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="domdyn", description="Dynamic dominator tree benchmarks.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph file")
    g.add_argument("--kind", required=True, choices=["fig1", "fig2", "random", "randdag"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=_cmd_gen)

    q = sub.add_parser("seq", help="generate an update sequence for a graph file")
    q.add_argument("--graph", required=True)
    q.add_argument("--ifrac", type=int, default=0)
    q.add_argument("--dfrac", type=int, default=0)
    q.add_argument("--qfrac", type=int, default=0, help="queries, percent of m")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("-o", "--output", required=True)
    q.set_defaults(func=_cmd_seq)

    r = sub.add_parser("run", help="replay a sequence with one algorithm")
    r.add_argument("--graph", required=True)
    r.add_argument("--seq", required=True)
    r.add_argument("--algo", required=True, choices=sorted(bench.ENGINES))
    r.add_argument("--verify-every", type=int, default=0, metavar="K")
    r.add_argument("--csv", metavar="OUT")
    r.set_defaults(func=_cmd_run)

    v = sub.add_parser("verify", help="run several algorithms in lock-step")
    v.add_argument("--graph", required=True)
    v.add_argument("--seq", required=True)
    v.add_argument("--algos", default="dsnca,dbs,sgl")
    v.set_defaults(func=_cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except bench.VerificationError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return 1
    except (GraphError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
