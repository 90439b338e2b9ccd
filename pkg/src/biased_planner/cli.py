"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections.abc import Sequence
from fractions import Fraction
from typing import TextIO

from . import fuzz as fuzzing
from .agent import Bias, traverse_fixed_goal, traverse_with_reward
from .errors import PlannerError
from .graph import TaskGraph, parse_cost, prune_to_st
from .instances import (
    figure1,
    gen_akerlof,
    gen_bipartite_costs,
    gen_bipartite_labels,
    gen_course,
    gen_exponential,
    gen_exponential_eps,
)
from .minor import extract_fan_minor, verify_minor
from .motivation import DEFAULT_MAX_EDGES, find_motivating_subgraph, min_motivating_reward, minimize_motivating_subgraph
from .parametric import enumerate_beta_paths
from .partition import optimal_partition
from .serialize import (
    cert_to_json,
    decimal_text,
    dumps,
    graph_to_json,
    labeling_to_json,
    load_graph,
    minor_to_json,
    partition_to_json,
    rational,
    report_to_json,
    traversal_to_json,
    valid_paths_to_json,
)

FAMILIES = (
    "figure1",
    "akerlof",
    "exponential",
    "exponential-eps",
    "course",
    "bipartite-labels",
    "bipartite-costs",
)
MAX_EDGES_ENV = "BIASED_PLANNER_MAX_EDGES"


def _rational(text: str) -> Fraction:
    try:
        return parse_cost(text)
    except PlannerError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _cost_list(text: str) -> list[Fraction]:
    return [_rational(part) for part in text.split(",") if part.strip()]


def _add_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("input (exactly one of --graph / --family)")
    group.add_argument("--graph", help="graph JSON file")
    group.add_argument("--family", choices=FAMILIES, help="generate the input instead of reading it")
    group.add_argument("--n", type=int, help="family size parameter")
    group.add_argument("--c", dest="c_cost", type=_rational, help="akerlof: cost of finishing")
    group.add_argument("--x", type=_rational, help="akerlof: cost of postponing one day")
    group.add_argument("--mu", type=_rational, help="exponential growth factor")
    group.add_argument("--eps", type=_rational, help="exponential-eps: cost of postponing")
    group.add_argument("--weeks", type=int)
    group.add_argument("--projects", type=int)
    group.add_argument("--costs", type=_cost_list, help="course: comma-separated cost per projects done in a week")
    group.add_argument("--allow-zero", action="store_true", help="accept zero-cost edges in --graph")


def _add_format(parser: argparse.ArgumentParser, choices: Sequence[str] = ("human", "json")) -> None:
    parser.add_argument("--format", choices=choices, default=choices[0])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="biased-planner", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a generated instance as JSON")
    _add_source(p)
    p.add_argument("--beta", type=_rational, help="exponential-eps: agent bias used to check eps")
    p.add_argument("--reward", type=_rational)

    p = sub.add_parser("simulate", help="trace an agent")
    _add_source(p)
    p.add_argument("--beta", type=_rational, required=True)
    p.add_argument("--reward", type=_rational, help="use the reward model with this reward")
    _add_format(p)

    p = sub.add_parser("sweep", help="all agent paths as beta ranges over [0, 1]")
    _add_source(p)
    _add_format(p, ("human", "json", "csv"))

    p = sub.add_parser("minor", help="extract and verify a fan minor (JSON)")
    _add_source(p)
    p.add_argument("--beta", type=_rational, required=True)

    p = sub.add_parser("motivate", help="minimum motivating reward")
    _add_source(p)
    p.add_argument("--beta", type=_rational, required=True)
    p.add_argument("--reward", type=_rational, help="also trace the agent with this reward")
    _add_format(p)

    p = sub.add_parser("subgraph", help="search for a motivating subgraph (JSON certificate)")
    _add_source(p)
    p.add_argument("--beta", type=_rational, required=True)
    p.add_argument("--reward", type=_rational)
    p.add_argument("--max-edges", type=int, help=f"search limit (default ${MAX_EDGES_ENV} or {DEFAULT_MAX_EDGES})")
    p.add_argument("--minimize", action="store_true", help="shrink the result to a minimal motivating subgraph")

    p = sub.add_parser("partition", help="optimal k-step split of one task")
    p.add_argument("--c", dest="c_cost", type=_rational, required=True)
    p.add_argument("--r", type=_rational, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_format(p, ("human", "json", "csv"))

    p = sub.add_parser("fuzz", help="run the invariant suite on random DAGs (JSON report)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-nodes", type=int, default=8)
    p.add_argument("--resolution", type=int, default=10_000)
    p.add_argument("--out-dir", help="write failing instances here")
    p.add_argument("--graph", help="check this single graph file instead")
    return parser


def _generate(args: argparse.Namespace, parser: argparse.ArgumentParser):
    fam = args.family

    def need(*names: str) -> None:
        for name in names:
            if getattr(args, name) is None:
                flag = "--c" if name == "c_cost" else "--" + name.replace("_", "-")
                parser.error(f"--family {fam} requires {flag}")

    if fam == "figure1":
        return figure1()
    if fam == "akerlof":
        need("n", "c_cost", "x")
        return gen_akerlof(args.n, args.c_cost, args.x)
    if fam == "exponential":
        need("n", "mu")
        return gen_exponential(args.n, args.mu, allow_zero=True)
    if fam == "exponential-eps":
        need("n", "mu", "eps", "beta")
        return gen_exponential_eps(args.n, args.mu, args.eps, args.beta)
    if fam == "course":
        need("weeks", "projects", "costs")
        return gen_course(args.weeks, args.projects, args.costs, getattr(args, "reward", None))
    if fam == "bipartite-labels":
        need("n")
        return gen_bipartite_labels(args.n)
    need("n")
    return gen_bipartite_costs(args.n)


def _input_graph(args: argparse.Namespace, parser: argparse.ArgumentParser) -> TaskGraph:
    if (args.graph is None) == (args.family is None):
        parser.error("give exactly one of --graph or --family")
    if args.graph is not None:
        return load_graph(args.graph, allow_zero=True if args.allow_zero else None)
    if args.family == "bipartite-labels":
        parser.error("--family bipartite-labels is a labelling, not a graph; use it with gen")
    return _generate(args, parser)


def _path_text(path: Sequence[str]) -> str:
    return "-".join(path)


def _cmd_gen(args, parser, out: TextIO) -> None:
    if args.family is None:
        parser.error("gen requires --family")
    made = _generate(args, parser)
    if isinstance(made, TaskGraph):
        if args.reward is not None:
            made = made.with_reward(args.reward)
        out.write(dumps(graph_to_json(made)))
    else:
        out.write(dumps(labeling_to_json(made)))


def _cmd_simulate(args, parser, out: TextIO) -> None:
    graph = prune_to_st(_input_graph(args, parser))
    bias = Bias(args.beta)
    reward = args.reward if args.reward is not None else graph.reward
    walk = traverse_fixed_goal(graph, bias) if reward is None else traverse_with_reward(graph, bias, reward)
    if args.format == "json":
        out.write(dumps(traversal_to_json(walk)))
        return
    out.write(f"beta {bias.beta}\n")
    if reward is not None:
        out.write(f"reward {reward}\n")
    for plan in walk.plans:
        out.write(f"at {plan.node}: plan {_path_text(plan.path)} biased_cost {plan.biased_cost}\n")
    out.write(f"path {_path_text(walk.realized_path)}\n")
    out.write("outcome reached\n" if walk.reached else f"outcome abandoned at {walk.abandoned_at}\n")
    out.write(f"total_cost {walk.total_cost}\n")


def _cmd_sweep(args, parser, out: TextIO) -> None:
    found = enumerate_beta_paths(_input_graph(args, parser))
    if args.format == "json":
        out.write(dumps(valid_paths_to_json(found)))
    elif args.format == "csv":
        out.write("path_id,lo,hi,path\n")
        for i, vp in enumerate(found):
            out.write(f"{i},{decimal_text(vp.witness.lo)},{decimal_text(vp.witness.hi)},{_path_text(vp.path)}\n")
    else:
        for i, vp in enumerate(found):
            out.write(f"{i} {_path_text(vp.path)} {vp.witness}\n")


def _cmd_minor(args, parser, out: TextIO) -> None:
    graph = prune_to_st(_input_graph(args, parser))
    model = extract_fan_minor(graph, args.beta)
    violation = None if model is None else verify_minor(graph, model)
    doc = minor_to_json(model, violation)
    doc["beta"] = rational(Bias(args.beta).beta)
    out.write(dumps(doc))


def _cmd_motivate(args, parser, out: TextIO) -> None:
    graph = prune_to_st(_input_graph(args, parser))
    report = min_motivating_reward(graph, args.beta)
    walk = None if args.reward is None else traverse_with_reward(graph, args.beta, args.reward)
    if args.format == "json":
        doc = report_to_json(report)
        if walk is not None:
            doc["with_reward"] = traversal_to_json(walk)
        out.write(dumps(doc))
        return
    out.write(f"min_reward {report.min_reward}\n")
    out.write(f"peak_nodes {' '.join(report.peak_nodes)}\n")
    out.write(f"path {_path_text(report.trace.realized_path)}\n")
    if walk is not None:
        status = "reached" if walk.reached else f"abandoned at {walk.abandoned_at}"
        out.write(f"with reward {args.reward}: {status}\n")


def _max_edges(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.max_edges is not None:
        return args.max_edges
    env = os.environ.get(MAX_EDGES_ENV)
    if env is None:
        return DEFAULT_MAX_EDGES
    try:
        return int(env)
    except ValueError:
        parser.error(f"{MAX_EDGES_ENV}={env!r} is not an integer")
        raise


def _cmd_subgraph(args, parser, out: TextIO) -> None:
    graph = prune_to_st(_input_graph(args, parser))
    reward = args.reward if args.reward is not None else graph.reward
    if reward is None:
        parser.error("subgraph needs --reward (or a reward in the graph file)")
    cert = find_motivating_subgraph(graph, args.beta, reward, max_edges=_max_edges(args, parser))
    if cert is not None and args.minimize:
        cert = minimize_motivating_subgraph(graph, cert.edges, args.beta, reward)
    out.write(dumps(cert_to_json(cert)))


def _cmd_partition(args, parser, out: TextIO) -> None:
    if args.format == "csv":
        out.write("k,completion_rate\n")
        for k in range(1, args.k + 1):
            out.write(f"{k},{decimal_text(optimal_partition(args.c_cost, args.r, k).completion_rate)}\n")
        return
    plan = optimal_partition(args.c_cost, args.r, args.k)
    if args.format == "json":
        out.write(dumps(partition_to_json(plan)))
        return
    steps = ",".join(decimal_text(x) for x in plan.steps)
    out.write(f"steps {steps}; rate {decimal_text(plan.completion_rate)}\n")
    out.write(f"bottlenecks {','.join(decimal_text(x) for x in plan.bottlenecks)}\n")


def _cmd_fuzz(args, parser, out: TextIO) -> None:
    if args.graph is not None:
        result = fuzzing.check_instance(load_graph(args.graph), args.resolution)
        out.write(dumps({"graph": args.graph, **result}))
        return
    out.write(dumps(fuzzing.fuzz(args.seed, args.count, args.max_nodes, args.resolution, args.out_dir)))


COMMANDS = {
    "gen": _cmd_gen,
    "simulate": _cmd_simulate,
    "sweep": _cmd_sweep,
    "minor": _cmd_minor,
    "motivate": _cmd_motivate,
    "subgraph": _cmd_subgraph,
    "partition": _cmd_partition,
    "fuzz": _cmd_fuzz,
}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    stream = sys.stdout if out is None else out
    try:
        args = parser.parse_args(argv)
        COMMANDS[args.command](args, parser, stream)
    except SystemExit as exc:
        return int(exc.code or 0)
    except PlannerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
