"""Seeded random DAGs and the invariant suite run over them."""

from __future__ import annotations

import random
from collections.abc import Iterator
from fractions import Fraction
from pathlib import Path as FsPath
from typing import Any

from .agent import Bias, cost_ratio, traverse_fixed_goal
from .errors import NoPath
from .graph import TaskGraph, prune_to_st
from .minor import check_claim_A, extract_fan_minor, verify_minor
from .motivation import find_motivating_subgraph, min_motivating_reward, minimize_motivating_subgraph
from .parametric import brute_force_beta_paths, enumerate_beta_paths

FUZZ_BETAS = tuple(Fraction(p, q) for p, q in ((1, 4), (1, 3), (1, 2), (2, 3), (3, 4), (1, 1)))
SEARCH_EDGE_LIMIT = 10


def random_dag(rng: random.Random, max_nodes: int, max_cost: int = 9) -> TaskGraph:
    """Pruned random DAG on at most ``max_nodes`` nodes with integer costs."""
    if max_nodes < 2:
        raise ValueError("need room for s and t")
    while True:
        n = rng.randint(2, max_nodes)
        names = ["s"] + [f"n{i}" for i in range(1, n - 1)] + ["t"]
        density = rng.uniform(0.3, 0.8)
        edges = [
            (names[i], names[j], rng.randint(1, max_cost))
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < density
        ]
        try:
            return prune_to_st(TaskGraph(edges, "s", "t", names))
        except NoPath:
            continue


def corpus(seed: int, count: int, max_nodes: int) -> Iterator[TaskGraph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_dag(rng, max_nodes)


def check_instance(graph: TaskGraph, resolution: int = 10_000) -> dict[str, Any]:
    """Run every invariant on one graph.

    Returns the findings (one small dict per violated invariant) together
    with how many beta-paths and minimal certificates were examined.
    """
    found: list[dict[str, Any]] = []
    g = prune_to_st(graph)
    for beta in FUZZ_BETAS:
        bias = Bias(beta)
        bad = check_claim_A(g, bias)
        if bad is not None:
            found.append({"check": "claim_a", "beta": str(beta), "edge": list(bad)})
        if cost_ratio(g, bias) < 1:
            found.append({"check": "cost_ratio", "beta": str(beta)})
        model = extract_fan_minor(g, bias)
        if model is not None and verify_minor(g, model) is not None:
            found.append({"check": "minor", "beta": str(beta), "detail": str(verify_minor(g, model))})

    swept = enumerate_beta_paths(g)
    if len(swept) > len(g.edges):
        found.append({"check": "path_bound", "paths": len(swept), "edges": len(g.edges)})
    oracle = brute_force_beta_paths(g, resolution)
    if {p.path for p in swept} != oracle:
        found.append({"check": "sweep_vs_grid", "sweep": len(swept), "grid": len(oracle)})

    bias = Bias(Fraction(1, 2))
    reward = min_motivating_reward(g, bias).min_reward
    certs = [minimize_motivating_subgraph(g, g.edge_keys(), bias, reward)]
    if len(g.edges) <= SEARCH_EDGE_LIMIT:
        lower = reward * Fraction(3, 4)
        best = find_motivating_subgraph(g, bias, lower, max_edges=SEARCH_EDGE_LIMIT)
        if best is not None:
            certs.append(minimize_motivating_subgraph(g, best.edges, bias, lower))
    for cert in certs:
        if not cert.minimal or cert.structure is None:
            found.append({"check": "minimality", "edges": [list(e) for e in cert.edges]})
        elif not cert.structure.ok:
            found.append(
                {
                    "check": "theorem5",
                    "property_i": cert.structure.property_i,
                    "property_ii": cert.structure.property_ii,
                    "edges": [list(e) for e in cert.edges],
                }
            )
    return {"findings": found, "paths": len(swept), "certificates": len(certs)}


def fuzz(
    seed: int = 0,
    count: int = 100,
    max_nodes: int = 8,
    resolution: int = 10_000,
    out_dir: str | FsPath | None = None,
) -> dict[str, Any]:
    """Deterministic report over ``count`` random instances.

    Failing instances are written to ``out_dir`` as graph files when given.
    """
    from .serialize import dumps, graph_to_json

    violations: list[dict[str, Any]] = []
    paths_total = 0
    certificates = 0
    for index, graph in enumerate(corpus(seed, count, max_nodes)):
        result = check_instance(graph, resolution)
        findings = result["findings"]
        paths_total += result["paths"]
        certificates += result["certificates"]
        for item in findings:
            item["instance"] = index
            violations.append(item)
        if findings and out_dir is not None:
            target = FsPath(out_dir)
            target.mkdir(parents=True, exist_ok=True)
            (target / f"seed{seed}_instance{index}.json").write_text(dumps(graph_to_json(graph)))
    return {
        "seed": seed,
        "count": max(count, 0),
        "max_nodes": max_nodes,
        "resolution": resolution,
        "betas": [str(b) for b in FUZZ_BETAS],
        "beta_paths_total": paths_total,
        "minimal_certificates_checked": certificates,
        "violations": violations,
    }


def realized_paths(graph: TaskGraph) -> dict[str, list[str]]:
    """Realized path per fuzz beta; handy when reading a reproducer."""
    return {str(b): list(traverse_fixed_goal(graph, b).realized_path) for b in FUZZ_BETAS}
