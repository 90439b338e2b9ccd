from __future__ import annotations

from fractions import Fraction

import pytest

from biased_planner import figure1, gen_course
from biased_planner.graph import TaskGraph

HALF = Fraction(1, 2)


@pytest.fixture
def fig1() -> TaskGraph:
    return figure1()


@pytest.fixture
def course() -> TaskGraph:
    return gen_course(3, 2, (1, 4, 9), reward=16)


def all_paths(graph: TaskGraph, v: str):
    """Every v-t path, by plain recursion (test oracle)."""
    if v == graph.t:
        yield (v,)
        return
    for w in graph.successors(v):
        for rest in all_paths(graph, w):
            yield (v, *rest)


def oracle_plan(graph: TaskGraph, v: str, beta: Fraction):
    """Cheapest plan from v by brute force over all paths; ties to the earliest head."""
    best = None
    for p in all_paths(graph, v):
        if len(p) == 1:
            return p, Fraction(0)
        cost = graph.cost(p[0], p[1]) + beta * graph.path_cost(p[1:])
        key = (cost, graph.rank[p[1]])
        if best is None or key < best[0]:
            best = (key, p)
    return best[1], best[0][0]

