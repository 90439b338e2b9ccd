"""Naive present-biased agents (quasi-hyperbolic with delta = 1).

Standing at ``v`` the agent minimises ``c(v, w) + beta * d(w, t)`` over its
out-edges, takes one step, and re-plans. In the reward model it quits when
that minimum strictly exceeds ``beta * r``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import NoPath, ParameterError, ZeroShortestPath
from .graph import CostLike, Path, TaskGraph, parse_cost


@dataclass(frozen=True)
class Bias:
    """Present-bias parameter ``beta`` in (0, 1]; ``b`` is its inverse."""

    beta: Fraction

    def __post_init__(self) -> None:
        beta = parse_cost(self.beta)
        if not 0 < beta <= 1:
            raise ParameterError(f"beta must lie in (0, 1], got {beta}")
        object.__setattr__(self, "beta", beta)

    @property
    def b(self) -> Fraction:
        return 1 / self.beta

    @classmethod
    def of(cls, value: BiasLike) -> Bias:
        return value if isinstance(value, Bias) else cls(parse_cost(value))

    def __str__(self) -> str:
        return str(self.beta)


BiasLike = Union[Bias, Fraction, int, str]


@dataclass(frozen=True)
class Plan:
    node: str
    path: Path
    biased_cost: Fraction


@dataclass(frozen=True)
class Traversal:
    realized_path: Path
    plans: tuple[Plan, ...]
    reached: bool
    total_cost: Fraction
    reward: Fraction | None = None
    abandoned_at: str | None = field(default=None)

    @property
    def outcome(self) -> str:
        return "reached" if self.reached else "abandoned"

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        p = self.realized_path
        return tuple(zip(p, p[1:]))


def _choose(graph: TaskGraph, v: str, beta: Fraction) -> tuple[str, Fraction]:
    d = graph.dist
    best_head: str | None = None
    best: Fraction | None = None
    # successors come in topological order, so strict < keeps the earliest head on ties
    for w in graph.successors(v):
        if w not in d:
            continue
        value = graph.cost(v, w) + beta * d[w]
        if best is None or value < best:
            best, best_head = value, w
    if best_head is None or best is None:
        raise NoPath(f"{v} cannot reach {graph.t}")
    return best_head, best


def plan_at(graph: TaskGraph, v: str, bias: BiasLike) -> Plan:
    """Plan of an agent standing at ``v``: best first edge plus shortest continuation."""
    beta = Bias.of(bias).beta
    if v == graph.t:
        return Plan(v, (v,), Fraction(0))
    w, value = _choose(graph, v, beta)
    return Plan(v, (v,) + graph.shortest_path(w), value)


def perceived_cost(graph: TaskGraph, v: str, bias: BiasLike) -> Fraction:
    """Biased remaining cost at ``v``; this is what gets compared with ``beta * r``."""
    return plan_at(graph, v, bias).biased_cost


def _walk(graph: TaskGraph, beta: Fraction, reward: Fraction | None) -> Traversal:
    v = graph.s
    if v not in graph.dist:
        raise NoPath(f"no path from {graph.s} to {graph.t}")
    path = [v]
    plans: list[Plan] = []
    spent = Fraction(0)
    threshold = None if reward is None else beta * reward
    while v != graph.t:
        w, value = _choose(graph, v, beta)
        plans.append(Plan(v, (v,) + graph.shortest_path(w), value))
        if threshold is not None and value > threshold:
            return Traversal(tuple(path), tuple(plans), False, spent, reward, abandoned_at=v)
        spent += graph.cost(v, w)
        path.append(w)
        v = w
    return Traversal(tuple(path), tuple(plans), True, spent, reward)


def traverse_fixed_goal(graph: TaskGraph, bias: BiasLike) -> Traversal:
    """Follow the agent from ``s`` until it reaches ``t``."""
    return _walk(graph, Bias.of(bias).beta, None)


def traverse_with_reward(graph: TaskGraph, bias: BiasLike, reward: CostLike | None = None) -> Traversal:
    """Reward model: the agent may quit. ``reward`` defaults to the graph's own."""
    r = graph.reward if reward is None else parse_cost(reward)
    if r is None:
        raise ParameterError("a reward is required for the reward model")
    return _walk(graph, Bias.of(bias).beta, r)


def limit_path(graph: TaskGraph, beta: Fraction) -> Path:
    """Realized path for any ``beta`` in [0, 1], including the ``beta = 0`` limit agent."""
    return _walk(graph, Fraction(beta), None).realized_path


def cost_ratio(graph: TaskGraph, bias: BiasLike) -> Fraction:
    shortest = graph.dist.get(graph.s)
    if shortest is None:
        raise NoPath(f"no path from {graph.s} to {graph.t}")
    if shortest == 0:
        raise ZeroShortestPath("cost ratio undefined when d(s, t) = 0")
    return traverse_fixed_goal(graph, bias).total_cost / shortest
