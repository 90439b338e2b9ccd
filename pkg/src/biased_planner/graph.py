"""Task graphs: exact-cost DAGs with a start node ``s`` and a goal node ``t``."""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Mapping, Sequence
from decimal import Decimal
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Union

from .errors import (
    CycleDetected,
    DuplicateEdge,
    InvalidCost,
    MissingEndpoint,
    NoPath,
    NonPositiveCost,
)

Cost = Fraction
CostLike = Union[Fraction, int, str, Decimal]
Path = tuple[str, ...]


def parse_cost(value: CostLike) -> Fraction:
    """Parse an integer, decimal string, ``"p/q"`` string or Fraction exactly.

    Binary floats are refused: they cannot be reproduced exactly from text.
    """
    if isinstance(value, bool):
        raise InvalidCost(f"not a cost: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, float):
        raise InvalidCost(f"binary float {value!r} is not an exact cost; pass a string")
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidCost(f"cannot parse cost {value!r}") from exc
    raise InvalidCost(f"not a cost: {value!r}")


def format_cost(value: Fraction) -> str:
    """Render ``p/q`` (or ``p`` for integers)."""
    return str(value)


class Edge(NamedTuple):
    tail: str
    head: str
    cost: Fraction


class TaskGraph:
    """Immutable DAG with exact edge costs, validated on construction.

    ``order`` optionally fixes the topological order used for tie-breaking;
    subgraphs inherit their parent's order so that indifferent agents break
    ties the same way in both.
    """

    def __init__(
        self,
        edges: Iterable[tuple[str, str, CostLike]],
        s: str,
        t: str,
        nodes: Iterable[str] = (),
        *,
        reward: CostLike | None = None,
        allow_zero: bool = False,
        order: Sequence[str] | None = None,
    ) -> None:
        self._s = s
        self._t = t
        self._allow_zero = allow_zero
        self._reward = None if reward is None else parse_cost(reward)

        node_list: list[str] = []
        seen: set[str] = set()

        def add(node: str) -> None:
            if node not in seen:
                seen.add(node)
                node_list.append(node)

        for node in nodes:
            add(node)
        edge_list: list[Edge] = []
        costs: dict[tuple[str, str], Fraction] = {}
        for tail, head, cost in edges:
            if (tail, head) in costs:
                raise DuplicateEdge(f"parallel edge {tail}->{head}; subdivide it with an extra node")
            c = parse_cost(cost)
            costs[(tail, head)] = c
            edge_list.append(Edge(tail, head, c))
            add(tail)
            add(head)

        self._nodes = tuple(node_list)
        self._node_set = frozenset(node_list)
        self._costs = costs
        self._succ: dict[str, list[str]] = {v: [] for v in node_list}
        self._pred: dict[str, list[str]] = {v: [] for v in node_list}
        for e in edge_list:
            self._succ[e.tail].append(e.head)
            self._pred[e.head].append(e.tail)

        validate(self)

        if order is None:
            ranked = _lexicographic_topo(self._nodes, self._succ, self._pred, s)
        else:
            ranked = [v for v in order if v in self._node_set]
            if len(ranked) != len(self._nodes):
                raise ValueError("order does not cover every node")
        self._rank = {v: i for i, v in enumerate(ranked)}
        for e in edge_list:
            if self._rank[e.tail] >= self._rank[e.head]:
                raise ValueError(f"order is not topological for edge {e.tail}->{e.head}")
        self._order = tuple(ranked)
        for v in node_list:
            self._succ[v].sort(key=self._rank.__getitem__)
            self._pred[v].sort(key=self._rank.__getitem__)
        self._edges = tuple(sorted(edge_list, key=lambda e: (self._rank[e.tail], self._rank[e.head])))

    # basic accessors

    @property
    def s(self) -> str:
        return self._s

    @property
    def t(self) -> str:
        return self._t

    @property
    def nodes(self) -> tuple[str, ...]:
        """Nodes in canonical (topological) order."""
        return self._order

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def reward(self) -> Fraction | None:
        return self._reward

    @property
    def allow_zero(self) -> bool:
        return self._allow_zero

    @property
    def rank(self) -> Mapping[str, int]:
        return self._rank

    def __contains__(self, node: object) -> bool:
        return node in self._node_set

    def __len__(self) -> int:
        return len(self._nodes)

    def __repr__(self) -> str:
        return f"TaskGraph(nodes={len(self._nodes)}, edges={len(self._edges)}, s={self._s!r}, t={self._t!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TaskGraph):
            return NotImplemented
        return (
            self._s == other._s
            and self._t == other._t
            and self._node_set == other._node_set
            and self._costs == other._costs
            and self._reward == other._reward
        )

    def __hash__(self) -> int:
        return hash((self._s, self._t, self._node_set, frozenset(self._costs.items())))

    def successors(self, v: str) -> tuple[str, ...]:
        """Out-neighbours of ``v``, earliest in topological order first."""
        return tuple(self._succ[v])

    def predecessors(self, v: str) -> tuple[str, ...]:
        return tuple(self._pred[v])

    def cost(self, tail: str, head: str) -> Fraction:
        return self._costs[(tail, head)]

    def has_edge(self, tail: str, head: str) -> bool:
        return (tail, head) in self._costs

    def edge_keys(self) -> tuple[tuple[str, str], ...]:
        return tuple((e.tail, e.head) for e in self._edges)

    def path_cost(self, path: Sequence[str]) -> Fraction:
        return sum((self._costs[(u, w)] for u, w in zip(path, path[1:])), Fraction(0))

    # derived structure

    @cached_property
    def dist(self) -> dict[str, Fraction]:
        """Exact ``d(v, t)`` for every node that can reach ``t``."""
        d: dict[str, Fraction] = {self._t: Fraction(0)}
        for v in reversed(self._order):
            if v == self._t:
                continue
            best: Fraction | None = None
            for w in self._succ[v]:
                if w in d:
                    cand = self._costs[(v, w)] + d[w]
                    if best is None or cand < best:
                        best = cand
            if best is not None:
                d[v] = best
        return d

    @cached_property
    def shortest_next(self) -> dict[str, str]:
        """First hop of the canonical shortest path to ``t`` (earliest head on ties)."""
        d = self.dist
        nxt: dict[str, str] = {}
        for v in self._order:
            if v == self._t or v not in d:
                continue
            for w in self._succ[v]:
                if w in d and self._costs[(v, w)] + d[w] == d[v]:
                    nxt[v] = w
                    break
        return nxt

    def shortest_path(self, v: str) -> Path:
        """Canonical shortest ``v``-``t`` path."""
        if v not in self.dist:
            raise NoPath(f"{v} cannot reach {self._t}")
        path = [v]
        nxt = self.shortest_next
        while path[-1] != self._t:
            path.append(nxt[path[-1]])
        return tuple(path)

    # derived graphs

    def with_reward(self, reward: CostLike | None) -> TaskGraph:
        return TaskGraph(
            self._edges,
            self._s,
            self._t,
            self._nodes,
            reward=reward,
            allow_zero=self._allow_zero,
            order=self._order,
        )

    def subgraph(self, edges: Iterable[tuple[str, str]], *, keep_nodes: bool = False) -> TaskGraph:
        """Graph restricted to ``edges`` (which must exist here), keeping this graph's order."""
        kept = []
        for tail, head in edges:
            kept.append((tail, head, self._costs[(tail, head)]))
        nodes = self._nodes if keep_nodes else (self._s, self._t)
        return TaskGraph(
            kept,
            self._s,
            self._t,
            nodes,
            reward=self._reward,
            allow_zero=self._allow_zero,
            order=self._order,
        )

    def without_nodes(self, removed: Iterable[str]) -> TaskGraph:
        gone = set(removed)
        if self._s in gone or self._t in gone:
            raise MissingEndpoint("cannot delete s or t")
        return self.subgraph(
            ((e.tail, e.head) for e in self._edges if e.tail not in gone and e.head not in gone),
            keep_nodes=False,
        )


def _lexicographic_topo(
    nodes: Sequence[str],
    succ: Mapping[str, Sequence[str]],
    pred: Mapping[str, Sequence[str]],
    s: str,
) -> list[str]:
    indeg = {v: len(pred[v]) for v in nodes}
    heap = [(v != s, v) for v in nodes if indeg[v] == 0]
    heapq.heapify(heap)
    out: list[str] = []
    while heap:
        _, v = heapq.heappop(heap)
        out.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, (w != s, w))
    return out


def _find_cycle(nodes: Sequence[str], succ: Mapping[str, Sequence[str]]) -> list[str] | None:
    white, grey, black = 0, 1, 2
    colour = dict.fromkeys(nodes, white)
    for root in nodes:
        if colour[root] != white:
            continue
        stack: list[tuple[str, int]] = [(root, 0)]
        trail: list[str] = [root]
        colour[root] = grey
        while stack:
            v, i = stack[-1]
            children = succ[v]
            if i < len(children):
                stack[-1] = (v, i + 1)
                w = children[i]
                if colour[w] == grey:
                    return trail[trail.index(w) :] + [w]
                if colour[w] == white:
                    colour[w] = grey
                    stack.append((w, 0))
                    trail.append(w)
            else:
                colour[v] = black
                stack.pop()
                trail.pop()
    return None


def validate(graph: TaskGraph) -> None:
    """Raise if ``graph`` has a cycle, a missing endpoint or a bad cost."""
    if graph._s not in graph._node_set or graph._t not in graph._node_set:
        raise MissingEndpoint(f"s={graph._s!r} and t={graph._t!r} must both be nodes")
    if graph._s == graph._t:
        raise MissingEndpoint("s and t must differ")
    for (tail, head), c in graph._costs.items():
        if c < 0 or (c == 0 and not graph._allow_zero):
            raise NonPositiveCost(f"edge {tail}->{head} has cost {c}")
    cycle = _find_cycle(graph._nodes, graph._succ)
    if cycle is not None:
        raise CycleDetected(cycle)


def topo_order(graph: TaskGraph) -> dict[str, int]:
    """Position of every node in the canonical topological order."""
    return dict(graph.rank)


def dist_to_t(graph: TaskGraph) -> dict[str, Fraction]:
    return dict(graph.dist)


def _reachable(start: str, adj: Mapping[str, Sequence[str]]) -> set[str]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def st_nodes(graph: TaskGraph) -> set[str]:
    """Nodes lying on at least one ``s``-``t`` path."""
    forward = _reachable(graph.s, graph._succ)
    backward = _reachable(graph.t, graph._pred)
    return forward & backward


def prune_to_st(graph: TaskGraph) -> TaskGraph:
    """Drop every node not on some ``s``-``t`` path."""
    keep = st_nodes(graph)
    if graph.t not in keep:
        raise NoPath(f"no path from {graph.s} to {graph.t}")
    if len(keep) == len(graph.nodes):
        return graph
    return graph.subgraph((e.tail, e.head) for e in graph.edges if e.tail in keep and e.head in keep)


def is_pruned(graph: TaskGraph) -> bool:
    return len(st_nodes(graph)) == len(graph.nodes)
