"""Ranks along the agent's path and the fan minor they force.

A node's rank is a rounded logarithm (base ``b = 1/beta``) of its distance
to ``t`` relative to ``d(s, t)``. Along the realized path ranks rise by at
most one per step; the last node of each rank, together with shortest paths
back to ``t``, spells out a fan in the undirected skeleton.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .agent import Bias, BiasLike, traverse_fixed_goal
from .errors import NoPath, ZeroShortestPath
from .graph import TaskGraph, prune_to_st


def _base_distance(graph: TaskGraph) -> Fraction:
    base = graph.dist.get(graph.s)
    if base is None:
        raise NoPath(f"no path from {graph.s} to {graph.t}")
    if base == 0:
        raise ZeroShortestPath("ranks need d(s, t) > 0")
    return base


def node_rank(distance: Fraction, base: Fraction, b: Fraction) -> int | None:
    """Smallest ``j`` with ``distance <= b**j * base`` (0 if already within ``base``).

    ``None`` means no finite rank, which only happens for ``b = 1``.
    """
    if distance <= base:
        return 0
    if b == 1:
        return None
    j, bound = 0, base
    while distance > bound:
        bound *= b
        j += 1
    return j


def rank_profile(graph: TaskGraph, bias: BiasLike) -> dict[str, int | None]:
    b = Bias.of(bias).b
    base = _base_distance(graph)
    return {v: node_rank(dv, base, b) for v, dv in graph.dist.items()}


def check_claim_A(graph: TaskGraph, bias: BiasLike) -> tuple[str, str] | None:
    """First edge of the realized path whose rank jumps by more than one, if any."""
    ranks = rank_profile(graph, bias)
    path = traverse_fixed_goal(graph, bias).realized_path
    for v, w in zip(path, path[1:]):
        rv, rw = ranks[v], ranks[w]
        if rv is None or rw is None or rw > rv + 1:
            return (v, w)
    return None


@dataclass(frozen=True)
class MinorModel:
    """Super-nodes of a fan: path segments ``R_0..R_k`` plus a hub ``S``.

    ``anchors[j]`` is the last rank-``j`` node of the path prefix; it lies in
    ``segments[j]`` and has an edge into the hub.
    """

    k: int
    segments: tuple[frozenset[str], ...]
    hub: frozenset[str]
    anchors: tuple[str, ...] = ()
    max_rank: int = 0

    @property
    def fan_size(self) -> int:
        """Number of path super-nodes, i.e. the fan is ``F_{k+1}``."""
        return len(self.segments)


@dataclass(frozen=True)
class Violation:
    condition: str
    detail: str

    def __str__(self) -> str:
        return f"{self.condition}: {self.detail}"


def _skeleton(graph: TaskGraph) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {v: set() for v in graph.nodes}
    for e in graph.edges:
        adj[e.tail].add(e.head)
        adj[e.head].add(e.tail)
    return adj


def _connected(nodes: frozenset[str], adj: dict[str, set[str]]) -> bool:
    start = next(iter(nodes))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in nodes and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(nodes)


def _adjacent(a: Iterable[str], b: frozenset[str], adj: dict[str, set[str]]) -> bool:
    return any(adj[v] & b for v in a)


def verify_minor(graph: TaskGraph, model: MinorModel) -> Violation | None:
    """Check the fan structure in the skeleton; return the first failed condition."""
    adj = _skeleton(graph)
    sets = list(model.segments) + [model.hub]
    names = [f"R_{j}" for j in range(len(model.segments))] + ["S"]
    if len(model.segments) != model.k + 1:
        return Violation("shape", f"k={model.k} needs {model.k + 1} segments, got {len(model.segments)}")
    for name, group in zip(names, sets):
        if not group:
            return Violation("non-empty", f"{name} is empty")
        missing = sorted(v for v in group if v not in adj)
        if missing:
            return Violation("membership", f"{name} has unknown nodes {missing}")
    owner: dict[str, str] = {}
    for name, group in zip(names, sets):
        for v in sorted(group):
            if v in owner:
                return Violation("disjointness", f"{v} is in both {owner[v]} and {name}")
            owner[v] = name
    for name, group in zip(names, sets):
        if not _connected(group, adj):
            return Violation("connectivity", f"{name} is not connected in the skeleton")
    for j in range(len(model.segments) - 1):
        if not _adjacent(model.segments[j], model.segments[j + 1], adj):
            return Violation("path adjacency", f"no edge between R_{j} and R_{j + 1}")
    for j, seg in enumerate(model.segments):
        if not _adjacent(seg, model.hub, adj):
            return Violation("hub adjacency", f"no edge between S and R_{j}")
    return None


def _anchors(prefix: Sequence[str], ranks: dict[str, int | None], k: int) -> list[int] | None:
    last: dict[int, int] = {}
    for i, v in enumerate(prefix):
        r = ranks[v]
        if r is not None:
            last[r] = i
    out = []
    for j in range(k + 1):
        if j not in last:
            return None
        out.append(last[j])
    return out


def extract_fan_minor(graph: TaskGraph, bias: BiasLike) -> MinorModel | None:
    """Build the largest fan the rank structure of the realized path supports.

    Returns ``None`` when fewer than three path super-nodes (``k < 2``) survive.
    If a shortest path from some anchor re-enters the path prefix (possible on
    inputs far from the exponential-ratio regime) ``k`` is shrunk to the
    longest verified prefix of anchors.
    """
    g = prune_to_st(graph)
    ranks = rank_profile(g, bias)
    path = traverse_fixed_goal(g, bias).realized_path
    finite = [ranks[v] for v in path if ranks[v] is not None]
    max_rank = max(finite) if finite else 0
    if max_rank < 2:
        return None
    end = next(i for i, v in enumerate(path) if ranks[v] == max_rank)
    prefix = path[: end + 1]
    anchors = _anchors(prefix, ranks, max_rank)
    if anchors is None:
        return None

    k = -1
    for j, idx in enumerate(anchors):
        q = g.shortest_path(prefix[idx])
        if set(q) & set(prefix[: idx]) or set(q) & set(prefix[idx + 1 :]):
            break
        k = j
    if k < 2:
        return None

    cut = anchors[: k + 1]
    prefix = prefix[: cut[-1] + 1]
    segments = []
    start = 0
    for idx in cut:
        segments.append(frozenset(prefix[start : idx + 1]))
        start = idx + 1
    hub: set[str] = set()
    for idx in cut:
        hub.update(g.shortest_path(prefix[idx])[1:])
    model = MinorModel(
        k=k,
        segments=tuple(segments),
        hub=frozenset(hub),
        anchors=tuple(prefix[i] for i in cut),
        max_rank=max_rank,
    )
    if verify_minor(g, model) is not None:
        return None
    return model
