"""Rewards and subgraphs that get a present-biased agent all the way to ``t``."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .agent import Bias, BiasLike, Traversal, traverse_fixed_goal, traverse_with_reward
from .errors import NoPath, NotFound, NotMotivating, SizeLimit
from .graph import CostLike, Path, TaskGraph, parse_cost, prune_to_st
from .instances import figure4_topology

EdgeKey = tuple[str, str]

DEFAULT_MAX_EDGES = 16


@dataclass(frozen=True)
class MotivationReport:
    min_reward: Fraction
    argmax_node: str
    peak_nodes: tuple[str, ...]
    trace: Traversal


def min_motivating_reward(graph: TaskGraph, bias: BiasLike) -> MotivationReport:
    """Smallest reward at ``t`` for which the agent finishes.

    Rewards never change which edge the agent picks, only whether it goes on,
    so the answer is the largest perceived cost along the fixed-goal path,
    divided by beta.
    """
    b = Bias.of(bias)
    g = prune_to_st(graph)
    walk = traverse_fixed_goal(g, b)
    peak = max(p.biased_cost for p in walk.plans) if walk.plans else Fraction(0)
    peaks = tuple(p.node for p in walk.plans if p.biased_cost == peak)
    reward = peak / b.beta
    trace = traverse_with_reward(g, b, reward)
    return MotivationReport(reward, peaks[0] if peaks else g.s, peaks, trace)


def _canonical(edges: Iterable[EdgeKey]) -> tuple[EdgeKey, ...]:
    return tuple(sorted(edges))


class _Simulator:
    """Memoised reward-model runs on edge subsets of one graph."""

    def __init__(self, graph: TaskGraph, bias: Bias, reward: Fraction) -> None:
        self.graph = graph
        self.bias = bias
        self.reward = reward
        self._cache: dict[frozenset[EdgeKey], Traversal | None] = {}

    def run(self, edges: Iterable[EdgeKey]) -> Traversal | None:
        """Traversal on the subgraph, or ``None`` when ``s`` cannot reach ``t`` there."""
        key = frozenset(edges)
        if key not in self._cache:
            try:
                sub = prune_to_st(self.graph.subgraph(key))
            except NoPath:
                self._cache[key] = None
            else:
                self._cache[key] = traverse_with_reward(sub, self.bias, self.reward)
        return self._cache[key]

    def motivates(self, edges: Iterable[EdgeKey]) -> bool:
        walk = self.run(edges)
        return walk is not None and walk.reached


def motivates(graph: TaskGraph, bias: BiasLike, reward: CostLike) -> bool:
    try:
        g = prune_to_st(graph)
    except NoPath:
        return False
    return traverse_with_reward(g, bias, reward).reached


def _closed(edges: Sequence[EdgeKey], s: str, t: str) -> bool:
    """Whether every edge lies on an ``s``-``t`` path using only ``edges``."""
    succ: dict[str, list[str]] = {}
    pred: dict[str, list[str]] = {}
    for u, w in edges:
        succ.setdefault(u, []).append(w)
        pred.setdefault(w, []).append(u)

    def reach(start: str, adj: dict[str, list[str]]) -> set[str]:
        seen = {start}
        stack = [start]
        while stack:
            for w in adj.get(stack.pop(), ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    fwd = reach(s, succ)
    if t not in fwd:
        return False
    back = reach(t, pred)
    return all(u in fwd and w in back for u, w in edges)


@dataclass(frozen=True)
class Theorem5Report:
    """Structure of a motivating subgraph relative to the agent's path ``P*``.

    ``property_i``: every off-path edge lies on a bypass of ``P*``.
    ``property_ii``: no node has two or more off-path out-edges.
    """

    p_star: Path
    bypasses: dict[EdgeKey, Path | None]
    off_path_out_degree: dict[str, int]
    property_i: bool
    property_ii: bool
    unbypassed_edges: tuple[EdgeKey, ...] = ()
    branching_nodes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.property_i and self.property_ii


@dataclass(frozen=True)
class SubgraphCert:
    edges: tuple[EdgeKey, ...]
    traversal: Traversal
    minimal: bool
    structure: Theorem5Report | None = field(default=None)


def find_motivating_subgraph(
    graph: TaskGraph,
    bias: BiasLike,
    reward: CostLike,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> SubgraphCert | None:
    """Largest motivating subgraph, by exhaustive search over edge subsets.

    Subsets are tried largest first and, within a size, in lexicographic order
    of their sorted edge lists. Only subsets in which every edge lies on an
    ``s``-``t`` path are simulated; any other subset behaves exactly like its
    pruned core, which is visited later anyway.
    """
    g = prune_to_st(graph)
    if len(g.edges) > max_edges:
        raise SizeLimit(len(g.edges), max_edges)
    b = Bias.of(bias)
    r = parse_cost(reward)
    sim = _Simulator(g, b, r)
    everything = _canonical(g.edge_keys())
    for size in range(len(everything), 0, -1):
        for subset in itertools.combinations(everything, size):
            if not _closed(subset, g.s, g.t):
                continue
            if sim.motivates(subset):
                return _certify(g, sim, subset)
    return None


def _certify(graph: TaskGraph, sim: _Simulator, edges: Sequence[EdgeKey]) -> SubgraphCert:
    walk = sim.run(edges)
    assert walk is not None and walk.reached
    minimal = _single_deletion_minimal(sim, edges)
    cert = SubgraphCert(_canonical(edges), walk, minimal)
    if minimal:
        cert = SubgraphCert(cert.edges, walk, True, check_theorem5(graph, cert))
    return cert


def _single_deletion_minimal(sim: _Simulator, edges: Sequence[EdgeKey]) -> bool:
    kept = list(edges)
    return not any(sim.motivates(kept[:i] + kept[i + 1 :]) for i in range(len(kept)))


def is_minimal_motivating(
    graph: TaskGraph,
    edges: Iterable[EdgeKey],
    bias: BiasLike,
    reward: CostLike,
    *,
    exhaustive: bool = False,
) -> bool:
    """Whether ``edges`` motivates but no single-edge deletion of it does.

    With ``exhaustive`` every proper subset is checked instead of only the
    single deletions.
    """
    sim = _Simulator(graph, Bias.of(bias), parse_cost(reward))
    kept = _canonical(edges)
    if not sim.motivates(kept):
        raise NotMotivating("the given subgraph does not motivate the agent")
    if not exhaustive:
        return _single_deletion_minimal(sim, kept)
    for size in range(len(kept) - 1, 0, -1):
        for subset in itertools.combinations(kept, size):
            if sim.motivates(subset):
                return False
    return True


def minimize_motivating_subgraph(
    graph: TaskGraph,
    edges: Iterable[EdgeKey],
    bias: BiasLike,
    reward: CostLike,
) -> SubgraphCert:
    """Greedily delete edges (lexicographic order) while the agent still finishes."""
    g = prune_to_st(graph)
    sim = _Simulator(g, Bias.of(bias), parse_cost(reward))
    kept = list(_canonical(edges))
    if not sim.motivates(kept):
        raise NotMotivating("the given subgraph does not motivate the agent")
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            trial = kept[:i] + kept[i + 1 :]
            if sim.motivates(trial):
                core = prune_to_st(g.subgraph(trial))
                kept = list(_canonical(core.edge_keys()))
                changed = True
                break
    return _certify(g, sim, kept)


def _bypass_end(
    start: str, adj: dict[str, list[str]], on_path: set[str]
) -> list[str] | None:
    """Shortest walk from ``start`` to a path node whose interior avoids the path."""
    if start in on_path:
        return [start]
    parent: dict[str, str | None] = {start: None}
    queue = [start]
    for v in queue:
        for w in adj.get(v, ()):
            if w in parent:
                continue
            parent[w] = v
            if w in on_path:
                trail = [w]
                while parent[trail[-1]] is not None:
                    trail.append(parent[trail[-1]])  # type: ignore[arg-type]
                return trail[::-1]
            queue.append(w)
    return None


def check_theorem5(graph: TaskGraph, cert: SubgraphCert) -> Theorem5Report:
    """Bypass and out-degree structure of ``cert`` around the agent's path."""
    sub = graph.subgraph(cert.edges)
    p_star = cert.traversal.realized_path
    on_path = set(p_star)
    path_edges = set(zip(p_star, p_star[1:]))
    succ: dict[str, list[str]] = {}
    pred: dict[str, list[str]] = {}
    for u, w in cert.edges:
        succ.setdefault(u, []).append(w)
        pred.setdefault(w, []).append(u)

    bypasses: dict[EdgeKey, Path | None] = {}
    degree: dict[str, int] = {v: 0 for v in sub.nodes}
    for u, w in cert.edges:
        if (u, w) in path_edges:
            continue
        degree[u] += 1
        back = _bypass_end(u, pred, on_path)
        fwd = _bypass_end(w, succ, on_path)
        bypasses[(u, w)] = None if back is None or fwd is None else tuple(back[::-1] + fwd)
    unbypassed = tuple(e for e, q in bypasses.items() if q is None)
    branching = tuple(v for v in sub.nodes if degree[v] > 1)
    return Theorem5Report(
        p_star=p_star,
        bypasses=bypasses,
        off_path_out_degree=degree,
        property_i=not unbypassed,
        property_ii=not branching,
        unbypassed_edges=unbypassed,
        branching_nodes=branching,
    )


def search_fig4_instance(
    bound: int = 6,
    bias: BiasLike = Fraction(1, 2),
) -> TaskGraph:
    """First integer-cost instance on the ``s-a-{b,c}-t`` topology that only motivates whole.

    The agent must plan ``s-a-b-t`` at ``s``, switch to ``a-c-t`` at ``a``
    and finish, while neither single path and no proper subgraph motivates.
    Costs range over ``1..bound``; the reward is the smallest one that gets the
    agent through the whole graph, which makes the single paths easiest to fail.
    """
    b = Bias.of(bias)
    upper = ("s", "a", "b", "t")
    lower = ("s", "a", "c", "t")
    for costs in itertools.product(range(1, bound + 1), repeat=5):
        g = figure4_topology(costs)
        walk = traverse_fixed_goal(g, b)
        if walk.realized_path != lower or walk.plans[0].path != upper:
            continue
        r = min_motivating_reward(g, b).min_reward
        if motivates(g.subgraph(zip(upper, upper[1:])), b, r):
            continue
        if motivates(g.subgraph(zip(lower, lower[1:])), b, r):
            continue
        if is_minimal_motivating(g, g.edge_keys(), b, r, exhaustive=True):
            return g.with_reward(r)
    raise NotFound(f"no instance with costs up to {bound}")
