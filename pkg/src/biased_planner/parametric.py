"""Which paths do agents take as beta sweeps over [0, 1]?

At each node the agent's choice is the lower envelope of one line per
out-edge, ``c(v, w) + beta * d(w, t)``. Labelling every edge with the
beta-interval on which it wins turns path enumeration into an interval
labels instance, which a single left-to-right sweep solves in at most
``|E|`` steps.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .agent import limit_path
from .errors import MalformedLabeling
from .graph import Path, TaskGraph, prune_to_st

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Interval:
    """Non-empty sub-interval of [0, 1] with explicit endpoint closure."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = False

    def __post_init__(self) -> None:
        if self.lo > self.hi or (self.lo == self.hi and not (self.lo_closed and self.hi_closed)):
            raise ValueError(f"empty interval {self!s}")

    def contains(self, x: Fraction) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def contains_right_of(self, x: Fraction) -> bool:
        """True when ``(x, x + eps)`` lies inside for every small ``eps``."""
        return self.lo <= x < self.hi

    def intersect(self, other: Interval) -> Interval | None:
        if self.lo > other.lo:
            lo, lo_closed = self.lo, self.lo_closed
        elif self.lo < other.lo:
            lo, lo_closed = other.lo, other.lo_closed
        else:
            lo, lo_closed = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hi_closed = self.hi, self.hi_closed
        elif self.hi > other.hi:
            hi, hi_closed = other.hi, other.hi_closed
        else:
            hi, hi_closed = self.hi, self.hi_closed and other.hi_closed
        if lo > hi or (lo == hi and not (lo_closed and hi_closed)):
            return None
        return Interval(lo, hi, lo_closed, hi_closed)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __str__(self) -> str:
        return f"{'[' if self.lo_closed else '('}{self.lo}, {self.hi}{']' if self.hi_closed else ')'}"


class Line(NamedTuple):
    intercept: Fraction
    slope: Fraction

    def at(self, x: Fraction) -> Fraction:
        return self.intercept + self.slope * x


def _winner(lines: Sequence[Line], x: Fraction) -> int:
    best = 0
    best_value = lines[0].at(x)
    for i in range(1, len(lines)):
        value = lines[i].at(x)
        if value < best_value:
            best, best_value = i, value
    return best


def lower_envelope(lines: Sequence[Line]) -> list[Interval | None]:
    """Sub-interval of [0, 1] on which each line is the (tie-broken) minimum.

    Lines earlier in ``lines`` win ties, so ordering them by head position
    reproduces the agent's tie-breaking rule pointwise. Every intersection
    point is exact.
    """
    if not lines:
        raise ValueError("need at least one line")
    cuts = {ZERO, ONE}
    for i, a in enumerate(lines):
        for b in lines[i + 1 :]:
            if a.slope != b.slope:
                x = (b.intercept - a.intercept) / (a.slope - b.slope)
                if ZERO < x < ONE:
                    cuts.add(x)
    xs = sorted(cuts)

    # pieces alternate: {x0}, (x0, x1), {x1}, ..., {x_last}
    pieces: list[tuple[Fraction, Fraction, bool]] = []
    owners: list[int] = []
    for i, x in enumerate(xs):
        pieces.append((x, x, True))
        owners.append(_winner(lines, x))
        if i + 1 < len(xs):
            nxt = xs[i + 1]
            pieces.append((x, nxt, False))
            owners.append(_winner(lines, (x + nxt) / 2))

    result: list[Interval | None] = [None] * len(lines)
    span: dict[int, tuple[int, int]] = {}
    for idx, owner in enumerate(owners):
        first, last = span.get(owner, (idx, idx))
        if last not in (idx, idx - 1):
            raise AssertionError("lower envelope ownership is not contiguous")
        span[owner] = (first, idx)
    for owner, (first, last) in span.items():
        lo, _, lo_point = pieces[first]
        _, hi, hi_point = pieces[last]
        result[owner] = Interval(lo, hi, lo_closed=lo_point, hi_closed=hi_point)
    return result


@dataclass(frozen=True)
class IntervalLabeling:
    """Edge intervals of an interval labels instance, keyed by ``(tail, head)``."""

    s: str
    t: str
    labels: Mapping[tuple[str, str], Interval | None]

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return tuple(self.labels)

    def out_edges(self, v: str) -> list[tuple[tuple[str, str], Interval | None]]:
        return [(e, iv) for e, iv in self.labels.items() if e[0] == v]

    def breakpoints(self) -> list[Fraction]:
        points = {ZERO, ONE}
        for iv in self.labels.values():
            if iv is not None:
                points.update((iv.lo, iv.hi))
        return sorted(points)

    def check(self) -> None:
        """Raise MalformedLabeling unless every node's intervals partition [0, 1]."""
        by_tail: dict[str, list[Interval]] = {}
        for (tail, _), iv in self.labels.items():
            by_tail.setdefault(tail, [])
            if iv is not None:
                if iv.lo < 0 or iv.hi > 1:
                    raise MalformedLabeling(f"interval {iv} on an edge out of {tail} leaves [0, 1]")
                by_tail[tail].append(iv)
        for tail, ivs in by_tail.items():
            ivs.sort(key=lambda iv: (iv.lo, not iv.lo_closed))
            if not ivs:
                raise MalformedLabeling(f"node {tail} has no non-empty interval")
            if ivs[0].lo != 0 or not ivs[0].lo_closed:
                raise MalformedLabeling(f"intervals out of {tail} do not cover 0")
            for a, b in zip(ivs, ivs[1:]):
                if a.hi != b.lo or a.hi_closed == b.lo_closed:
                    raise MalformedLabeling(f"intervals {a} and {b} out of {tail} overlap or leave a gap")
            if ivs[-1].hi != 1 or not ivs[-1].hi_closed:
                raise MalformedLabeling(f"intervals out of {tail} do not cover 1")


@dataclass(frozen=True)
class ValidPath:
    path: Path
    witness: Interval


def build_interval_labels(graph: TaskGraph) -> IntervalLabeling:
    """Label each edge ``(v, w)`` with the betas for which an agent at ``v`` takes it."""
    d = graph.dist
    labels: dict[tuple[str, str], Interval | None] = {}
    for v in graph.nodes:
        heads = [w for w in graph.successors(v) if w in d]
        if v == graph.t or not heads:
            continue
        lines = [Line(graph.cost(v, w), d[w]) for w in heads]
        for w, iv in zip(heads, lower_envelope(lines)):
            labels[(v, w)] = iv
    return IntervalLabeling(graph.s, graph.t, labels)


def _path_at(labeling: IntervalLabeling, succ: Mapping[str, list], x: Fraction, right: bool) -> tuple[Path, Interval]:
    v = labeling.s
    path = [v]
    witness = Interval(ZERO, ONE, True, True)
    while v != labeling.t:
        chosen = None
        for (_, w), iv in succ.get(v, ()):
            if iv is None:
                continue
            if iv.contains_right_of(x) if right else iv.contains(x):
                chosen = (w, iv)
                break
        if chosen is None:
            raise MalformedLabeling(f"no interval out of {v} contains {x}{'+' if right else ''}")
        w, iv = chosen
        meet = witness.intersect(iv)
        if meet is None:
            raise MalformedLabeling(f"empty witness while following {path + [w]}")
        witness = meet
        path.append(w)
        v = w
    return tuple(path), witness


def enumerate_valid_paths(labeling: IntervalLabeling) -> list[ValidPath]:
    """All valid paths with their (disjoint, covering) witness intervals, left to right."""
    labeling.check()
    succ: dict[str, list] = {}
    for e, iv in labeling.labels.items():
        succ.setdefault(e[0], []).append((e, iv))
    found: list[ValidPath] = []
    x, right = ZERO, False
    while True:
        path, witness = _path_at(labeling, succ, x, right)
        found.append(ValidPath(path, witness))
        if len(found) > len(labeling.labels):
            raise AssertionError("sweep produced more valid paths than edges")
        if witness.hi == ONE and witness.hi_closed:
            return found
        x, right = witness.hi, witness.hi_closed


def enumerate_beta_paths(graph: TaskGraph) -> list[ValidPath]:
    """Every path ``P_beta(s, t)`` for beta in [0, 1], with the betas producing it."""
    pruned = prune_to_st(graph)
    found = enumerate_valid_paths(build_interval_labels(pruned))
    if len(found) > len(pruned.edges):
        raise AssertionError(f"{len(found)} paths exceed {len(pruned.edges)} edges")
    return found


def _integer_scale(values: Iterable[Fraction]) -> int:
    scale = 1
    for v in values:
        scale = scale * v.denominator // math.gcd(scale, v.denominator)
    return scale


def grid_paths(graph: TaskGraph, resolution: int) -> set[Path]:
    """Realized paths at ``beta = k / resolution`` for ``k = 1..resolution``.

    Vectorised over the grid: costs are scaled to integers and every node's
    choice is an argmin over out-edges ordered by head position, which is the
    agent's tie-breaking rule.
    """
    if resolution < 1:
        raise ValueError("resolution must be at least 1")
    g = prune_to_st(graph)
    d = g.dist
    index = {v: i for i, v in enumerate(g.nodes)}
    scale = _integer_scale([e.cost for e in g.edges] + list(d.values()))
    biggest = max([abs(e.cost) for e in g.edges] + list(d.values()))
    fits = biggest * scale * resolution * 2 < 2**62
    dtype = np.int64 if fits else object
    ks = np.arange(1, resolution + 1, dtype=np.int64).astype(dtype)

    t_idx = index[g.t]
    choice = np.full((len(g.nodes), resolution), t_idx, dtype=np.int64)
    for v in g.nodes:
        if v == g.t:
            continue
        heads = g.successors(v)
        values = np.stack(
            [
                resolution * int(g.cost(v, w) * scale) + ks * int(d[w] * scale)
                for w in heads
            ],
            axis=0,
        )
        picks = np.argmin(values, axis=0)
        choice[index[v]] = np.array([index[w] for w in heads], dtype=np.int64)[picks]

    cur = np.full(resolution, index[g.s], dtype=np.int64)
    rows = [cur]
    cols = np.arange(resolution)
    while not np.all(cur == t_idx):
        cur = choice[cur, cols]
        rows.append(cur)
    table = np.stack(rows, axis=1)
    names = g.nodes
    paths: set[Path] = set()
    for row in np.unique(table, axis=0):
        nodes = [names[i] for i in row]
        paths.add(tuple(nodes[: nodes.index(g.t) + 1]))
    return paths


def brute_force_beta_paths(graph: TaskGraph, resolution: int, *, breakpoints: bool = True) -> set[Path]:
    """Oracle for :func:`enumerate_beta_paths` by direct simulation.

    Runs the agent on the beta grid and, when ``breakpoints`` is set, exactly at
    every labelling breakpoint and at the midpoint between consecutive ones.
    """
    g = prune_to_st(graph)
    paths = grid_paths(g, resolution)
    if breakpoints:
        cuts = build_interval_labels(g).breakpoints()
        probes = set(cuts)
        probes.update((a + b) / 2 for a, b in zip(cuts, cuts[1:]))
        for x in sorted(probes):
            paths.add(limit_path(g, x))
    return paths
