"""Generators for the named instance families."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from .agent import Bias, BiasLike
from .errors import ParameterError, PrecisionViolation
from .graph import CostLike, TaskGraph, parse_cost, prune_to_st
from .parametric import Interval, IntervalLabeling


def figure1() -> TaskGraph:
    """The introductory seven-node example: shortest path 20, beta = 1/2 agent pays 26."""
    return TaskGraph(
        [
            ("s", "a", 16),
            ("a", "b", 2),
            ("b", "t", 2),
            ("s", "c", 8),
            ("c", "d", 8),
            ("d", "t", 8),
            ("c", "e", 2),
            ("e", "t", 16),
        ],
        "s",
        "t",
    )


def three_node_path(first: CostLike = 1, second: CostLike = 4, reward: CostLike | None = None) -> TaskGraph:
    return TaskGraph([("s", "v1", first), ("v1", "t", second)], "s", "t", reward=reward)


def chain(costs: Sequence[CostLike], reward: CostLike | None = None) -> TaskGraph:
    """Path ``s, v1, ..., t`` with the given step costs."""
    if not costs:
        raise ParameterError("a chain needs at least one step")
    names = ["s"] + [f"v{i}" for i in range(1, len(costs))] + ["t"]
    return TaskGraph(list(zip(names, names[1:], costs)), "s", "t", reward=reward)


def _positive(name: str, value: CostLike) -> Fraction:
    v = parse_cost(value)
    if v <= 0:
        raise ParameterError(f"{name} must be positive, got {v}")
    return v


def _day_names(n: int) -> list[str]:
    return ["s"] + [f"v{i}" for i in range(1, n + 1)]


def gen_akerlof(n: int, c: CostLike, x: CostLike) -> TaskGraph:
    """Procrastination chain: each day costs ``x`` to postpone, ``c`` to finish.

    A beta-agent postpones every day exactly when ``(b - 1) c > b x``.
    """
    if n < 0:
        raise ParameterError("n must be non-negative")
    c, x = _positive("c", c), _positive("x", x)
    days = _day_names(n)
    edges = [(days[i], days[i + 1], x) for i in range(n)]
    edges += [(v, "t", c) for v in days]
    return TaskGraph(edges, "s", "t")


def gen_exponential(n: int, mu: CostLike, allow_zero: bool = False) -> TaskGraph:
    """Free postponement, finishing on day ``j`` costs ``mu**j``."""
    if not allow_zero:
        raise ParameterError("this family uses zero-cost edges; pass allow_zero=True")
    if n < 0:
        raise ParameterError("n must be non-negative")
    mu = parse_cost(mu)
    if mu <= 1:
        raise ParameterError(f"mu must exceed 1, got {mu}")
    days = _day_names(n)
    edges = [(days[j], days[j + 1], 0) for j in range(n)]
    edges += [(v, "t", mu**j) for j, v in enumerate(days)]
    return TaskGraph(edges, "s", "t", allow_zero=True)


def gen_exponential_eps(n: int, mu: CostLike, eps: CostLike, bias: BiasLike) -> TaskGraph:
    """Positive-cost variant: postponing costs ``eps``.

    ``eps`` must keep postponing strictly attractive for an agent with ``bias``
    on every day, i.e. ``eps + beta * mu**(j+1) < mu**j``.
    """
    if n < 0:
        raise ParameterError("n must be non-negative")
    mu = parse_cost(mu)
    if mu <= 1:
        raise ParameterError(f"mu must exceed 1, got {mu}")
    eps = _positive("eps", eps)
    beta = Bias.of(bias).beta
    for j in range(n):
        if eps + beta * mu ** (j + 1) >= mu**j:
            raise PrecisionViolation(
                j, f"eps={eps} too large at day {j}: {eps} + {beta}*{mu ** (j + 1)} >= {mu ** j}"
            )
    days = _day_names(n)
    edges = [(days[j], days[j + 1], eps) for j in range(n)]
    edges += [(v, "t", mu**j) for j, v in enumerate(days)]
    return TaskGraph(edges, "s", "t")


def course_node(week: int, done: int) -> str:
    return f"v{week}{done}" if week < 10 and done < 10 else f"v{week}_{done}"


def gen_course(
    weeks: int,
    projects: int,
    cost_per_row_drop: Sequence[CostLike],
    reward: CostLike | None = None,
) -> TaskGraph:
    """Weekly grid: ``v_ij`` means ``i`` weeks over with ``j`` projects done.

    A week in which ``k`` projects get done costs ``cost_per_row_drop[k]``.
    ``s = v_00`` and ``t = v_{weeks, projects}`` are named ``s`` and ``t``;
    states that can no longer finish are pruned away.
    """
    if not weeks >= projects >= 1:
        raise ParameterError("need weeks >= projects >= 1")
    costs = [_positive("row-drop cost", c) for c in cost_per_row_drop]
    if not costs:
        raise ParameterError("need at least one row-drop cost")

    def name(i: int, j: int) -> str:
        if (i, j) == (0, 0):
            return "s"
        if (i, j) == (weeks, projects):
            return "t"
        return course_node(i, j)

    edges = []
    for i in range(weeks):
        for j in range(min(i * (len(costs) - 1), projects) + 1):
            for k, c in enumerate(costs):
                if j + k <= projects:
                    edges.append((name(i, j), name(i + 1, j + k), c))
    return prune_to_st(TaskGraph(edges, "s", "t", reward=reward))


def gen_bipartite_labels(n: int) -> IntervalLabeling:
    """Complete bipartite labels instance with exactly ``n**2`` valid paths.

    ``(s, u_i)`` gets ``[(i-1)/n, i/n)``; ``(u_i, v_j)`` gets the ``j``-th
    sub-interval of width ``1/n**2`` inside it, with ``j = 1`` stretched down
    to 0 and ``j = n`` up to 1. Intervals are half-open (the last one closed
    at 1) so each node's labels partition [0, 1] exactly.
    """
    if n < 1:
        raise ParameterError("n must be at least 1")
    labels: dict[tuple[str, str], Interval | None] = {}
    for i in range(1, n + 1):
        labels[("s", f"u{i}")] = _piece(Fraction(i - 1, n), Fraction(i, n))
    for i in range(1, n + 1):
        base = Fraction(i - 1, n)
        for j in range(1, n + 1):
            lo = Fraction(0) if j == 1 else base + Fraction(j - 1, n * n)
            hi = Fraction(1) if j == n else base + Fraction(j, n * n)
            labels[(f"u{i}", f"v{j}")] = _piece(lo, hi)
    for j in range(1, n + 1):
        labels[(f"v{j}", "t")] = _piece(Fraction(0), Fraction(1))
    return IntervalLabeling("s", "t", labels)


def _piece(lo: Fraction, hi: Fraction) -> Interval:
    return Interval(lo, hi, lo_closed=True, hi_closed=hi == 1)


def gen_bipartite_costs(n: int) -> TaskGraph:
    """Cost assignment on the bipartite gadget with ``n**2`` distinct agent paths.

    ``v_j -> t`` costs ``n - j + 1`` so the slopes of the lines at every
    ``u_i`` decrease in ``j``. The costs ``u_i -> v_j`` are chained so that
    consecutive lines cross at ``(i-1)/n + j/n**2`` and ``d(u_i, t) = 3n + 1 - i``;
    the costs ``s -> u_i`` then make consecutive lines at ``s`` cross at ``i/n``.
    Every crossing is interior to the owning range, so each ``s, u_i, v_j, t``
    wins on an interval of positive length.
    """
    if n < 1:
        raise ParameterError("n must be at least 1")
    edges: list[tuple[str, str, Fraction]] = []
    tail_cost = {j: Fraction(n - j + 1) for j in range(1, n + 1)}
    to_t: dict[int, Fraction] = {}
    for i in range(1, n + 1):
        base = Fraction(i - 1, n)
        crossings = [base + Fraction(j, n * n) for j in range(1, n)]
        target = Fraction(3 * n + 1 - i)
        # c_{j+1} = c_j + x_j (slope_j - slope_{j+1}), and the slopes step by 1
        first = target - tail_cost[n] - sum(crossings, Fraction(0))
        c = first
        for j in range(1, n + 1):
            edges.append((f"u{i}", f"v{j}", c))
            if j < n:
                c += crossings[j - 1]
        to_t[i] = target
    c = Fraction(1)
    for i in range(1, n + 1):
        edges.append(("s", f"u{i}", c))
        if i < n:
            c += Fraction(i, n) * (to_t[i] - to_t[i + 1])
    for j in range(1, n + 1):
        edges.append((f"v{j}", "t", tail_cost[j]))
    return TaskGraph(edges, "s", "t")


def figure4_topology(costs: Sequence[CostLike], reward: CostLike | None = None) -> TaskGraph:
    """``s -> a``, ``a -> b -> t``, ``a -> c -> t`` with costs in that edge order."""
    sa, ab, bt, ac, ct = costs
    return TaskGraph(
        [("s", "a", sa), ("a", "b", ab), ("b", "t", bt), ("a", "c", ac), ("c", "t", ct)],
        "s",
        "t",
        reward=reward,
    )
