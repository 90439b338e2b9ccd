"""Splitting one task of cost ``c`` and reward ``r`` into ``k`` steps.

Agents have beta ~ Uniform[0, 1]. A step's bottleneck is the smallest beta
that still takes it; the completion rate is one minus the largest
bottleneck. Bottlenecks of rational steps are exact. The optimal split
involves k-th roots, so it is computed with high-precision decimals.
"""

from __future__ import annotations

import decimal
from collections.abc import Sequence
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import TypeVar

from .agent import BiasLike, traverse_with_reward
from .errors import ConvergenceFailure, ParameterError, RewardTooSmall
from .graph import CostLike, parse_cost
from .instances import chain

PRECISION = 60
TOLERANCE = 1e-9

N = TypeVar("N", Fraction, Decimal, float)


@dataclass(frozen=True)
class PartitionPlan:
    c: object
    r: object
    steps: tuple
    bottlenecks: tuple
    completion_rate: object

    @property
    def k(self) -> int:
        return len(self.steps)

    @property
    def spread(self):
        """Largest minus smallest bottleneck (zero at the optimum)."""
        return max(self.bottlenecks) - min(self.bottlenecks)


def bottlenecks(steps: Sequence[N], r: N) -> list[N]:
    """Minimum beta completing each step: ``c_i / (r - sum of later steps)``."""
    if not steps:
        raise ParameterError("need at least one step")
    if any(x <= 0 for x in steps):
        raise ParameterError("steps must be positive")
    total = sum(steps[1:], steps[0])
    if r <= total:
        raise RewardTooSmall(f"reward {r} must exceed the total cost {total}")
    out: list[N] = []
    later = total * 0
    for x in reversed(steps):
        # positive steps and r > total keep this inside (0, 1); clamp anyway
        out.append(min(x / (r - later), later * 0 + 1))
        later = later + x
    return out[::-1]


def completion_rate(steps: Sequence[N], r: N) -> N:
    worst = max(bottlenecks(steps, r))
    return 1 - worst


def _check(c: object, r: object, k: int) -> None:
    if k < 1:
        raise ParameterError("k must be at least 1")
    if not 0 < c < r:  # type: ignore[operator]
        raise ParameterError(f"need 0 < c < r, got c={c}, r={r}")


def _to_decimal(value: CostLike) -> Decimal:
    q = parse_cost(value)
    return Decimal(q.numerator) / Decimal(q.denominator)


def optimal_partition(c: CostLike, r: CostLike, k: int, precision: int = PRECISION) -> PartitionPlan:
    """Equal-bottleneck split with completion rate ``(1 - c/r) ** (1/k)``.

    The first of ``k`` steps costs ``delta**((k-1)/k) * r**(1/k) - delta``
    with ``delta = r - c``; the rest of the task is split the same way into
    ``k - 1`` steps. Since ``r`` stays fixed, ``delta`` grows by each step's
    cost as the recursion proceeds.
    """
    cq, rq = parse_cost(c), parse_cost(r)
    _check(cq, rq, k)
    with decimal.localcontext() as ctx:
        ctx.prec = precision
        cd, rd = _to_decimal(cq), _to_decimal(rq)
        steps: list[Decimal] = []
        remaining = cd
        for parts in range(k, 1, -1):
            delta = rd - remaining
            first = (delta.ln() * (parts - 1) / parts + rd.ln() / parts).exp() - delta
            steps.append(first)
            remaining -= first
        steps.append(remaining)
        necks = bottlenecks(steps, rd)
        rate = 1 - max(necks)
    return PartitionPlan(cd, rd, tuple(steps), tuple(necks), rate)


def closed_form_rate(c: CostLike, r: CostLike, k: int, precision: int = PRECISION) -> Decimal:
    cq, rq = parse_cost(c), parse_cost(r)
    _check(cq, rq, k)
    with decimal.localcontext() as ctx:
        ctx.prec = precision
        gamma = _to_decimal(cq) / _to_decimal(rq)
        return ((1 - gamma).ln() / k).exp()


def _coverable(theta: float, r: float, k: int) -> list[float]:
    steps = []
    later = 0.0
    for _ in range(k):
        x = theta * (r - later)
        steps.append(x)
        later += x
    return steps[::-1]


def numeric_oracle_partition(
    c: CostLike,
    r: CostLike,
    k: int,
    tol: float = 1e-14,
    max_iter: int = 200,
) -> PartitionPlan:
    """Optimal split found by bisection on the common bottleneck, in floats.

    For a target bottleneck ``theta`` the cheapest way to stay under it is to
    fill steps from the last one backwards, each as large as allowed:
    ``c_i = theta * (r - later)``. The total this covers grows with
    ``theta``, so bisection finds the smallest ``theta`` covering ``c``.
    Uses no k-th roots.
    """
    cq, rq = parse_cost(c), parse_cost(r)
    _check(cq, rq, k)
    cf, rf = float(cq), float(rq)
    lo, hi = 0.0, 1.0
    for _ in range(max_iter):
        mid = (lo + hi) / 2
        if sum(_coverable(mid, rf, k)) >= cf:
            hi = mid
        else:
            lo = mid
        if hi - lo <= tol:
            break
    else:
        raise ConvergenceFailure(f"bisection did not reach {tol} in {max_iter} steps")
    steps = _coverable(hi, rf, k)
    scale = cf / sum(steps)
    steps = [x * scale for x in steps]
    necks = bottlenecks(steps, rf)
    return PartitionPlan(cf, rf, tuple(steps), tuple(necks), 1 - max(necks))


def rational_steps(plan: PartitionPlan, c: CostLike, max_denominator: int = 10**12) -> list[Fraction]:
    """Rational approximation of ``plan.steps`` summing exactly to ``c``."""
    total = parse_cost(c)
    approx = [Fraction(str(x)).limit_denominator(max_denominator) for x in plan.steps[:-1]]
    last = total - sum(approx, Fraction(0))
    if last <= 0:
        raise ParameterError("rounding left a non-positive final step")
    return approx + [last]


def chain_completes(steps: Sequence[CostLike], r: CostLike, bias: BiasLike) -> bool:
    """Run a reward-model agent down the chain of steps."""
    return traverse_with_reward(chain(steps, reward=r), bias).reached


def rate_table(c: CostLike, r: CostLike, k_max: int) -> list[tuple[int, Decimal]]:
    return [(k, optimal_partition(c, r, k).completion_rate) for k in range(1, k_max + 1)]
