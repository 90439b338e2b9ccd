from __future__ import annotations

import random
from decimal import Decimal
from fractions import Fraction

import pytest

from biased_planner import closed_form_rate, numeric_oracle_partition, optimal_partition
from biased_planner.errors import ParameterError, RewardTooSmall
from biased_planner.partition import (
    TOLERANCE,
    bottlenecks,
    chain_completes,
    completion_rate,
    rate_table,
    rational_steps,
)


def test_single_step_bottleneck():
    assert bottlenecks([Fraction(3)], Fraction(4)) == [Fraction(3, 4)]
    assert bottlenecks([Fraction(5)], Fraction(10)) == [Fraction(1, 2)]


def test_two_step_bottlenecks():
    assert bottlenecks([Fraction(1), Fraction(2)], Fraction(4)) == [Fraction(1, 2), Fraction(1, 2)]
    assert completion_rate([Fraction(1), Fraction(2)], Fraction(4)) == Fraction(1, 2)


def test_completion_rates():
    assert completion_rate([Fraction(3)], Fraction(4)) == Fraction(1, 4)
    assert completion_rate([Fraction(1)], Fraction(100)) == Fraction(99, 100)


def test_reward_must_exceed_cost():
    with pytest.raises(RewardTooSmall):
        bottlenecks([Fraction(2), Fraction(2)], Fraction(4))
    with pytest.raises(ParameterError):
        optimal_partition(5, 4, 2)
    with pytest.raises(ParameterError):
        optimal_partition(3, 4, 0)


def test_optimal_two_steps_are_integers():
    plan = optimal_partition(3, 4, 2)
    assert abs(plan.steps[0] - 1) < Decimal("1e-50")
    assert abs(plan.steps[1] - 2) < Decimal("1e-50")
    assert abs(plan.completion_rate - Decimal("0.5")) < Decimal("1e-50")


def test_optimal_single_step():
    plan = optimal_partition(3, 4, 1)
    assert plan.steps == (Decimal(3),)
    assert plan.completion_rate == Decimal("0.25")


@pytest.mark.parametrize("k", range(1, 9))
def test_closed_form_and_oracle(k):
    plan = optimal_partition(3, 4, k)
    assert plan.k == k
    assert abs(plan.completion_rate - closed_form_rate(3, 4, k)) < Decimal("1e-40")
    assert plan.spread < Decimal("1e-40")
    oracle = numeric_oracle_partition(3, 4, k)
    assert abs(float(plan.completion_rate) - oracle.completion_rate) < TOLERANCE
    assert abs(sum(oracle.steps) - 3) < TOLERANCE


def test_oracle_two_steps():
    oracle = numeric_oracle_partition(3, 4, 2)
    assert abs(oracle.steps[0] - 1) < TOLERANCE
    assert numeric_oracle_partition(3, 4, 1).steps == pytest.approx((3.0,))


def test_four_steps_rate():
    assert abs(float(optimal_partition(3, 4, 4).completion_rate) - 0.25**0.25) < 1e-12


def test_more_steps_help():
    rates = [rate for _, rate in rate_table(3, 4, 6)]
    assert rates == sorted(rates)


def test_rational_steps_sum_exactly():
    steps = rational_steps(optimal_partition(3, 4, 3), 3)
    assert sum(steps) == 3 and all(x > 0 for x in steps)


def test_chain_matches_bottleneck_threshold():
    rng = random.Random(7)
    for _ in range(100):
        k = rng.randint(1, 5)
        steps = [Fraction(rng.randint(1, 9)) for _ in range(k)]
        r = sum(steps) + rng.randint(1, 20)
        theta = max(bottlenecks(steps, r))
        assert chain_completes(steps, r, theta)
        if theta > Fraction(1, 10**6):
            assert not chain_completes(steps, r, theta - Fraction(1, 10**6))
