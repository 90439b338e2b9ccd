from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biased_planner import (
    Bias,
    cost_ratio,
    gen_exponential,
    perceived_cost,
    plan_at,
    three_node_path,
    traverse_fixed_goal,
    traverse_with_reward,
)
from biased_planner.agent import limit_path
from biased_planner.errors import InvalidCost, ParameterError, ZeroShortestPath
from biased_planner.fuzz import FUZZ_BETAS, random_dag
from biased_planner.graph import TaskGraph

from conftest import HALF, oracle_plan


def test_plans_in_fig1(fig1):
    p = plan_at(fig1, "s", HALF)
    assert p.path == ("s", "c", "d", "t") and p.biased_cost == 16
    p = plan_at(fig1, "c", HALF)
    assert p.path == ("c", "e", "t") and p.biased_cost == 10
    p = plan_at(fig1, "s", 1)
    assert p.path == ("s", "a", "b", "t") and p.biased_cost == 20


def test_fig1_walks(fig1):
    walk = traverse_fixed_goal(fig1, HALF)
    assert walk.realized_path == ("s", "c", "e", "t")
    assert walk.total_cost == 26 and walk.reached
    assert [p.node for p in walk.plans] == ["s", "c", "e"]
    unbiased = traverse_fixed_goal(fig1, 1)
    assert unbiased.realized_path == ("s", "a", "b", "t") and unbiased.total_cost == 20
    assert cost_ratio(fig1, HALF) == Fraction(26, 20)
    assert cost_ratio(fig1, 1) == 1


def test_exponential_walk():
    g = gen_exponential(5, Fraction(3, 2), allow_zero=True)
    walk = traverse_fixed_goal(g, HALF)
    assert walk.edges[-1] == ("v5", "t")
    assert walk.total_cost == Fraction(3, 2) ** 5
    assert cost_ratio(gen_exponential(10, Fraction(3, 2), allow_zero=True), HALF) == Fraction(3, 2) ** 10


def test_perceived_cost():
    g = three_node_path()
    assert perceived_cost(g, "s", HALF) == 3
    assert perceived_cost(g, "v1", HALF) == 4
    assert perceived_cost(g, "t", HALF) == 0


def test_reward_threshold():
    g = three_node_path()
    quit_ = traverse_with_reward(g, HALF, 7)
    assert quit_.outcome == "abandoned" and quit_.abandoned_at == "v1"
    assert quit_.total_cost == 1 and quit_.realized_path == ("s", "v1")
    done = traverse_with_reward(g, HALF, 8)
    assert done.reached and done.realized_path == ("s", "v1", "t")


def test_reward_from_graph():
    assert traverse_with_reward(three_node_path(reward=8), HALF).reached
    with pytest.raises(ParameterError):
        traverse_with_reward(three_node_path(), HALF)


def test_course_quits_at_v20(course):
    walk = traverse_with_reward(course, HALF)
    assert walk.abandoned_at == "v20"
    assert walk.realized_path == ("s", "v10", "v20")
    fixed = traverse_with_reward(course.without_nodes(["v20"]), HALF)
    assert fixed.reached and fixed.realized_path == ("s", "v10", "v21", "t")


@pytest.mark.parametrize("beta", [0, Fraction(-1, 2), Fraction(3, 2)])
def test_bias_range(beta):
    with pytest.raises(ParameterError):
        Bias(beta)


def test_bias_rejects_float():
    with pytest.raises(InvalidCost):
        Bias(0.5)


def test_zero_shortest_path():
    g = TaskGraph([("s", "t", 0)], "s", "t", allow_zero=True)
    with pytest.raises(ZeroShortestPath):
        cost_ratio(g, HALF)


def test_limit_path_is_greedy(fig1):
    # at beta = 0 only the next edge counts; ties go to the earlier node
    assert limit_path(fig1, Fraction(0)) == ("s", "c", "e", "t")


@settings(max_examples=80, deadline=None)
@given(st.randoms(use_true_random=False), st.sampled_from(FUZZ_BETAS))
def test_plan_matches_brute_force(rng, beta):
    g = random_dag(rng, 7)
    for v in g.nodes:
        path, cost = oracle_plan(g, v, beta)
        p = plan_at(g, v, beta)
        assert p.biased_cost == cost
        assert p.path[:2] == path[:2]


@settings(max_examples=80, deadline=None)
@given(st.randoms(use_true_random=False), st.sampled_from(FUZZ_BETAS))
def test_biased_agent_never_beats_shortest(rng, beta):
    g = random_dag(rng, 8)
    walk = traverse_fixed_goal(g, beta)
    assert walk.reached and walk.realized_path[0] == "s"
    assert walk.total_cost >= g.dist["s"]
    assert walk.total_cost == g.path_cost(walk.realized_path)
