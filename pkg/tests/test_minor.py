from __future__ import annotations

import math
from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biased_planner import (
    MinorModel,
    check_claim_A,
    cost_ratio,
    extract_fan_minor,
    gen_exponential,
    rank_profile,
    verify_minor,
)
from biased_planner.fuzz import FUZZ_BETAS, random_dag
from biased_planner.graph import TaskGraph

from conftest import HALF

MU = Fraction(19, 10)


def test_exponential_ranks():
    ranks = rank_profile(gen_exponential(5, Fraction(3, 2), allow_zero=True), HALF)
    assert ranks["s"] == 0
    assert ranks["v5"] == 3


def test_fig1_ranks_are_zero(fig1):
    assert set(rank_profile(fig1, HALF).values()) == {0}
    assert check_claim_A(fig1, HALF) is None
    assert extract_fan_minor(fig1, HALF) is None


def test_unbiased_ranks_undefined_above_shortest(fig1):
    ranks = rank_profile(fig1, 1)
    assert ranks["s"] == 0 and ranks["c"] == 0
    assert check_claim_A(fig1, 1) is None


def test_claim_a_on_exponential():
    assert check_claim_A(gen_exponential(8, Fraction(3, 2), allow_zero=True), HALF) is None


def test_single_edge_has_no_minor():
    assert extract_fan_minor(TaskGraph([("s", "t", 1)], "s", "t"), HALF) is None


@pytest.mark.parametrize("n", [6, 10, 18, 30])
def test_exponential_minor(n):
    g = gen_exponential(n, MU, allow_zero=True)
    model = extract_fan_minor(g, HALF)
    assert model is not None
    assert verify_minor(g, model) is None
    # the shrink fallback never fires in the exponential regime
    assert model.k == model.max_rank
    assert model.k >= max(2, math.floor(n * math.log2(1.9)) - 1)
    # fan size tracks the log of the cost ratio
    assert model.k + 1 >= math.log2(cost_ratio(g, HALF))


def _model():
    g = gen_exponential(10, MU, allow_zero=True)
    return g, extract_fan_minor(g, HALF)


def test_overlap_flagged():
    g, model = _model()
    segs = list(model.segments)
    segs[1] = segs[1] | segs[0]
    bad = verify_minor(g, replace(model, segments=tuple(segs)))
    assert bad is not None and bad.condition == "disjointness"


def test_missing_hub_adjacency_flagged():
    g = TaskGraph([("s", "a", 1), ("a", "b", 1), ("b", "t", 1), ("s", "t", 5)], "s", "t")
    model = MinorModel(1, (frozenset({"a"}), frozenset({"b"})), frozenset({"s"}))
    bad = verify_minor(g, model)
    assert bad is not None and bad.condition == "hub adjacency"


def test_shape_and_membership_flagged():
    g, model = _model()
    assert verify_minor(g, replace(model, k=model.k + 1)).condition == "shape"
    assert verify_minor(g, replace(model, hub=frozenset({"zz"}))).condition == "membership"


@settings(max_examples=150, deadline=None)
@given(st.randoms(use_true_random=False), st.sampled_from(FUZZ_BETAS))
def test_claim_a_and_minor_on_random_dags(rng, beta):
    g = random_dag(rng, 10)
    assert check_claim_A(g, beta) is None
    model = extract_fan_minor(g, beta)
    if model is not None:
        assert verify_minor(g, model) is None
