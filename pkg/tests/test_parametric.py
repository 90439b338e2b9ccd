from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biased_planner import (
    Interval,
    IntervalLabeling,
    Line,
    brute_force_beta_paths,
    build_interval_labels,
    enumerate_beta_paths,
    enumerate_valid_paths,
    gen_bipartite_costs,
    lower_envelope,
    plan_at,
    traverse_fixed_goal,
)
from biased_planner.errors import MalformedLabeling
from biased_planner.fuzz import random_dag
from biased_planner.graph import TaskGraph

from conftest import HALF

ZERO, ONE = Fraction(0), Fraction(1)


def test_interval_text_and_membership():
    iv = Interval(ZERO, Fraction(2, 3))
    assert str(iv) == "[0, 2/3)"
    assert iv.contains(ZERO) and not iv.contains(Fraction(2, 3))
    assert str(Interval(Fraction(2, 3), ONE, True, True)) == "[2/3, 1]"
    assert iv.intersect(Interval(Fraction(2, 3), ONE, True, True)) is None


def test_envelope_crossing():
    # listed flat line first so it owns the crossing point
    flat, rising = Line(HALF, ZERO), Line(ZERO, ONE)
    owned = lower_envelope([flat, rising])
    assert owned[1] == Interval(ZERO, HALF, True, False)
    assert owned[0] == Interval(HALF, ONE, True, True)


def test_envelope_single_and_identical():
    assert lower_envelope([Line(ONE, ONE)]) == [Interval(ZERO, ONE, True, True)]
    assert lower_envelope([Line(ONE, ONE), Line(ONE, ONE)]) == [Interval(ZERO, ONE, True, True), None]


def test_fig1_labels(fig1):
    labels = build_interval_labels(fig1).labels
    assert labels[("s", "c")] == Interval(ZERO, Fraction(2, 3), True, False)
    assert labels[("s", "a")] == Interval(Fraction(2, 3), ONE, True, True)
    assert labels[("c", "e")] == Interval(ZERO, Fraction(3, 4), True, False)
    assert labels[("c", "d")] == Interval(Fraction(3, 4), ONE, True, True)
    assert labels[("b", "t")] == Interval(ZERO, ONE, True, True)


def test_fig1_paths(fig1):
    found = enumerate_beta_paths(fig1)
    assert [(p.path, str(p.witness)) for p in found] == [
        (("s", "c", "e", "t"), "[0, 2/3)"),
        (("s", "a", "b", "t"), "[2/3, 1]"),
    ]
    assert brute_force_beta_paths(fig1, 1000) == {p.path for p in found}


def test_chain_has_one_path():
    g = TaskGraph([("s", "a", 2), ("a", "t", 3)], "s", "t")
    [only] = enumerate_valid_paths(build_interval_labels(g))
    assert only.path == ("s", "a", "t")
    assert only.witness == Interval(ZERO, ONE, True, True)
    assert brute_force_beta_paths(g, 100) == {("s", "a", "t")}


def test_bipartite_costs_three():
    g = gen_bipartite_costs(3)
    assert len(enumerate_beta_paths(g)) == 9
    assert len(brute_force_beta_paths(g, 10_000)) == 9


def test_labeling_must_cover_unit_interval():
    bad = IntervalLabeling("s", "t", {("s", "t"): Interval(ZERO, HALF, True, True)})
    with pytest.raises(MalformedLabeling):
        bad.check()
    overlap = IntervalLabeling(
        "s",
        "t",
        {("s", "a"): Interval(ZERO, ONE, True, True), ("s", "t"): Interval(ZERO, HALF), ("a", "t"): Interval(ZERO, ONE, True, True)},
    )
    with pytest.raises(MalformedLabeling):
        overlap.check()


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_sweep_matches_grid(rng):
    g = random_dag(rng, 8)
    found = enumerate_beta_paths(g)
    assert len(found) <= len(g.edges)
    assert {p.path for p in found} == brute_force_beta_paths(g, 2_000)


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False), st.fractions(min_value=Fraction(1, 50), max_value=1, max_denominator=50))
def test_witness_reproduces_path(rng, beta):
    g = random_dag(rng, 8)
    hits = [p for p in enumerate_beta_paths(g) if p.witness.contains(beta)]
    assert len(hits) == 1
    assert hits[0].path == traverse_fixed_goal(g, beta).realized_path


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False), st.fractions(min_value=Fraction(1, 50), max_value=1, max_denominator=50))
def test_labels_agree_with_plans(rng, beta):
    g = random_dag(rng, 7)
    labeling = build_interval_labels(g)
    for v in g.nodes:
        if v == g.t:
            continue
        [edge] = [e for e, iv in labeling.out_edges(v) if iv is not None and iv.contains(beta)]
        assert edge == plan_at(g, v, beta).path[:2]
