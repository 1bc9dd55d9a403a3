from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from support import TableObjective

from divcommittee.generate import random_profile
from divcommittee.objectives import (
    ChamberlinCourant,
    KBorda,
    PreferenceProfile,
    Separable,
    borda_score,
    is_separable,
    is_submodular_witness,
    marginal,
    value,
)
import random

A, B, C = 0, 1, 2
PROFILE = PreferenceProfile(3, ((A, B, C), (C, B, A)))


@pytest.mark.parametrize("m, i, expected", [(3, 1, 2), (3, 3, 0), (5, 2, 3)])
def test_borda_score(m, i, expected):
    assert borda_score(m, i) == expected


@pytest.mark.parametrize("i", [0, 4])
def test_borda_score_range(i):
    with pytest.raises(ValueError):
        borda_score(3, i)


def test_separable_value():
    assert value(Separable((4, 3, 2, 1)), {0, 2}) == 6


def test_cc_value_by_hand():
    cc = ChamberlinCourant(PROFILE)
    assert value(cc, {B}) == 2
    assert value(cc, {A, C}) == 4
    assert value(cc, set()) == 0


def test_k_borda_sums_member_points():
    kb = KBorda(PROFILE)
    # a: 2 + 0, b: 1 + 1, c: 0 + 2
    assert kb.weights == (2, 2, 2)
    assert value(kb, {A, B}) == 4
    assert is_separable(kb) and not is_separable(ChamberlinCourant(PROFILE))


def test_marginals():
    assert marginal(Separable((4, 3, 2, 1)), {1}, {0}) == 3
    assert marginal(ChamberlinCourant(PROFILE), {A}, {B}) == 1
    assert marginal(ChamberlinCourant(PROFILE), set(), {B}) == 0
    with pytest.raises(ValueError):
        marginal(Separable((1, 1)), {0}, {0})


def test_profile_rejects_partial_rankings():
    with pytest.raises(ValueError):
        PreferenceProfile(3, ((0, 1),))
    with pytest.raises(ValueError):
        PreferenceProfile(3, ((0, 1, 1),))


def test_submodularity_witness():
    rng = random.Random(3)
    assert is_submodular_witness(ChamberlinCourant(random_profile(rng, 5, 4)), trials=None)
    assert is_submodular_witness(KBorda(random_profile(rng, 5, 4)), trials=50, seed=9)
    # f is 0 except f({0,1,2}) = 1, so adding 2 to {0,1} gains more than adding it to {}
    table = {frozenset(s): 0 for r in range(4) for s in combinations(range(3), r)}
    table[frozenset({0, 1, 2})] = 1
    assert not is_submodular_witness(TableObjective(3, table), trials=None)


@st.composite
def profiles(draw, max_m=8, max_n=6):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    rankings = tuple(tuple(draw(st.permutations(range(m)))) for _ in range(n))
    return PreferenceProfile(m, rankings)


@given(profiles(max_m=6, max_n=4))
def test_cc_is_submodular_exhaustively(profile):
    assert is_submodular_witness(ChamberlinCourant(profile), trials=None)


@given(profiles(), st.data())
def test_monotone_and_zero_on_empty(profile, data):
    small = data.draw(st.sets(st.integers(0, profile.m - 1)))
    extra = data.draw(st.sets(st.integers(0, profile.m - 1)))
    for obj in (ChamberlinCourant(profile), KBorda(profile)):
        assert value(obj, set()) == 0
        assert value(obj, small) <= value(obj, small | extra)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=8), st.data())
def test_separable_marginal_ignores_context(weights, data):
    obj = Separable(tuple(weights))
    c = data.draw(st.integers(0, len(weights) - 1))
    s = data.draw(st.sets(st.integers(0, len(weights) - 1))) - {c}
    assert marginal(obj, {c}, s) == weights[c]
