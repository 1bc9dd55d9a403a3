from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from support import balanced_fm, counts_ok, continents, gender_seniority, make, oracle_best, ratio_at_least

from divcommittee.generate import generate
from divcommittee.model import CapExceededError, InapplicableError, Independent, Instance, is_diverse
from divcommittee.solvers import (
    balanced_pair_greedy,
    brute_force,
    cc_balanced_complement,
    check_feasible,
    choose_algorithm,
    dp_independent_1laminar,
    feasibility_interval_1laminar,
    greedy_lower_extension,
    matroid_intersection_feasibility,
    pair_greedy_bound,
    solve,
    weighted_matroid_intersection,
)
from divcommittee.solvers.balanced import unconstrained_greedy
from divcommittee.solvers.brute import CAP_ENV

WEIGHTS = {"a": 4, "b": 3, "c": 2, "d": 1}
GS_PINNED = dict(F=(1, 1), M=(1, 1), J=(1, 1), S=(1, 1))


def group_instance(allowed, k):
    return make({"a": ["g"], "b": ["g"], "c": ["g"], "d": []}, k, {"g": {"allowed": allowed}}, weights=WEIGHTS)


def pair_profile_instance(k=2):
    """A = {a1, a2}, B = {b1, b2}; v1: a1 > b1 > a2 > b2, v2: b2 > a2 > b1 > a1."""
    return make(
        {"a1": ["A"], "a2": ["A"], "b1": ["B"], "b2": ["B"]},
        k,
        {"A": {"min": k // 2, "max": k // 2}, "B": {"min": k // 2, "max": k // 2}},
        profile=[["a1", "b1", "a2", "b2"], ["b2", "a2", "b1", "a1"]],
    )


# dynamic program, independent constraints ----------------------------------


def test_dp_examples():
    rep = dp_independent_1laminar(group_instance([0, 2], 2))
    assert (rep.status, rep.committee, rep.value) == ("optimal", (0, 1), 7)
    rep = dp_independent_1laminar(group_instance([1], 1))
    assert (rep.committee, rep.value) == ((0,), 4)
    assert dp_independent_1laminar(group_instance([3], 2)).status == "infeasible"


def test_dp_feasibility_mode():
    inst = group_instance([0, 2], 2)
    rep = dp_independent_1laminar(inst, feasibility_only=True)
    assert rep.status == "feasible" and is_diverse(inst, rep.committee)


def test_dp_preconditions():
    with pytest.raises(InapplicableError, match="independent"):
        dp_independent_1laminar(balanced_fm())
    crossing = make({"a": ["x"], "b": ["x", "y"], "c": ["y"]}, 1, {"x": {"allowed": [0, 1]}})
    with pytest.raises(InapplicableError, match="laminar"):
        dp_independent_1laminar(crossing)
    cc = make({"a": ["g"], "b": []}, 1, {"g": {"allowed": [1]}}, profile=[["a", "b"]])
    with pytest.raises(InapplicableError, match="separable"):
        dp_independent_1laminar(cc)


# interval feasibility ------------------------------------------------------------


def test_continents_feasible():
    rng = feasibility_interval_1laminar(continents(4, R1=(2, 2), R2=(2, 2), r1=(1, 1)))
    assert rng.feasible
    assert counts_ok(continents(4, R1=(2, 2), R2=(2, 2), r1=(1, 1)), rng.witness)
    assert brute_force(continents(4, R1=(2, 2), R2=(2, 2), r1=(1, 1)), mode="feasibility").feasible


def test_continents_infeasible_propagates():
    inst = continents(4, R1=(0, 3), r1=(3, 3))
    rng = feasibility_interval_1laminar(inst)
    r1, R1 = inst.label_index["r1"], inst.label_index["R1"]
    assert not rng.feasible
    assert rng.lower[r1] == float("inf") and rng.lower[R1] == float("inf")


def test_no_labels():
    inst = make({x: [] for x in "abc"}, 2)
    assert feasibility_interval_1laminar(inst).feasible


# greedy over the lower extension ---------------------------------------------------


def test_greedy_balanced_separable():
    rep = greedy_lower_extension(balanced_fm())
    assert (rep.status, rep.committee, rep.value) == ("optimal", (0, 2), 6)


def test_greedy_cc_ratio_and_empty():
    inst = pair_profile_instance()
    rep = greedy_lower_extension(inst)
    assert rep.status == "approximate" and rep.guarantee == Fraction(1, 2)
    assert 2 * rep.value >= oracle_best(inst).value
    empty = greedy_lower_extension(balanced_fm(k=0))
    assert (empty.committee, empty.value) == ((), 0)


def test_greedy_reports_infeasible():
    assert greedy_lower_extension(continents(4, R1=(0, 3), r1=(3, 3))).status == "infeasible"


# matroid intersection ----------------------------------------------------------------


def test_intersection_feasibility_examples():
    rep = matroid_intersection_feasibility(gender_seniority(**GS_PINNED))
    assert rep.committee in {(0, 3), (1, 2)}
    rep = matroid_intersection_feasibility(gender_seniority(J=(2, 2), F=(1, 1), M=(1, 1)))
    assert rep.committee == (0, 2)
    assert matroid_intersection_feasibility(gender_seniority(S=(2, 2), J=(1, 1))).status == "infeasible"


def test_weighted_intersection_examples():
    rep = weighted_matroid_intersection(gender_seniority((4, 3, 2, 1), **GS_PINNED))
    assert (rep.committee, rep.value, rep.status) == ((0, 3), 5, "optimal")
    rep = weighted_matroid_intersection(gender_seniority((4, 1, 1, 4), **GS_PINNED))
    assert (rep.committee, rep.value) == ((0, 3), 8)
    rep = weighted_matroid_intersection(gender_seniority((4, 3, 2, 1), k=0))
    assert (rep.committee, rep.value) == ((), 0)


def test_intersection_needs_two_laminar_layers():
    k5 = make({str(i): (["0", "1", "2", "3", "4"] if i == 0 else [str(i - 1)]) for i in range(6)}, 1)
    # labels 0..4 each hold candidate "0" plus one other: pairwise crossing
    with pytest.raises(InapplicableError, match="2-laminar"):
        matroid_intersection_feasibility(k5)


# balanced committees -------------------------------------------------------------------


def test_pair_greedy_examples():
    rep = balanced_pair_greedy(pair_profile_instance())
    assert (rep.committee, rep.value) == ((0, 3), 6)
    assert rep.guarantee == pair_greedy_bound(1) == 1
    sep = make({"a1": ["A"], "a2": ["A"], "b1": ["B"], "b2": ["B"]}, 2,
               {"A": {"min": 1, "max": 1}, "B": {"min": 1, "max": 1}},
               weights={"a1": 5, "a2": 1, "b1": 4, "b2": 2})
    rep = balanced_pair_greedy(sep)
    assert (rep.committee, rep.value, rep.status) == ((0, 2), 9, "optimal")
    full = balanced_pair_greedy(pair_profile_instance(k=4))
    assert full.committee == (0, 1, 2, 3)


def test_pair_greedy_bound_values():
    assert pair_greedy_bound(2) == Fraction(3, 4)
    assert pair_greedy_bound(3) == Fraction(19, 27)
    assert all(pair_greedy_bound(h) > Fraction(63, 100) for h in range(1, 30))


def test_balanced_structure_errors():
    lopsided = make({"a": ["A"], "b": ["B"], "c": ["B"]}, 2,
                    {"A": {"min": 1, "max": 1}, "B": {"min": 1, "max": 1}}, weights={"a": 1, "b": 1, "c": 1})
    assert balanced_pair_greedy(lopsided).committee == (0, 1)
    short = make({"a": ["A"], "b": ["B"], "c": ["B"], "d": ["B"]}, 4,
                 {"A": {"min": 2, "max": 2}, "B": {"min": 2, "max": 2}})
    with pytest.raises(InapplicableError, match="at least"):
        balanced_pair_greedy(short)
    with pytest.raises(InapplicableError, match="two labels"):
        balanced_pair_greedy(continents())


def test_cc_complement():
    inst = pair_profile_instance()
    rep = cc_balanced_complement(inst)
    assert rep.status == "heuristic" and is_diverse(inst, rep.committee)
    inner = inst.value(tuple(sorted(unconstrained_greedy(inst, 1))))
    assert rep.value >= inner
    assert cc_balanced_complement(pair_profile_instance(k=0)).committee == ()
    with pytest.raises(InapplicableError):
        cc_balanced_complement(balanced_fm())


# brute force and dispatch -------------------------------------------------------------------


def test_brute_force_examples():
    rep = brute_force(balanced_fm())
    assert (rep.committee, rep.value) == ((0, 2), 6)
    assert brute_force(continents(4, R1=(0, 3), r1=(3, 3))).status == "infeasible"
    whole = brute_force(continents(5))
    assert whole.committee == (0, 1, 2, 3, 4)


def test_brute_force_cap(monkeypatch):
    big = generate("laminar", 30, 15, 0)
    with pytest.raises(CapExceededError):
        brute_force(big)
    monkeypatch.setenv(CAP_ENV, "10")
    with pytest.raises(CapExceededError):
        brute_force(generate("laminar", 6, 3, 0))
    assert brute_force(balanced_fm()).value == 6


def test_dispatch_table():
    assert choose_algorithm(balanced_fm()) == "greedy"
    assert solve(balanced_fm()).status == "optimal"
    layered = gender_seniority((4, 3, 2, 1), J=(1, 1), S=(1, 1), F=(1, 1), M=(1, 1))
    indep = Instance(layered.candidates, layered.labels, layered.labeling,
                     Independent((frozenset({1}),) * 4), 2, layered.objective, layered.layers)
    assert choose_algorithm(indep) == "brute"
    assert solve(indep).algorithm == "brute"
    cc = generate("laminar", 7, 3, 1, objective="cc")
    assert choose_algorithm(cc) == "greedy"
    assert solve(cc).guarantee == Fraction(1, 2)
    assert choose_algorithm(layered) == "intersection"
    assert choose_algorithm(pair_profile_instance()) == "pairs"


def test_dispatch_refuses_unknown_and_oversized():
    with pytest.raises(ValueError):
        solve(balanced_fm(), "simplex")
    crossing = generate("layered", 40, 20, 3, constraints="independent")
    with pytest.raises(CapExceededError):
        solve(crossing)


def test_check_feasible_routes():
    assert check_feasible(continents(4, R1=(2, 2), R2=(2, 2), r1=(1, 1))).algorithm == "feasibility-dp"
    assert check_feasible(group_instance([3], 2)).status == "infeasible"
    assert check_feasible(gender_seniority(**GS_PINNED)).algorithm == "intersection"


# properties ------------------------------------------------------------------------------


@settings(max_examples=80, deadline=None)
@given(
    kind=st.sampled_from(["laminar", "layered", "two-laminar", "balanced"]),
    m=st.integers(2, 8),
    seed=st.integers(0, 10**6),
    objective=st.sampled_from(["separable", "cc", "k-borda"]),
    constraints=st.sampled_from(["interval", "independent"]),
    data=st.data(),
)
def test_auto_solver_is_sound(kind, m, seed, objective, constraints, data):
    k = data.draw(st.integers(0, min(m, 5)))
    if kind == "balanced":
        k -= k % 2
    inst = generate(kind, m, k, seed, objective=objective, constraints=constraints, tight=0.2)
    rep = solve(inst)
    want = oracle_best(inst)
    assert rep.feasible == want.feasible
    if not want.feasible:
        return
    assert is_diverse(inst, rep.committee)
    assert rep.value == inst.value(rep.committee)
    if rep.status == "optimal":
        assert (rep.committee, rep.value) == (want.committee, want.value)
    elif rep.status == "approximate":
        assert ratio_at_least(rep.value, rep.guarantee, want.value)
    assert check_feasible(inst).feasible == want.feasible
