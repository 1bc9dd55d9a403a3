"""Algorithm selection following the known complexity landscape.

auto picks, in order: an exact polynomial algorithm when one applies, then
an approximation with a proven ratio, then brute force within the cap.  The
report always names the algorithm that ran.
"""
from __future__ import annotations

from ..labels import is_1_laminar
from ..model import CapExceededError, InapplicableError, Independent, Instance, SolveReport, make_report
from ..objectives import is_separable
from .balanced import balanced_pair_greedy, balanced_sides, cc_balanced_complement
from .brute import brute_force, within_cap
from .dp import dp_independent_1laminar
from .feasibility import feasibility_interval_1laminar
from .greedy import greedy_lower_extension
from .intersection import (
    matroid_intersection_feasibility,
    two_layers,
    weighted_matroid_intersection,
)

ALGORITHMS = ("auto", "dp", "greedy", "intersection", "pairs", "cc-complement", "brute")


def _is_two_laminar(instance: Instance) -> bool:
    try:
        two_layers(instance)
    except InapplicableError:
        return False
    return True


def _is_balanced(instance: Instance) -> bool:
    try:
        balanced_sides(instance)
    except InapplicableError:
        return False
    return True


def choose_algorithm(instance: Instance) -> str:
    laminar = is_1_laminar(instance.labeling)
    independent = isinstance(instance.spec, Independent)
    if is_separable(instance.objective):
        if independent:
            return "dp" if laminar else "brute"
        if laminar:
            return "greedy"
        return "intersection" if _is_two_laminar(instance) else "brute"
    if _is_balanced(instance):
        return "pairs"
    if laminar and not independent:
        return "greedy"
    return "brute"


def solve(instance: Instance, algorithm: str = "auto") -> SolveReport:
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")
    if algorithm == "auto":
        algorithm = choose_algorithm(instance)
        if algorithm == "brute" and not within_cap(instance):
            raise CapExceededError(
                "no polynomial algorithm applies and brute force exceeds the enumeration cap"
            )
    if algorithm == "dp":
        return dp_independent_1laminar(instance)
    if algorithm == "greedy":
        return greedy_lower_extension(instance)
    if algorithm == "intersection":
        return weighted_matroid_intersection(instance)
    if algorithm == "pairs":
        return balanced_pair_greedy(instance)
    if algorithm == "cc-complement":
        return cc_balanced_complement(instance)
    return brute_force(instance)


def check_feasible(instance: Instance) -> SolveReport:
    """Feasibility only, through the fastest applicable route."""
    laminar = is_1_laminar(instance.labeling)
    if isinstance(instance.spec, Independent):
        if laminar:
            return dp_independent_1laminar(instance, feasibility_only=True)
    elif laminar:
        ranges = feasibility_interval_1laminar(instance)
        status = "feasible" if ranges.feasible else "infeasible"
        return make_report(
            instance, ranges.witness, status, "feasibility-dp",
            basis="interval constraints on a laminar labeling, range DP",
        )
    elif _is_two_laminar(instance):
        return matroid_intersection_feasibility(instance)
    if not within_cap(instance):
        raise CapExceededError("no polynomial feasibility test applies and brute force exceeds the cap")
    return brute_force(instance, mode="feasibility")
