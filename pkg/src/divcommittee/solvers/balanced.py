"""Balanced committees: two disjoint classes, k/2 members from each."""
from __future__ import annotations

from fractions import Fraction

from ..model import InapplicableError, Instance, Interval, SolveReport, make_report
from ..objectives import ChamberlinCourant, is_separable


def balanced_sides(instance: Instance) -> tuple[list[int], list[int], int]:
    """(A, B, k') for a balanced instance, otherwise InapplicableError."""
    if instance.n_labels != 2:
        raise InapplicableError("balanced structure needs exactly two labels")
    ext_a, ext_b = instance.labeling.extents
    if ext_a & ext_b or len(ext_a | ext_b) != instance.m:
        raise InapplicableError("balanced structure needs two disjoint labels covering all candidates")
    if instance.k % 2:
        raise InapplicableError("balanced committees have even size")
    half = instance.k // 2
    spec = instance.spec
    for lab in (0, 1):
        if isinstance(spec, Interval):
            pinned = spec.lower[lab] == spec.upper[lab] == half
        else:
            pinned = spec.allowed[lab] == frozenset({half})
        if not pinned:
            raise InapplicableError(f"label {instance.labels[lab]!r} is not pinned to k/2 = {half}")
    side_a, side_b = sorted(ext_a), sorted(ext_b)
    if len(side_a) < half or len(side_b) < half:
        raise InapplicableError(f"each class needs at least k/2 = {half} candidates")
    return side_a, side_b, half


def pair_greedy_bound(half: int) -> Fraction:
    """1 - (1 - 1/k')^k', the guarantee of the pair greedy after k' rounds."""
    if half == 0:
        return Fraction(1)
    return 1 - (1 - Fraction(1, half)) ** half


def balanced_pair_greedy(instance: Instance) -> SolveReport:
    side_a, side_b, half = balanced_sides(instance)
    f = instance.objective
    chosen: list[int] = []
    current = 0
    for _ in range(half):
        best = None
        for a in side_a:
            if a in chosen:
                continue
            for b in side_b:
                if b in chosen:
                    continue
                gain = f.value(tuple(sorted(chosen + [a, b]))) - current
                if best is None or gain > best[0]:
                    best = (gain, a, b)
        gain, a, b = best
        chosen += [a, b]
        current += gain
    if is_separable(f):
        return make_report(
            instance, chosen, "optimal", "pairs",
            basis="separable objective, best pair per round is the best member of each class",
        )
    return make_report(
        instance, chosen, "approximate", "pairs", pair_greedy_bound(half),
        basis="monotone submodular objective, pair greedy (ratio 1 - (1 - 1/k')^k' >= 1 - 1/e)",
    )


def unconstrained_greedy(instance: Instance, seats: int) -> list[int]:
    """Classic marginal-gain greedy ignoring all labels; ties go to the lower index."""
    f = instance.objective
    chosen: list[int] = []
    current = 0
    for _ in range(seats):
        gain, y = max(
            (f.value(tuple(sorted(chosen + [y]))) - current, -y)
            for y in range(instance.m)
            if y not in chosen
        )
        chosen.append(-y)
        current += gain
    return chosen


def cc_balanced_complement(instance: Instance, inner_budget: int | None = None) -> SolveReport:
    """Greedy CC committee of k' seats, completed to balance with lowest-index candidates."""
    if not isinstance(instance.objective, ChamberlinCourant):
        raise InapplicableError("complement scheme requires a Chamberlin-Courant objective")
    side_a, side_b, half = balanced_sides(instance)
    seats = half if inner_budget is None else inner_budget
    if not 0 <= seats <= half:
        raise InapplicableError(f"inner budget must lie in [0, {half}]")
    chosen = unconstrained_greedy(instance, seats)
    for side in (side_a, side_b):
        need = half - sum(1 for c in chosen if c in side)
        chosen += [c for c in side if c not in chosen][:need]
    return make_report(
        instance, chosen, "heuristic", "cc-complement",
        basis="unconstrained CC greedy completed to balance; no ratio claimed",
    )
