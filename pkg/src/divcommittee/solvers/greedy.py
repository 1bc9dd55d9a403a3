"""Greedy selection over the lower-extension matroid of one laminar layer.

Exact for separable objectives (matroid greedy); for monotone submodular
objectives the result is at least half of the optimum.
"""
from __future__ import annotations

from fractions import Fraction

from ..matroid import new_lower_extension
from ..model import Instance, SolveReport, make_report
from ..objectives import is_separable
from .common import require_interval, require_laminar_tree

ALGORITHM = "greedy"


def greedy_lower_extension(instance: Instance) -> SolveReport:
    spec = require_interval(instance)
    tree = require_laminar_tree(instance)
    mat = new_lower_extension(tree, spec.lower, spec.upper, instance.k)
    if mat is None:
        return make_report(instance, None, "infeasible", ALGORITHM, basis="interval feasibility DP")
    f = instance.objective
    chosen: list[int] = []
    current = 0
    for _ in range(instance.k):
        gains = sorted(
            (current - f.value(tuple(sorted(chosen + [y]))), y)
            for y in range(instance.m)
            if y not in chosen
        )
        for neg_gain, y in gains:
            if mat.can_extend(chosen, y):
                chosen.append(y)
                current -= neg_gain
                assert set(chosen) <= mat.basis
                break
        else:
            raise AssertionError("no extendable candidate although a basis exists")
    if is_separable(f):
        return make_report(
            instance, chosen, "optimal", ALGORITHM,
            basis="separable objective, greedy over the lower-extension matroid",
        )
    return make_report(
        instance, chosen, "approximate", ALGORITHM, Fraction(1, 2),
        basis="monotone submodular objective, greedy over a matroid",
    )
