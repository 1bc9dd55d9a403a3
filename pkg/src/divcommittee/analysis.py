"""Price of diversity: best unconstrained value over best diverse value."""
from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .model import CapExceededError, InapplicableError, Instance, Interval, make_committee
from .objectives import is_separable
from .solvers.balanced import balanced_sides, unconstrained_greedy
from .solvers.brute import brute_force, within_cap
from .solvers.dispatch import solve

log = logging.getLogger(__name__)

PRICE_BOUND_BALANCED = Fraction(2)


@dataclass(frozen=True)
class PodReport:
    unconstrained: int
    constrained: Optional[int]
    ratio: Optional[Fraction]
    feasible: bool
    exact: bool
    bounds: Optional[tuple[Fraction, Fraction]] = None
    bound_holds: Optional[bool] = None
    unconstrained_committee: tuple[int, ...] = ()
    constrained_committee: Optional[tuple[int, ...]] = None

    @property
    def defined(self) -> bool:
        return self.ratio is not None or self.bounds is not None


def _greedy_ratio(k: int) -> Fraction:
    return 1 - (1 - Fraction(1, k)) ** k if k else Fraction(1)


def relaxed(instance: Instance) -> Instance:
    n = instance.n_labels
    return dataclasses.replace(
        instance, spec=Interval((0,) * n, (instance.m,) * n), layers=None
    )


def unconstrained_optimum(instance: Instance) -> tuple[int, tuple[int, ...], Fraction]:
    """(value, committee, guarantee); guarantee 1 means exact."""
    if is_separable(instance.objective):
        w = instance.objective.weights
        top = make_committee(sorted(range(instance.m), key=lambda c: (-w[c], c))[: instance.k])
        return instance.value(top), top, Fraction(1)
    if within_cap(instance):
        rep = brute_force(relaxed(instance))
        return rep.value, rep.committee, Fraction(1)
    top = make_committee(unconstrained_greedy(instance, instance.k))
    return instance.value(top), top, _greedy_ratio(instance.k)


def constrained_optimum(instance: Instance):
    """(value or None, committee, guarantee) of the best diverse committee."""
    try:
        rep = solve(instance)
    except CapExceededError:
        raise CapExceededError("no exact or approximate method available within caps") from None
    if rep.status not in ("optimal", "infeasible") and within_cap(instance):
        rep = brute_force(instance)
    if rep.status == "infeasible":
        return None, None, Fraction(1)
    if rep.status == "optimal":
        return rep.value, rep.committee, Fraction(1)
    if rep.guarantee is None:
        raise CapExceededError("only heuristics apply and brute force exceeds the cap")
    return rep.value, rep.committee, rep.guarantee


def _monotone_submodular(instance: Instance) -> bool:
    obj = instance.objective
    if is_separable(obj):
        return all(w >= 0 for w in obj.weights)
    return True


def price_of_diversity(instance: Instance) -> PodReport:
    u_val, u_com, u_g = unconstrained_optimum(instance)
    d_val, d_com, d_g = constrained_optimum(instance)
    exact = u_g == 1 and d_g == 1
    if d_val is None:
        return PodReport(u_val, None, None, False, exact, None, None, u_com, None)
    ratio = bounds = None
    if d_val > 0:
        if exact:
            ratio = Fraction(u_val, d_val)
        else:
            # true optima: u_val <= U <= u_val / u_g and d_val <= D <= d_val / d_g
            bounds = (Fraction(u_val) * d_g / d_val, Fraction(u_val) / u_g / d_val)
    holds = None
    try:
        balanced_sides(instance)
        balanced = True
    except InapplicableError:
        balanced = False
    if balanced and _monotone_submodular(instance):
        if ratio is not None:
            holds = ratio <= PRICE_BOUND_BALANCED
        elif bounds is not None and bounds[1] <= PRICE_BOUND_BALANCED:
            holds = True
        elif bounds is not None and bounds[0] > PRICE_BOUND_BALANCED:
            holds = False
        if holds is False:
            log.warning("price of diversity above 2 on a balanced submodular instance")
    return PodReport(u_val, d_val, ratio, True, exact, bounds, holds, u_com, d_com)
