"""Exhaustive enumeration: the ground-truth oracle for every other solver."""
from __future__ import annotations

import itertools
import math
import os

from ..model import CapExceededError, Instance, SolveReport, is_diverse, make_report

DEFAULT_CAP = 5_000_000
CAP_ENV = "DIVCOMMITTEE_BRUTE_CAP"


def brute_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


def within_cap(instance: Instance, cap: int | None = None) -> bool:
    return math.comb(instance.m, instance.k) <= (brute_cap() if cap is None else cap)


def brute_force(instance: Instance, mode: str = "optimize", cap: int | None = None) -> SolveReport:
    """Enumerate all size-k committees in lexicographic order.

    The first committee reaching the maximum wins ties, which is the
    lexicographically smallest one.  ``mode="feasibility"`` stops at the
    first diverse committee.
    """
    if mode not in ("optimize", "feasibility"):
        raise ValueError(f"unknown mode {mode!r}")
    cap = brute_cap() if cap is None else cap
    total = math.comb(instance.m, instance.k)
    if total > cap:
        raise CapExceededError(
            f"brute force would enumerate {total} committees (cap {cap}; set {CAP_ENV})"
        )
    best = None
    best_value = None
    for w in itertools.combinations(range(instance.m), instance.k):
        if not is_diverse(instance, w):
            continue
        if mode == "feasibility":
            return make_report(instance, w, "feasible", "brute", basis="exhaustive search")
        val = instance.value(w)
        if best is None or val > best_value:
            best, best_value = w, val
    status = "optimal" if best is not None else "infeasible"
    return make_report(instance, best, status, "brute", basis="exhaustive search")
