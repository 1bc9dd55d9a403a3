"""Objective functions over committees: separable weights, k-Borda, Chamberlin-Courant.

Every objective exposes ``value(committee) -> int``.  Scores are exact
integers; Borda points for position ``i`` among ``m`` candidates are ``m - i``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Protocol, Union


def borda_score(m: int, i: int) -> int:
    if not 1 <= i <= m:
        raise ValueError(f"position {i} out of range [1, {m}]")
    return m - i


@dataclass(frozen=True)
class PreferenceProfile:
    """Full rankings (best first) of all ``m`` candidates, one per voter."""

    m: int
    rankings: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        full = set(range(self.m))
        for v, ranking in enumerate(self.rankings):
            if len(ranking) != self.m or set(ranking) != full:
                raise ValueError(f"ranking of voter {v} is not a permutation of {self.m} candidates")

    @property
    def n(self) -> int:
        return len(self.rankings)

    @cached_property
    def positions(self) -> tuple[tuple[int, ...], ...]:
        """positions[v][c] is the 1-based position of candidate c for voter v."""
        table = []
        for ranking in self.rankings:
            pos = [0] * self.m
            for i, c in enumerate(ranking, start=1):
                pos[c] = i
            table.append(tuple(pos))
        return tuple(table)


class SetFunction(Protocol):
    m: int

    def value(self, committee: tuple[int, ...]) -> int: ...


@dataclass(frozen=True)
class Separable:
    weights: tuple[int, ...]
    scale: int = 1

    separable = True

    @property
    def m(self) -> int:
        return len(self.weights)

    def value(self, committee) -> int:
        w = self.weights
        return sum(w[c] for c in committee)


@dataclass(frozen=True)
class KBorda:
    profile: PreferenceProfile

    separable = True

    @property
    def m(self) -> int:
        return self.profile.m

    @cached_property
    def weights(self) -> tuple[int, ...]:
        m = self.profile.m
        totals = [0] * m
        for pos in self.profile.positions:
            for c in range(m):
                totals[c] += m - pos[c]
        return tuple(totals)

    def value(self, committee) -> int:
        w = self.weights
        return sum(w[c] for c in committee)


@dataclass(frozen=True)
class ChamberlinCourant:
    profile: PreferenceProfile

    separable = False

    @property
    def m(self) -> int:
        return self.profile.m

    def value(self, committee) -> int:
        if not committee:
            return 0
        m = self.profile.m
        return sum(m - min(pos[c] for c in committee) for pos in self.profile.positions)


Objective = Union[Separable, KBorda, ChamberlinCourant]


def is_separable(obj) -> bool:
    return getattr(obj, "separable", False)


def value(obj: SetFunction, s: Iterable[int]) -> int:
    return obj.value(tuple(sorted(s)))


def marginal(obj: SetFunction, x: Iterable[int], s: Iterable[int]) -> int:
    """f(x | s) = f(s ∪ x) - f(s) for disjoint x and s."""
    x, s = set(x), set(s)
    if x & s:
        raise ValueError(f"marginal of overlapping sets: {sorted(x & s)}")
    if not x:
        return 0
    return value(obj, s | x) - value(obj, s)


def is_submodular_witness(obj: SetFunction, trials: Optional[int] = 200, seed: int = 0) -> bool:
    """Search for a diminishing-returns violation among nested pairs S ⊆ S'.

    With ``trials=None`` every nested pair and every outside candidate is
    checked (3^m pairs, keep m small); otherwise ``trials`` random pairs are
    drawn from ``random.Random(seed)``.  Returns False on the first violation.
    """
    m = obj.m
    if m > 15:
        raise ValueError("submodularity check limited to m <= 15")

    def violated(small, big) -> bool:
        f_small, f_big = value(obj, small), value(obj, big)
        for c in range(m):
            if c in big:
                continue
            if value(obj, small | {c}) - f_small < value(obj, big | {c}) - f_big:
                return True
        return False

    if trials is None:
        # each candidate is outside, in S' only, or in S (and hence S')
        for placement in itertools.product((0, 1, 2), repeat=m):
            small = {c for c, p in enumerate(placement) if p == 2}
            big = {c for c, p in enumerate(placement) if p >= 1}
            if violated(small, big):
                return False
        return True

    rng = random.Random(seed)
    for _ in range(trials):
        placement = [rng.randrange(3) for _ in range(m)]
        small = {c for c, p in enumerate(placement) if p == 2}
        big = {c for c, p in enumerate(placement) if p >= 1}
        if violated(small, big):
            return False
    return True
