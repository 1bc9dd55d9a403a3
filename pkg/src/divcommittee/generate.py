"""Seeded random instances with a prescribed label structure.

All randomness flows through one ``random.Random`` so a seed fixes the
instance bit for bit.  Bounds are drawn around the label counts of a hidden
committee; ``slack=0`` and ``tight`` options produce infeasible cases too.
"""
from __future__ import annotations

import random
from typing import Optional, Sequence

from .model import (
    Independent,
    Instance,
    Interval,
    Labeling,
    LayerPartition,
)
from .objectives import ChamberlinCourant, KBorda, PreferenceProfile, Separable

KINDS = ("balanced", "laminar", "layered", "two-laminar")
OBJECTIVES = ("separable", "cc", "k-borda")


def laminar_extents(rng: random.Random, m: int, n_labels: int, tries: int = 50) -> list[frozenset[int]]:
    """Random laminar family: nested or disjoint blocks of a shuffled candidate order."""
    order = list(range(m))
    rng.shuffle(order)
    blocks: list[tuple[int, int]] = []
    for _ in range(n_labels):
        for _ in range(tries):
            if m == 0 or rng.random() < 0.05:
                a = b = 0
            else:
                a = rng.randrange(m)
                b = rng.randrange(a + 1, m + 1)
            if a == b or all(b <= c or d <= a or (c <= a and b <= d) or (a <= c and d <= b) for c, d in blocks):
                blocks.append((a, b))
                break
        else:
            blocks.append((0, m))
    return [frozenset(order[a:b]) for a, b in blocks]


def layered_extents(rng: random.Random, m: int, groups: int, coverage: float = 0.9) -> list[frozenset[int]]:
    """One 1-layered layer: disjoint groups, each candidate in at most one."""
    buckets: list[set[int]] = [set() for _ in range(groups)]
    for c in range(m):
        if rng.random() < coverage:
            buckets[rng.randrange(groups)].add(c)
    return [frozenset(b) for b in buckets]


def random_profile(rng: random.Random, m: int, n: int) -> PreferenceProfile:
    rankings = []
    for _ in range(n):
        ranking = list(range(m))
        rng.shuffle(ranking)
        rankings.append(tuple(ranking))
    return PreferenceProfile(m, tuple(rankings))


def random_objective(rng: random.Random, m: int, kind: str = "separable", voters: int = 5, max_weight: int = 20):
    if kind == "separable":
        return Separable(tuple(rng.randint(0, max_weight) for _ in range(m)))
    profile = random_profile(rng, m, voters)
    if kind == "cc":
        return ChamberlinCourant(profile)
    if kind == "k-borda":
        return KBorda(profile)
    raise ValueError(f"unknown objective kind {kind!r}")


def interval_bounds(
    rng: random.Random, extents: Sequence[frozenset[int]], m: int, k: int, slack: int = 1, tight: float = 0.0
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Bounds around the counts of a hidden size-k committee.

    With probability ``tight`` per label the interval is redrawn uniformly,
    which may make the instance infeasible.
    """
    hidden = set(rng.sample(range(m), k))
    lower, upper = [], []
    for ext in extents:
        if rng.random() < tight:
            a, b = sorted((rng.randint(0, min(k, len(ext)) + 1), rng.randint(0, min(k, len(ext)) + 1)))
            lower.append(min(a, m))
            upper.append(min(b, m))
            continue
        count = len(hidden & ext)
        lower.append(max(0, count - rng.randint(0, slack)))
        upper.append(min(m, count + rng.randint(0, slack)))
    return tuple(lower), tuple(upper)


def allowed_sets(
    rng: random.Random, extents: Sequence[frozenset[int]], m: int, k: int, tight: float = 0.2
) -> tuple[frozenset[int], ...]:
    hidden = set(rng.sample(range(m), k))
    out = []
    for ext in extents:
        top = min(k, len(ext))
        vals = {v for v in range(top + 1) if rng.random() < 0.5}
        if rng.random() >= tight:
            vals.add(len(hidden & ext))
        if rng.random() < 0.3:
            # unconstrained labels are common in practice
            vals = set(range(m + 1))
        out.append(frozenset(vals))
    return tuple(out)


def build(
    extents: Sequence[frozenset[int]],
    m: int,
    k: int,
    spec,
    objective,
    layers: Optional[LayerPartition] = None,
    label_names: Optional[Sequence[str]] = None,
) -> Instance:
    names = tuple(label_names) if label_names else tuple(f"L{i}" for i in range(len(extents)))
    return Instance(
        tuple(f"c{i}" for i in range(m)),
        names,
        Labeling.from_extents(m, extents),
        spec,
        k,
        objective,
        layers,
    )


def generate(
    kind: str,
    m: int,
    k: int,
    seed: int,
    objective: str = "separable",
    voters: int = 5,
    n_labels: Optional[int] = None,
    constraints: str = "interval",
    slack: int = 1,
    tight: float = 0.0,
) -> Instance:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; choose from {KINDS}")
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    rng = random.Random(seed)
    layers = None
    names = None
    if kind == "balanced":
        if k % 2:
            raise ValueError("balanced instances need an even k")
        half = k // 2
        if m < k:
            raise ValueError("balanced instances need m >= k")
        size_a = rng.randint(half, m - half)
        order = list(range(m))
        rng.shuffle(order)
        extents = [frozenset(order[:size_a]), frozenset(order[size_a:])]
        names = ("A", "B")
        if constraints == "interval":
            spec = Interval((half, half), (half, half))
        else:
            spec = Independent((frozenset({half}), frozenset({half})))
        return build(extents, m, k, spec, random_objective(rng, m, objective, voters), None, names)
    if kind == "laminar":
        extents = laminar_extents(rng, m, n_labels if n_labels is not None else rng.randint(1, 5))
    elif kind == "layered":
        first = layered_extents(rng, m, rng.randint(2, 3))
        second = layered_extents(rng, m, rng.randint(2, 3))
        extents = first + second
        layers = LayerPartition(
            (tuple(range(len(first))), tuple(range(len(first), len(extents)))), ("layered", "layered")
        )
    else:
        first = laminar_extents(rng, m, n_labels if n_labels is not None else rng.randint(1, 3))
        second = laminar_extents(rng, m, n_labels if n_labels is not None else rng.randint(1, 3))
        extents = first + second
        layers = LayerPartition(
            (tuple(range(len(first))), tuple(range(len(first), len(extents)))), ("laminar", "laminar")
        )
    if constraints == "interval":
        spec = Interval(*interval_bounds(rng, extents, m, k, slack, tight))
    elif constraints == "independent":
        spec = Independent(allowed_sets(rng, extents, m, k, tight))
    else:
        raise ValueError(f"unknown constraint kind {constraints!r}")
    return build(extents, m, k, spec, random_objective(rng, m, objective, voters), layers, names)
