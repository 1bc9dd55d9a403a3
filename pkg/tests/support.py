"""Instance builders and independent oracles shared by the test modules.

The oracles here deliberately avoid the package's solver code: they work
from the definitions (subset enumeration and counting) so that agreement
with the solvers means something.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Mapping, Optional, Sequence

from divcommittee.model import Instance, Interval, validate_instance


def make(
    labels_of: Mapping[str, Sequence[str]],
    k: int,
    constraints: Optional[Mapping[str, dict]] = None,
    weights: Optional[Mapping[str, int]] = None,
    profile: Optional[Sequence[Sequence[str]]] = None,
    objective: str = "cc",
    labels: Optional[Sequence[str]] = None,
    layers: Optional[Sequence[dict]] = None,
) -> Instance:
    """Build an instance from a name -> labels mapping, in insertion order."""
    raw = {
        "candidates": [{"name": c, "labels": list(ls)} for c, ls in labels_of.items()],
        "k": k,
        "constraints": dict(constraints or {}),
    }
    if labels is not None:
        raw["labels"] = list(labels)
    if layers is not None:
        raw["layers"] = list(layers)
    if profile is not None:
        raw["objective"] = {"type": objective, "profile": [list(r) for r in profile]}
    else:
        w = weights or {c: 0 for c in labels_of}
        raw["objective"] = {"type": "separable", "weights": dict(w)}
    return validate_instance(raw)


def continents(k: int = 4, **constraints) -> Instance:
    """Countries r1..r4 nested in continents R1, R2 over candidates a..e."""
    labels_of = {
        "a": ["r1", "R1"],
        "b": ["r1", "R1"],
        "c": ["r2", "R1"],
        "d": ["r3", "R2"],
        "e": ["r4", "R2"],
    }
    cons = {name: {"min": lo, "max": hi} for name, (lo, hi) in constraints.items()}
    return make(labels_of, k, cons, labels=["r1", "r2", "r3", "r4", "R1", "R2"])


def balanced_fm(weights=(4, 3, 2, 1), k: int = 2) -> Instance:
    """F = {a, b}, M = {c, d}, one of each."""
    half = k // 2
    return make(
        {"a": ["F"], "b": ["F"], "c": ["M"], "d": ["M"]},
        k,
        {"F": {"min": half, "max": half}, "M": {"min": half, "max": half}},
        weights=dict(zip("abcd", weights)),
    )


def gender_seniority(weights=(0, 0, 0, 0), k: int = 2, **bounds) -> Instance:
    """a(F,J) b(F,S) c(M,J) d(M,S) with layers {F,M} and {J,S}."""
    cons = {lab: {"min": lo, "max": hi} for lab, (lo, hi) in bounds.items()}
    return make(
        {"a": ["F", "J"], "b": ["F", "S"], "c": ["M", "J"], "d": ["M", "S"]},
        k,
        cons,
        weights=dict(zip("abcd", weights)),
        labels=["F", "M", "J", "S"],
        layers=[{"labels": ["F", "M"], "kind": "layered"}, {"labels": ["J", "S"], "kind": "layered"}],
    )


# oracles -------------------------------------------------------------------


def counts_ok(instance: Instance, members) -> bool:
    """Diversity straight from the definition, ignoring the committee size."""
    spec = instance.spec
    for lab in range(instance.n_labels):
        count = sum(1 for c in members if lab in instance.labeling.label_sets[c])
        if isinstance(spec, Interval):
            if not spec.lower[lab] <= count <= spec.upper[lab]:
                return False
        elif count not in spec.allowed[lab]:
            return False
    return True


def diverse_committees(instance: Instance) -> list[tuple[int, ...]]:
    return [w for w in combinations(range(instance.m), instance.k) if counts_ok(instance, w)]


@dataclass(frozen=True)
class Best:
    value: Optional[int]
    committee: Optional[tuple[int, ...]]

    @property
    def feasible(self) -> bool:
        return self.committee is not None


def oracle_best(instance: Instance, f: Optional[Callable] = None) -> Best:
    """Maximum over diverse committees; the lexicographically first maximum wins."""
    f = f or instance.value
    best = Best(None, None)
    for w in diverse_committees(instance):
        v = f(w)
        if best.value is None or v > best.value:
            best = Best(v, w)
    return best


def oracle_unconstrained(instance: Instance) -> int:
    return max(instance.value(w) for w in combinations(range(instance.m), instance.k))


def lower_extension(instance: Instance) -> set[frozenset[int]]:
    """All subsets of diverse committees."""
    family: set[frozenset[int]] = set()
    for w in diverse_committees(instance):
        for r in range(len(w) + 1):
            family.update(frozenset(t) for t in combinations(w, r))
    return family


def achievable_sizes(instance: Instance, extent: frozenset[int], below: Sequence[int]) -> set[int]:
    """Sizes s of sets T inside ``extent`` meeting every constraint of the labels in ``below``."""
    spec = instance.spec
    out = set()
    ext = sorted(extent)
    for r in range(len(ext) + 1):
        for t in combinations(ext, r):
            ok = True
            for lab in below:
                count = sum(1 for c in t if lab in instance.labeling.label_sets[c])
                if not spec.lower[lab] <= count <= spec.upper[lab]:
                    ok = False
                    break
            if ok:
                out.add(r)
    return out


def ratio_at_least(value: int, bound: Fraction, optimum: int) -> bool:
    """value >= bound * optimum, exactly."""
    return value * bound.denominator >= bound.numerator * optimum


# a test-only objective -----------------------------------------------------


@dataclass(frozen=True)
class TableObjective:
    """Set function given by an explicit subset -> value table."""

    m: int
    table: Mapping[frozenset, int]
    separable: bool = False

    def value(self, s) -> int:
        return self.table[frozenset(s)]




# matroid checks -------------------------------------------------------------


def laminar_interval_families(positions: int, max_labels: int):
    """Every laminar family of at most ``max_labels`` labels, up to renaming candidates.

    A laminar family can always be laid out so each extent is a contiguous
    block of some candidate order, so blocks over ``positions`` slots (plus
    the empty extent) cover all shapes.
    """
    from itertools import combinations_with_replacement

    blocks = [(0, 0)] + [(a, b) for a in range(positions) for b in range(a + 1, positions + 1)]

    def compatible(p, q):
        (a, b), (c, d) = p, q
        if a == b or c == d:
            return True
        return b <= c or d <= a or (c <= a and b <= d) or (a <= c and d <= b)

    for n in range(max_labels + 1):
        for fam in combinations_with_replacement(blocks, n):
            if all(compatible(p, q) for p, q in combinations(fam, 2)):
                yield [frozenset(range(a, b)) for a, b in fam]


def check_lower_extension(mat, instance: Instance) -> list[str]:
    """Compare a lower-extension matroid with brute force; returns the failures found."""
    from divcommittee.matroid import exchange_check

    m = instance.m
    brute = lower_extension(instance)
    problems: list[str] = []

    chain: set[frozenset[int]] = set()
    for r in range(m + 1):
        for t in combinations(range(m), r):
            probe = mat.fresh()
            w: set[int] = set()
            for y in t:
                if not probe.can_extend(w, y):
                    break
                w.add(y)
                if not (probe.is_member(probe.basis) and w <= probe.basis):
                    problems.append(f"basis invariant broken after adding {y} to {sorted(w)}")
            else:
                chain.add(frozenset(t))
    if chain != brute:
        problems.append(f"family differs: extra {len(chain - brute)}, missing {len(brute - chain)}")
        return problems

    fam = brute
    if frozenset() not in fam:
        problems.append("(I1) empty set missing")
    for t in fam:
        if any(t - {x} not in fam for x in t):
            problems.append(f"(I2) {sorted(t)} not downward closed")
    for x in fam:
        for y in fam:
            if len(x) < len(y) and not any(x | {e} in fam for e in y - x):
                problems.append(f"(I3) no exchange from {sorted(y)} into {sorted(x)}")

    def circ(w: frozenset, y: int) -> frozenset:
        ext = w | {y}
        return frozenset(x for x in ext if ext - {x} in fam)

    for w in fam:
        outside = [y for y in range(m) if y not in w and w | {y} not in fam]
        if not outside:
            continue
        probe = mat.fresh()
        probe.replace_basis(probe.basis_containing(w))
        circuits = {}
        for y in outside:
            got = probe.circuit(w, y)
            circuits[y] = got
            if got != circ(w, y):
                problems.append(f"circuit({sorted(w)}, {y}) = {sorted(got)}, expected {sorted(circ(w, y))}")
        for y in outside:
            for x in circuits[y] - {y}:
                if not exchange_check(mat, w, [x], [y]):
                    problems.append(f"exchange {x}->{y} on {sorted(w)} left the family")
        for y1, y2 in combinations(outside, 2):
            for ya, yb in ((y1, y2), (y2, y1)):
                for x1 in circuits[ya] - {ya}:
                    if x1 in circuits[yb]:
                        continue
                    for x2 in circuits[yb] - {yb, x1}:
                        if not exchange_check(mat, w, [x1, x2], [ya, yb]):
                            problems.append(f"exchange {x1},{x2}->{ya},{yb} on {sorted(w)} left the family")
    return problems
