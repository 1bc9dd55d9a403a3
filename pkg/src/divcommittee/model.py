"""Core domain types: candidates, labels, diversity specifications, instances.

Candidates and labels are referred to by dense integer indices everywhere
inside the library; display names only appear at the boundary (parsing and
report rendering).  A committee is a sorted tuple of candidate indices, so
Python's tuple ordering is the lexicographic tie-break order used by every
solver.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence, Union

from .objectives import (
    ChamberlinCourant,
    KBorda,
    Objective,
    PreferenceProfile,
    Separable,
)

INT64_MAX = 2**63 - 1

Committee = tuple[int, ...]


class InstanceError(ValueError):
    """Raised when raw instance data cannot be turned into a valid Instance."""


class InapplicableError(ValueError):
    """An algorithm was asked to solve an instance outside its preconditions."""


class CapExceededError(RuntimeError):
    """A resource cap (brute-force enumeration, label count) would be exceeded."""


def make_committee(members: Iterable[int]) -> Committee:
    members = list(members)
    canon = tuple(sorted(set(members)))
    if len(canon) != len(members):
        raise ValueError(f"duplicate candidates in committee {members!r}")
    return canon


@dataclass(frozen=True)
class Labeling:
    """Label sets per candidate plus the derived extent C_l of every label."""

    label_sets: tuple[frozenset[int], ...]
    n_labels: int
    extents: tuple[frozenset[int], ...] = field(init=False, compare=False)

    def __post_init__(self):
        buckets: list[set[int]] = [set() for _ in range(self.n_labels)]
        for c, labels in enumerate(self.label_sets):
            for lab in labels:
                if not 0 <= lab < self.n_labels:
                    raise ValueError(f"candidate {c} carries unknown label {lab}")
                buckets[lab].add(c)
        object.__setattr__(self, "extents", tuple(frozenset(b) for b in buckets))

    @classmethod
    def from_extents(cls, m: int, extents: Sequence[Iterable[int]]) -> "Labeling":
        sets: list[set[int]] = [set() for _ in range(m)]
        for lab, ext in enumerate(extents):
            for c in ext:
                sets[c].add(lab)
        return cls(tuple(frozenset(s) for s in sets), len(extents))

    @property
    def m(self) -> int:
        return len(self.label_sets)

    @property
    def candidates(self) -> frozenset[int]:
        return frozenset(range(self.m))


@dataclass(frozen=True)
class Independent:
    """|S ∩ C_l| must lie in an arbitrary allowed set, per label."""

    allowed: tuple[frozenset[int], ...]

    def admits(self, label: int, count: int) -> bool:
        return count in self.allowed[label]

    @property
    def kind(self) -> str:
        return "independent"


@dataclass(frozen=True)
class Interval:
    """lower[l] <= |S ∩ C_l| <= upper[l], per label."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def admits(self, label: int, count: int) -> bool:
        return self.lower[label] <= count <= self.upper[label]

    @property
    def kind(self) -> str:
        return "interval"


DiversitySpec = Union[Independent, Interval]

LAYER_KINDS = ("laminar", "layered")


@dataclass(frozen=True)
class LayerPartition:
    layers: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]

    def __post_init__(self):
        if len(self.layers) != len(self.kinds):
            raise ValueError("one kind per layer required")
        for kind in self.kinds:
            if kind not in LAYER_KINDS:
                raise ValueError(f"unknown layer kind {kind!r}")
        seen = [lab for layer in self.layers for lab in layer]
        if len(seen) != len(set(seen)):
            raise ValueError("layers must be disjoint")

    def is_partition_of(self, n_labels: int) -> bool:
        seen = [lab for layer in self.layers for lab in layer]
        return len(seen) == n_labels and set(seen) == set(range(n_labels))


@dataclass(frozen=True)
class Instance:
    candidates: tuple[str, ...]
    labels: tuple[str, ...]
    labeling: Labeling
    spec: DiversitySpec
    k: int
    objective: Objective
    layers: Optional[LayerPartition] = None

    @property
    def m(self) -> int:
        return len(self.candidates)

    @property
    def n_labels(self) -> int:
        return len(self.labels)

    @cached_property
    def candidate_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.candidates)}

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.labels)}

    def names(self, committee: Iterable[int]) -> list[str]:
        return [self.candidates[c] for c in committee]

    def bounds(self, label: int) -> tuple[int, int]:
        """Interval bounds of a label; only meaningful for interval specs."""
        if not isinstance(self.spec, Interval):
            raise InapplicableError("interval bounds requested for a non-interval spec")
        return self.spec.lower[label], self.spec.upper[label]

    def value(self, committee: Iterable[int]) -> int:
        return self.objective.value(tuple(committee))


def label_counts(instance: Instance, w: Iterable[int]) -> list[int]:
    counts = [0] * instance.n_labels
    for c in w:
        for lab in instance.labeling.label_sets[c]:
            counts[lab] += 1
    return counts


def is_diverse(instance: Instance, w: Iterable[int]) -> bool:
    """True iff ``w`` has size k and meets every per-label constraint."""
    w = tuple(w)
    if len(w) != instance.k or len(set(w)) != len(w):
        return False
    counts = label_counts(instance, w)
    admits = instance.spec.admits
    return all(admits(lab, n) for lab, n in enumerate(counts))


@dataclass(frozen=True)
class SolveReport:
    status: str
    committee: Optional[Committee]
    value: Optional[int]
    algorithm: str
    guarantee: Optional[Fraction] = None
    basis: str = ""

    STATUSES = ("optimal", "approximate", "heuristic", "feasible", "infeasible")

    def __post_init__(self):
        if self.status not in self.STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if (self.committee is None) != (self.status == "infeasible"):
            raise ValueError("committee must be present iff status is not infeasible")

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


def make_report(
    instance: Instance,
    committee: Optional[Iterable[int]],
    status: str,
    algorithm: str,
    guarantee: Optional[Fraction] = None,
    basis: str = "",
) -> SolveReport:
    if committee is None:
        return SolveReport("infeasible", None, None, algorithm, None, basis)
    committee = make_committee(committee)
    return SolveReport(
        status, committee, instance.value(committee), algorithm, guarantee, basis
    )


# --- raw (parsed JSON) <-> Instance -------------------------------------------------


def _to_int_weight(raw, scale: int, name: str) -> int:
    try:
        dec = Decimal(str(raw)) if not isinstance(raw, Decimal) else raw
    except InvalidOperation:
        raise InstanceError(f"weight of {name!r} is not a decimal number: {raw!r}")
    if isinstance(raw, bool) or not dec.is_finite():
        raise InstanceError(f"weight of {name!r} is not a finite number: {raw!r}")
    scaled = dec * scale
    if scaled != scaled.to_integral_value():
        raise InstanceError(
            f"weight of {name!r} ({raw}) times scale {scale} is not an integer"
        )
    return int(scaled)


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, Decimal)):
        raise InstanceError(f"{what} must be an integer, got {value!r}")
    if isinstance(value, Decimal):
        if value != value.to_integral_value():
            raise InstanceError(f"{what} must be an integer, got {value}")
        value = int(value)
    return value


def _parse_profile(raw_profile, cand_index: Mapping[str, int], m: int) -> PreferenceProfile:
    rankings = []
    for v, ranking in enumerate(raw_profile):
        unknown = [name for name in ranking if name not in cand_index]
        if unknown:
            raise InstanceError(f"voter {v} ranks unknown candidates {unknown}")
        order = tuple(cand_index[name] for name in ranking)
        if len(order) != m or len(set(order)) != m:
            raise InstanceError(
                f"voter {v} must rank all {m} candidates exactly once "
                f"(got {len(order)} entries)"
            )
        rankings.append(order)
    return PreferenceProfile(m, tuple(rankings))


def _parse_objective(raw_obj, candidates: Sequence[str], cand_index) -> Objective:
    m = len(candidates)
    kind = raw_obj.get("type")
    if kind == "separable":
        scale = _as_int(raw_obj.get("scale", 1), "objective.scale")
        if scale < 1:
            raise InstanceError("objective.scale must be a positive integer")
        raw_weights = raw_obj.get("weights", {})
        unknown = sorted(set(raw_weights) - set(cand_index))
        if unknown:
            raise InstanceError(f"weights reference unknown candidates {unknown}")
        weights = [0] * m
        for name, w in raw_weights.items():
            weights[cand_index[name]] = _to_int_weight(w, scale, name)
        if sum(abs(w) for w in weights) > INT64_MAX:
            raise InstanceError("total absolute weight exceeds the 64-bit integer range")
        return Separable(tuple(weights), scale)
    if kind in ("cc", "k-borda"):
        profile = _parse_profile(raw_obj.get("profile", []), cand_index, m)
        # worst case k-Borda total: n voters * m members * (m - 1) points
        if len(profile.rankings) * m * m > INT64_MAX:
            raise InstanceError("profile too large: scores could exceed 64-bit range")
        return ChamberlinCourant(profile) if kind == "cc" else KBorda(profile)
    raise InstanceError(f"unknown objective type {kind!r}")


def _unique_names(names, what: str) -> tuple[str, ...]:
    names = tuple(names)
    seen = set()
    for name in names:
        if name in seen:
            raise InstanceError(f"duplicate {what} name {name!r}")
        seen.add(name)
    return names


def validate_instance(raw) -> Instance:
    """Turn parsed instance data into a canonical :class:`Instance`.

    ``raw`` follows the instance-file layout (see :mod:`divcommittee.io`).
    An already-built Instance is accepted too and re-validated through its
    raw form, which makes the function idempotent.
    """
    if isinstance(raw, Instance):
        raw = instance_to_raw(raw)

    raw_cands = raw.get("candidates", [])
    candidates = _unique_names((c["name"] for c in raw_cands), "candidate")
    cand_index = {name: i for i, name in enumerate(candidates)}
    m = len(candidates)

    if "labels" in raw:
        declared = list(raw["labels"])
        for c in raw_cands:
            unknown = [lab for lab in c.get("labels", []) if lab not in declared]
            if unknown:
                raise InstanceError(f"candidate {c['name']!r} uses undeclared labels {unknown}")
    else:
        declared = []
        for c in raw_cands:
            declared += [lab for lab in c.get("labels", []) if lab not in declared]
    labels = _unique_names(declared, "label")
    label_index = {name: i for i, name in enumerate(labels)}
    n_labels = len(labels)

    label_sets = []
    for c in raw_cands:
        own = c.get("labels", [])
        if len(set(own)) != len(own):
            raise InstanceError(f"candidate {c['name']!r} lists a label twice")
        label_sets.append(frozenset(label_index[lab] for lab in own))
    labeling = Labeling(tuple(label_sets), n_labels)

    k = _as_int(raw.get("k"), "k")
    if k < 0:
        raise InstanceError("k must be nonnegative")
    if k > m:
        raise InstanceError(f"k exceeds candidate count ({k} > {m})")

    spec = _parse_constraints(raw.get("constraints", {}), label_index, m)

    objective = _parse_objective(raw.get("objective", {"type": "separable"}), candidates, cand_index)

    layers = None
    if raw.get("layers") is not None:
        parts, kinds = [], []
        for layer in raw["layers"]:
            unknown = [lab for lab in layer["labels"] if lab not in label_index]
            if unknown:
                raise InstanceError(f"layer references unknown labels {unknown}")
            parts.append(tuple(sorted(label_index[lab] for lab in layer["labels"])))
            kinds.append(layer.get("kind", "laminar"))
        try:
            layers = LayerPartition(tuple(parts), tuple(kinds))
        except ValueError as exc:
            raise InstanceError(str(exc)) from None
        if not layers.is_partition_of(n_labels):
            raise InstanceError("declared layers must partition the label set")

    return Instance(candidates, labels, labeling, spec, k, objective, layers)


def _parse_constraints(raw_cons, label_index, m) -> DiversitySpec:
    unknown = sorted(set(raw_cons) - set(label_index))
    if unknown:
        raise InstanceError(f"constraint references unknown label(s) {unknown}")
    n = len(label_index)
    independent = any("allowed" in c for c in raw_cons.values())
    lower, upper = [0] * n, [m] * n
    allowed = [frozenset(range(m + 1)) for _ in range(n)]
    for name, con in raw_cons.items():
        lab = label_index[name]
        if "allowed" in con:
            if "min" in con or "max" in con:
                raise InstanceError(f"label {name!r}: give either allowed or min/max")
            vals = [_as_int(v, f"allowed count of {name!r}") for v in con["allowed"]]
            bad = [v for v in vals if not 0 <= v <= m]
            if bad:
                raise InstanceError(f"label {name!r}: allowed counts {bad} outside [0, {m}]")
            allowed[lab] = frozenset(vals)
            continue
        lo = _as_int(con.get("min", 0), f"min of {name!r}")
        hi = _as_int(con.get("max", m), f"max of {name!r}")
        if lo < 0 or hi < 0:
            raise InstanceError(f"label {name!r}: negative bound")
        if hi > m:
            raise InstanceError(f"label {name!r}: max {hi} exceeds candidate count {m}")
        if lo > hi:
            raise InstanceError(f"trivially infeasible label {name!r}: min {lo} > max {hi}")
        lower[lab], upper[lab] = lo, hi
        allowed[lab] = frozenset(range(lo, hi + 1))
    if independent:
        return Independent(tuple(allowed))
    return Interval(tuple(lower), tuple(upper))


def _weight_to_raw(weight: int, scale: int):
    if weight % scale == 0:
        return weight // scale
    return str(Decimal(weight) / Decimal(scale))


def instance_to_raw(instance: Instance) -> dict:
    """Inverse of :func:`validate_instance` (JSON-ready apart from key order)."""
    labels = instance.labels
    raw = {
        "candidates": [
            {"name": name, "labels": [labels[lab] for lab in sorted(instance.labeling.label_sets[c])]}
            for c, name in enumerate(instance.candidates)
        ],
        "labels": list(labels),
    }
    if instance.layers is not None:
        raw["layers"] = [
            {"labels": [labels[lab] for lab in layer], "kind": kind}
            for layer, kind in zip(instance.layers.layers, instance.layers.kinds)
        ]
    m = instance.m
    cons = {}
    spec = instance.spec
    full = frozenset(range(m + 1))
    for lab, name in enumerate(labels):
        if isinstance(spec, Interval):
            if (spec.lower[lab], spec.upper[lab]) != (0, m):
                cons[name] = {"min": spec.lower[lab], "max": spec.upper[lab]}
        elif spec.allowed[lab] != full:
            cons[name] = {"allowed": sorted(spec.allowed[lab])}
    if isinstance(spec, Independent) and not cons and labels:
        # keep the spec kind across the round trip
        cons[labels[0]] = {"allowed": sorted(full)}
    raw["constraints"] = cons
    raw["k"] = instance.k
    obj = instance.objective
    names = instance.candidates
    if isinstance(obj, Separable):
        raw["objective"] = {
            "type": "separable",
            "weights": {names[c]: _weight_to_raw(w, obj.scale) for c, w in enumerate(obj.weights)},
            "scale": obj.scale,
        }
    elif isinstance(obj, (ChamberlinCourant, KBorda)):
        raw["objective"] = {
            "type": "cc" if isinstance(obj, ChamberlinCourant) else "k-borda",
            "profile": [[names[c] for c in ranking] for ranking in obj.profile.rankings],
        }
    else:
        raise InstanceError(f"objective {type(obj).__name__} has no file representation")
    return raw
