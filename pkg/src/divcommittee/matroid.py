"""Matroid of all subsets of diverse size-k committees for one laminar layer.

Independence of ``W ∪ {y}`` is decided against a maintained diverse
committee ``B ⊇ W``: it holds iff ``y ∈ B`` or some ``x ∈ B \\ W`` can be
swapped out for ``y`` while staying diverse.  Circuits are read off the
same basis.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .labels import LaminarTree
from .solvers.feasibility import interval_ranges


class ProtocolError(RuntimeError):
    """The caller broke the W ⊆ B protocol of the maintained basis."""


class LowerExtensionMatroid:
    def __init__(
        self,
        tree: LaminarTree,
        lower: Sequence[int],
        upper: Sequence[int],
        k: int,
        basis: Iterable[int],
    ):
        self.tree = tree
        self.k = k
        self._bounds = (lower, upper)
        self.labels = tree.labels
        self.lower = {lab: lower[lab] for lab in self.labels}
        self.upper = {lab: upper[lab] for lab in self.labels}
        self._cand_labels: list[list[int]] = [[] for _ in range(tree.m)]
        for lab in self.labels:
            for c in tree.extent[lab]:
                self._cand_labels[c].append(lab)
        self.initial_basis = frozenset(basis)
        self.basis = self.initial_basis
        assert self.is_member(self.basis), "initial basis is not a diverse committee"

    @property
    def m(self) -> int:
        return self.tree.m

    def is_member(self, s: Iterable[int]) -> bool:
        """Whether ``s`` is a full diverse committee of this layer."""
        s = set(s)
        if len(s) != self.k:
            return False
        counts = dict.fromkeys(self.labels, 0)
        for c in s:
            for lab in self._cand_labels[c]:
                counts[lab] += 1
        return all(self.lower[lab] <= n <= self.upper[lab] for lab, n in counts.items())

    def _check_protocol(self, w: frozenset) -> None:
        if not w <= self.basis:
            raise ProtocolError(f"{sorted(w)} is not contained in the maintained basis")

    def exchange_partner(self, w: Iterable[int], y: int) -> tuple[bool, Optional[int]]:
        """(independent?, x to swap out of B) for ``w ∪ {y}``, without mutating B."""
        w = frozenset(w)
        self._check_protocol(w)
        if y in self.basis:
            return True, None
        for x in sorted(self.basis - w):
            if self.is_member((self.basis - {x}) | {y}):
                return True, x
        return False, None

    def can_extend(self, w: Iterable[int], y: int) -> bool:
        """Independence of ``w ∪ {y}``; on success B is moved to contain y."""
        w = frozenset(w)
        if y in w:
            raise ValueError(f"candidate {y} already in the committee")
        ok, x = self.exchange_partner(w, y)
        if ok and x is not None:
            self.basis = (self.basis - {x}) | {y}
        return ok

    def circuit(self, w: Iterable[int], y: int) -> frozenset[int]:
        w = frozenset(w)
        ok, _ = self.exchange_partner(w, y)
        if ok:
            raise ValueError(f"{sorted(w | {y})} is independent; it has no circuit")
        ext = self.basis | {y}
        return frozenset(x for x in ext if self.is_member(ext - {x}))

    def replace_basis(self, basis: Iterable[int]) -> None:
        basis = frozenset(basis)
        assert self.is_member(basis), "replacement basis is not a diverse committee"
        self.basis = basis

    def fresh(self) -> "LowerExtensionMatroid":
        return LowerExtensionMatroid(self.tree, *self._bounds, self.k, self.initial_basis)

    def basis_containing(self, t: Iterable[int]) -> Optional[frozenset[int]]:
        """A diverse committee containing ``t``, or None when t is dependent."""
        probe = self.fresh()
        w: set[int] = set()
        for y in sorted(set(t)):
            if not probe.can_extend(w, y):
                return None
            w.add(y)
        return probe.basis

    def is_independent(self, t: Iterable[int]) -> bool:
        return self.basis_containing(t) is not None


def new_lower_extension(
    tree: LaminarTree, lower: Sequence[int], upper: Sequence[int], k: int
) -> Optional[LowerExtensionMatroid]:
    """The matroid for one layer, or None when no diverse committee exists."""
    ranges = interval_ranges(tree, lower, upper, k)
    if not ranges.feasible:
        return None
    return LowerExtensionMatroid(tree, lower, upper, k, ranges.witness)


def exchange_check(
    mat: LowerExtensionMatroid, w: Iterable[int], xs: Sequence[int], ys: Sequence[int]
) -> bool:
    """Independence of ``(w \\ xs) ∪ ys``; used to test the exchange lemma."""
    return mat.is_independent((set(w) - set(xs)) | set(ys))


# name used by the operations contract
frank_exchange_check = exchange_check


__all__ = [
    "LowerExtensionMatroid",
    "ProtocolError",
    "exchange_check",
    "frank_exchange_check",
    "new_lower_extension",
]
