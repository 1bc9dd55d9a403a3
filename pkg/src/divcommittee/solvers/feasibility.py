"""Interval feasibility on a laminar tree via achievable-size ranges.

For every node the set of sizes of sub-committees inside its extent that
satisfy all constraints below it is an interval [lo, hi]; ranges combine
bottom-up by summing over children and clipping to the node's own bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from ..labels import ROOT, LaminarTree
from ..model import Committee, Instance
from .common import TreeNode, normalize, require_interval, require_laminar_tree

INF = math.inf


@dataclass(frozen=True)
class FeasibilityRange:
    feasible: bool
    lower: dict[int, float]
    upper: dict[int, float]
    witness: Optional[Committee] = None

    def range_of(self, label: int) -> tuple[float, float]:
        return self.lower[label], self.upper[label]


def tree_ranges(
    nodes: Sequence[TreeNode],
    lower: Sequence[int],
    upper: Sequence[int],
    k: int,
) -> tuple[list[float], list[float]]:
    """Per-node [lo, hi] with (INF, -INF) marking an unsatisfiable subtree."""
    lo: list[float] = [INF] * len(nodes)
    hi: list[float] = [-INF] * len(nodes)
    for i, node in enumerate(nodes):
        if node.label is None:
            b1, b2 = 0, node.size
        elif node.label == ROOT:
            b1, b2 = k, k
        else:
            b1, b2 = lower[node.label], upper[node.label]
        if node.is_leaf:
            top = min(b2, node.size)
            if b1 <= top:
                lo[i], hi[i] = b1, top
            continue
        if any(lo[ch] > hi[ch] for ch in node.children):
            continue
        a1 = max(sum(lo[ch] for ch in node.children), b1)
        a2 = min(sum(hi[ch] for ch in node.children), b2, node.size)
        if a1 <= a2:
            lo[i], hi[i] = a1, a2
    return lo, hi


def allocate(
    nodes: Sequence[TreeNode],
    lo: Sequence[float],
    hi: Sequence[float],
    target: int,
    node: Optional[int] = None,
) -> list[int]:
    """Pick ``target`` members under ``node`` meeting every bound below it.

    Children first receive their minimum feasible count; the remainder is
    handed out in child order.  Leaves contribute their lowest-index members.
    """
    if node is None:
        node = len(nodes) - 1
    assert lo[node] <= target <= hi[node], "allocation target outside feasible range"
    cur = nodes[node]
    if cur.is_leaf:
        return list(cur.members[:target])
    share = {ch: int(lo[ch]) for ch in cur.children}
    rest = target - sum(share.values())
    for ch in cur.children:
        extra = min(rest, int(hi[ch]) - share[ch])
        share[ch] += extra
        rest -= extra
    assert rest == 0
    out: list[int] = []
    for ch in cur.children:
        out += allocate(nodes, lo, hi, share[ch], ch)
    return out


def interval_ranges(
    tree: LaminarTree, lower: Sequence[int], upper: Sequence[int], k: int
) -> FeasibilityRange:
    nodes = normalize(tree)
    lo, hi = tree_ranges(nodes, lower, upper, k)
    by_label_lo: dict[int, float] = {}
    by_label_hi: dict[int, float] = {}
    for i, node in enumerate(nodes):
        if node.label is not None:
            by_label_lo[node.label], by_label_hi[node.label] = lo[i], hi[i]
    root = len(nodes) - 1
    feasible = lo[root] <= k <= hi[root]
    witness = tuple(sorted(allocate(nodes, lo, hi, k))) if feasible else None
    return FeasibilityRange(feasible, by_label_lo, by_label_hi, witness)


def feasibility_interval_1laminar(instance: Instance) -> FeasibilityRange:
    spec = require_interval(instance)
    tree = require_laminar_tree(instance)
    return interval_ranges(tree, spec.lower, spec.upper, instance.k)
