"""Tree DP for independent (allowed-count set) constraints on 1-laminar labels."""
from __future__ import annotations

from typing import Optional

from ..labels import ROOT
from ..model import Instance, SolveReport, make_report
from .common import normalize, require_independent, require_laminar_tree, require_separable

ALGORITHM = "dp"
BASIS = "separable objective, tree DP over the laminar labeling"

Cell = Optional[tuple[int, tuple[int, ...]]]


def _better(a: Cell, b: Cell) -> bool:
    """Higher value wins; equal values prefer the lexicographically smaller committee."""
    if b is None:
        return a is not None
    if a is None:
        return False
    return a[0] > b[0] or (a[0] == b[0] and a[1] < b[1])


def dp_tables(instance: Instance, optimize: bool = True) -> list[dict[int, Cell]]:
    """Per normalized node, the best sub-committee of each size 0..k (None for ⊥)."""
    spec = require_independent(instance)
    tree = require_laminar_tree(instance)
    nodes = normalize(tree)
    k = instance.k
    weights = instance.objective.weights if optimize else [0] * instance.m

    def admits(label, w):
        if label is None:
            return True
        if label == ROOT:
            return w == k
        return spec.admits(label, w)

    tables: list[dict[int, Cell]] = []
    for node in nodes:
        if node.is_leaf:
            if optimize:
                ranked = sorted(node.members, key=lambda c: (-weights[c], c))
            else:
                ranked = list(node.members)
            table: dict[int, Cell] = {}
            for w in range(min(k, node.size) + 1):
                if admits(node.label, w):
                    pick = tuple(sorted(ranked[:w]))
                    table[w] = (sum(weights[c] for c in pick), pick)
            tables.append(table)
            continue
        acc: dict[int, Cell] = {0: (0, ())}
        for ch in node.children:
            nxt: dict[int, Cell] = {}
            for w1, (v1, s1) in acc.items():
                for w2, (v2, s2) in tables[ch].items():
                    w = w1 + w2
                    if w > k:
                        continue
                    cand = (v1 + v2, tuple(sorted(s1 + s2)))
                    if _better(cand, nxt.get(w)):
                        nxt[w] = cand
            acc = nxt
        tables.append({w: cell for w, cell in acc.items() if admits(node.label, w)})
    return tables


def dp_independent_1laminar(instance: Instance, feasibility_only: bool = False) -> SolveReport:
    if not feasibility_only:
        require_separable(instance)
    tables = dp_tables(instance, optimize=not feasibility_only)
    best = tables[-1].get(instance.k)
    if best is None:
        return make_report(instance, None, "infeasible", ALGORITHM, basis=BASIS)
    status = "feasible" if feasibility_only else "optimal"
    return make_report(instance, best[1], status, ALGORITHM, basis=BASIS)
