"""Matroid intersection for interval constraints on two laminar layers.

Each layer yields a lower-extension matroid; a diverse committee exists iff
the two matroids share an independent set of size k.  Augmenting paths run
through the exchange graph, and both layers keep a full diverse committee
``B_i ⊇ W`` so membership and circuit queries stay cheap.

The weighted variant picks, in every round, the minimum-length path under
vertex lengths ``-w(y)`` (entering) and ``+w(x)`` (leaving), breaking ties
by hop count; weights are perturbed by distinct powers of two so the final
committee is the lexicographically smallest optimum.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from ..labels import build_laminar_tree, is_2_laminar, verify_partition
from ..matroid import LowerExtensionMatroid, new_lower_extension
from ..model import InapplicableError, Instance, SolveReport, make_report
from .common import require_interval, require_separable

log = logging.getLogger(__name__)


@dataclass
class ExchangeGraph:
    sources: set[int] = field(default_factory=set)
    sinks: set[int] = field(default_factory=set)
    arcs: dict[int, list[int]] = field(default_factory=dict)


def two_layers(instance: Instance) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Declared layers when they form a valid split into <= 2 laminar layers, else recognized."""
    part = instance.layers
    if part is not None and len(part.layers) <= 2 and verify_partition(instance.labeling, part):
        layers = tuple(part.layers) + ((),) * (2 - len(part.layers))
        return layers[0], layers[1]
    found = is_2_laminar(instance.labeling)
    if found is None:
        raise InapplicableError("requires a 2-laminar labeling")
    return found.layers[0], found.layers[1]


def layer_matroids(instance: Instance) -> Optional[tuple[LowerExtensionMatroid, LowerExtensionMatroid]]:
    spec = require_interval(instance)
    mats = []
    for layer in two_layers(instance):
        tree = build_laminar_tree(instance.labeling, layer)
        mat = new_lower_extension(tree, spec.lower, spec.upper, instance.k)
        if mat is None:
            return None
        mats.append(mat)
    return mats[0], mats[1]


def exchange_graph(m1: LowerExtensionMatroid, m2: LowerExtensionMatroid, w: frozenset[int]) -> ExchangeGraph:
    g = ExchangeGraph()
    g.arcs = {v: [] for v in range(m1.m)}
    for y in range(m1.m):
        if y in w:
            continue
        if m1.exchange_partner(w, y)[0]:
            g.sources.add(y)
        else:
            for x in sorted(m1.circuit(w, y) - {y}):
                g.arcs[x].append(y)
        if m2.exchange_partner(w, y)[0]:
            g.sinks.add(y)
        else:
            for x in sorted(m2.circuit(w, y) - {y}):
                g.arcs[y].append(x)
    for v in g.arcs:
        g.arcs[v].sort()
    return g


def bfs_path(g: ExchangeGraph) -> Optional[list[int]]:
    prev: dict[int, Optional[int]] = {}
    queue = deque()
    for s in sorted(g.sources):
        prev[s] = None
        queue.append(s)
    while queue:
        v = queue.popleft()
        if v in g.sinks:
            path = [v]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for u in g.arcs[v]:
            if u not in prev:
                prev[u] = v
                queue.append(u)
    return None


def cheapest_path(g: ExchangeGraph, length: list[int]) -> Optional[list[int]]:
    """Minimum (total vertex length, hops) source-to-sink path via Bellman-Ford."""
    n = len(length)
    best: dict[int, tuple[int, int]] = {}
    prev: dict[int, Optional[int]] = {}
    for s in g.sources:
        best[s] = (length[s], 0)
        prev[s] = None
    for _ in range(n):
        changed = False
        for v in sorted(best):
            cost, hops = best[v]
            for u in g.arcs[v]:
                cand = (cost + length[u], hops + 1)
                if u not in best or cand < best[u]:
                    best[u] = cand
                    prev[u] = v
                    changed = True
        if not changed:
            break
    reachable = [t for t in g.sinks if t in best]
    if not reachable:
        return None
    end = min(reachable, key=lambda t: (best[t], t))
    path = [end]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
        assert len(path) <= n, "predecessor cycle in exchange graph"
    return path[::-1]


def augment(
    m1: LowerExtensionMatroid,
    m2: LowerExtensionMatroid,
    w: frozenset[int],
    path: list[int],
    strict: bool = True,
) -> frozenset[int]:
    ys, xs = set(path[0::2]), set(path[1::2])
    for mat, end in ((m1, path[0]), (m2, path[-1])):
        if end not in mat.basis:
            ok, x = mat.exchange_partner(w, end)
            assert ok and x is not None
            mat.replace_basis((mat.basis - {x}) | {end})
    new_w = (w - xs) | ys
    for mat in (m1, m2):
        cand = (mat.basis | ys) - xs
        if mat.is_member(cand):
            mat.replace_basis(cand)
            continue
        if strict:
            raise AssertionError("basis update left the diverse family")
        log.debug("rebuilding basis after weighted augmentation")
        rebuilt = mat.basis_containing(new_w)
        assert rebuilt is not None, "augmented set is not independent"
        mat.replace_basis(rebuilt)
    assert len(new_w) == len(w) + 1
    assert new_w <= m1.basis and new_w <= m2.basis
    return new_w


def matroid_intersection_feasibility(instance: Instance) -> SolveReport:
    mats = layer_matroids(instance)
    basis = "interval constraints on two laminar layers, matroid intersection"
    if mats is None:
        return make_report(instance, None, "infeasible", "intersection", basis=basis)
    m1, m2 = mats
    w: frozenset[int] = frozenset()
    while len(w) < instance.k:
        path = bfs_path(exchange_graph(m1, m2, w))
        if path is None:
            break
        w = augment(m1, m2, w, path)
    if len(w) < instance.k:
        return make_report(instance, None, "infeasible", "intersection", basis=basis)
    return make_report(instance, w, "feasible", "intersection", basis=basis)


def weighted_matroid_intersection(instance: Instance) -> SolveReport:
    require_separable(instance)
    mats = layer_matroids(instance)
    basis = "separable objective on two laminar layers, weighted matroid intersection"
    if mats is None:
        return make_report(instance, None, "infeasible", "intersection", basis=basis)
    m1, m2 = mats
    m = instance.m
    weights = instance.objective.weights
    # distinct low-order bonuses: the unique optimum is the lexicographically smallest
    scaled = [weights[c] * 2**m + 2 ** (m - 1 - c) for c in range(m)]
    w: frozenset[int] = frozenset()
    while len(w) < instance.k:
        length = [scaled[v] if v in w else -scaled[v] for v in range(m)]
        path = cheapest_path(exchange_graph(m1, m2, w), length)
        if path is None:
            break
        w = augment(m1, m2, w, path, strict=False)
    if len(w) < instance.k:
        return make_report(instance, None, "infeasible", "intersection", basis=basis)
    return make_report(instance, w, "optimal", "intersection", basis=basis)
