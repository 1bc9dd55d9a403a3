"""Label-structure recognition and the rooted tree of a laminar labeling.

A labeling is 1-laminar when every two label extents are disjoint or nested,
and 1-layered when they are pairwise disjoint.  Two-layer laminar structure
is decided with a 2SAT instance whose clauses force crossing labels into
different layers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .model import CapExceededError, LayerPartition, Labeling

ROOT = -1
DEFAULT_LABEL_CAP = 16


class NotLaminarError(ValueError):
    pass


def _extent_pairs(labeling: Labeling, labels: Optional[Iterable[int]]):
    labs = range(labeling.n_labels) if labels is None else sorted(labels)
    return itertools.combinations(labs, 2)


def crossing(labeling: Labeling, x: int, y: int) -> bool:
    """Extents overlap and neither contains the other."""
    cx, cy = labeling.extents[x], labeling.extents[y]
    return bool(cx & cy) and not cx <= cy and not cy <= cx


def overlapping(labeling: Labeling, x: int, y: int) -> bool:
    return bool(labeling.extents[x] & labeling.extents[y])


def is_1_laminar(labeling: Labeling, labels: Optional[Iterable[int]] = None) -> bool:
    return not any(crossing(labeling, x, y) for x, y in _extent_pairs(labeling, labels))


def is_1_layered(labeling: Labeling, labels: Optional[Iterable[int]] = None) -> bool:
    return not any(overlapping(labeling, x, y) for x, y in _extent_pairs(labeling, labels))


@dataclass(frozen=True)
class LaminarTree:
    """Rooted tree over a laminar set of labels; node ``ROOT`` has extent C.

    Labels with equal extents form a chain ordered by label index; labels
    with empty extent hang directly below the root.
    """

    m: int
    parent: dict[int, int]
    children: dict[int, tuple[int, ...]]
    extent: dict[int, frozenset[int]]

    @property
    def labels(self) -> list[int]:
        return sorted(lab for lab in self.extent if lab != ROOT)

    def desc(self, node: int) -> list[int]:
        out, stack = [], [node]
        while stack:
            cur = stack.pop()
            out.append(cur)
            stack.extend(reversed(self.children[cur]))
        return out

    def postorder(self) -> list[int]:
        order, stack = [], [(ROOT, False)]
        while stack:
            node, done = stack.pop()
            if done:
                order.append(node)
                continue
            stack.append((node, True))
            stack.extend((ch, False) for ch in reversed(self.children[node]))
        return order

    def render(self, names: Sequence[str], cand_names: Optional[Sequence[str]] = None) -> str:
        lines = []

        def walk(node, depth):
            label = "r" if node == ROOT else names[node]
            if cand_names is not None:
                members = ",".join(cand_names[c] for c in sorted(self.extent[node]))
                label = f"{label} {{{members}}}"
            lines.append("  " * depth + label)
            for ch in self.children[node]:
                walk(ch, depth + 1)

        walk(ROOT, 0)
        return "\n".join(lines)


def build_laminar_tree(labeling: Labeling, labels: Optional[Iterable[int]] = None) -> LaminarTree:
    labs = list(range(labeling.n_labels)) if labels is None else sorted(labels)
    if not is_1_laminar(labeling, labs):
        raise NotLaminarError("labeling restricted to the given labels is not 1-laminar")
    ext = labeling.extents
    parent: dict[int, int] = {}
    for y in labs:
        cy = ext[y]
        best = ROOT
        if cy:
            # x is above y if it strictly contains y, or has the same extent and a smaller index
            above = [x for x in labs if x != y and cy <= ext[x] and (cy != ext[x] or x < y)]
            if above:
                best = min(above, key=lambda x: (len(ext[x]), -x))
        parent[y] = best
    children: dict[int, list[int]] = {ROOT: []}
    for lab in labs:
        children[lab] = []
    for lab in labs:
        children[parent[lab]].append(lab)
    extent = {lab: ext[lab] for lab in labs}
    extent[ROOT] = labeling.candidates
    return LaminarTree(
        labeling.m,
        parent,
        {node: tuple(ch) for node, ch in children.items()},
        extent,
    )


# --- 2SAT -------------------------------------------------------------------------


@dataclass
class TwoSatFormula:
    """Clauses over literals ``+(v+1)`` (x_v) and ``-(v+1)`` (not x_v)."""

    n_vars: int
    clauses: list[tuple[int, int]]

    def add(self, a: int, b: int) -> None:
        self.clauses.append((a, b))


def _node(lit: int) -> int:
    return 2 * (abs(lit) - 1) + (lit < 0)


def _tarjan(n: int, adj: list[list[int]]) -> list[int]:
    """Component id per node; ids are assigned in reverse topological order."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    n_comp = 0
    for start in range(n):
        if index[start] != -1:
            continue
        work = [(start, 0)]
        index[start] = low[start] = counter
        counter += 1
        stack.append(start)
        on_stack[start] = True
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                u = adj[v][i]
                if index[u] == -1:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append(u)
                    on_stack[u] = True
                    work.append((u, 0))
                elif on_stack[u]:
                    low[v] = min(low[v], index[u])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp[u] = n_comp
                    if u == v:
                        break
                n_comp += 1
    return comp


def solve_2sat(formula: TwoSatFormula) -> Optional[list[bool]]:
    n = 2 * formula.n_vars
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in formula.clauses:
        # (a or b)  ==  (not a -> b) and (not b -> a)
        adj[_node(-a)].append(_node(b))
        adj[_node(-b)].append(_node(a))
    comp = _tarjan(n, adj)
    assignment = []
    for v in range(formula.n_vars):
        pos, neg = comp[2 * v], comp[2 * v + 1]
        if pos == neg:
            return None
        assignment.append(pos < neg)
    return assignment


def is_2_laminar(labeling: Labeling) -> Optional[LayerPartition]:
    """Split the labels into two 1-laminar layers, or return None."""
    n = labeling.n_labels
    formula = TwoSatFormula(n, [])
    for x, y in itertools.combinations(range(n), 2):
        if crossing(labeling, x, y):
            formula.add(x + 1, y + 1)
            formula.add(-(x + 1), -(y + 1))
    assignment = solve_2sat(formula)
    if assignment is None:
        return None
    first = [lab for lab in range(n) if assignment[lab] == assignment[0]] if n else []
    second = [lab for lab in range(n) if lab not in first]
    part = LayerPartition((tuple(first), tuple(second)), ("laminar", "laminar"))
    assert verify_partition(labeling, part), "2SAT assignment produced a non-laminar layer"
    return part


def verify_partition(labeling: Labeling, partition: LayerPartition) -> bool:
    if not partition.is_partition_of(labeling.n_labels):
        return False
    for layer, kind in zip(partition.layers, partition.kinds):
        ok = is_1_laminar(labeling, layer) if kind == "laminar" else is_1_layered(labeling, layer)
        if not ok:
            return False
    return True


def brute_recognize(
    labeling: Labeling, t: int, kind: str = "layered", cap: int = DEFAULT_LABEL_CAP
) -> Optional[LayerPartition]:
    """Exhaustively search for a split of the labels into at most ``t`` layers.

    ``kind="layered"`` requires pairwise-disjoint extents within a layer,
    ``kind="laminar"`` only forbids crossing pairs.  Empty layers are dropped
    from the returned partition.
    """
    n = labeling.n_labels
    if n > cap:
        raise CapExceededError(f"brute-force recognition limited to {cap} labels, got {n}")
    if t < 1:
        raise ValueError("t must be positive")
    conflict = overlapping if kind == "layered" else crossing
    clash = [[False] * n for _ in range(n)]
    for x, y in itertools.combinations(range(n), 2):
        clash[x][y] = clash[y][x] = conflict(labeling, x, y)

    color = [-1] * n

    def place(lab: int, used: int) -> bool:
        if lab == n:
            return True
        # new colors are only opened in order, which removes symmetric duplicates
        for col in range(min(used + 1, t)):
            if any(color[o] == col and clash[lab][o] for o in range(lab)):
                continue
            color[lab] = col
            if place(lab + 1, max(used, col + 1)):
                return True
        color[lab] = -1
        return False

    if not place(0, 0):
        return None
    layers = tuple(
        tuple(lab for lab in range(n) if color[lab] == col)
        for col in range(t)
        if col in color
    )
    return LayerPartition(layers, (kind,) * len(layers))


def brute_recognize_t_layered(
    labeling: Labeling, t: int, cap: int = DEFAULT_LABEL_CAP
) -> Optional[LayerPartition]:
    return brute_recognize(labeling, t, "layered", cap)
