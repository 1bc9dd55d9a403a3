"""Precondition checks and the normalized tree shared by the tree algorithms."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..labels import ROOT, LaminarTree, build_laminar_tree, is_1_laminar
from ..model import InapplicableError, Instance, Independent, Interval
from ..objectives import is_separable


def require_interval(instance: Instance) -> Interval:
    if not isinstance(instance.spec, Interval):
        raise InapplicableError("requires interval constraints")
    return instance.spec


def require_independent(instance: Instance) -> Independent:
    if not isinstance(instance.spec, Independent):
        raise InapplicableError("requires independent constraints")
    return instance.spec


def require_separable(instance: Instance) -> None:
    if not is_separable(instance.objective):
        raise InapplicableError("requires a separable objective")


def require_laminar_tree(instance: Instance) -> LaminarTree:
    if not is_1_laminar(instance.labeling):
        raise InapplicableError("requires a 1-laminar labeling")
    return build_laminar_tree(instance.labeling)


@dataclass
class TreeNode:
    """Node of a laminar tree after residual leaves have been added.

    ``label`` is a label index, ``ROOT``, or ``None`` for a residual leaf
    holding the candidates of its parent that no child label covers.
    Leaves list their candidates in ``members``.
    """

    label: Optional[int]
    size: int
    members: tuple[int, ...] = ()
    children: list[int] = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return not self.children


def normalize(tree: LaminarTree) -> list[TreeNode]:
    """Nodes in postorder (root last); every candidate sits in exactly one leaf."""
    nodes: list[TreeNode] = []

    def visit(lab: int) -> int:
        kids = tree.children[lab]
        ext = tree.extent[lab]
        if not kids:
            nodes.append(TreeNode(lab, len(ext), tuple(sorted(ext))))
            return len(nodes) - 1
        child_ids = [visit(ch) for ch in kids]
        covered = set().union(*(tree.extent[ch] for ch in kids))
        residual = tuple(sorted(ext - covered))
        if residual:
            nodes.append(TreeNode(None, len(residual), residual))
            child_ids.append(len(nodes) - 1)
        nodes.append(TreeNode(lab, len(ext), (), child_ids))
        return len(nodes) - 1

    visit(ROOT)
    return nodes
