"""Weight-graded expansion of a presentation into free-operad components.

The weight-n component of the free regular operad on k binary operations
has a monomial basis indexed by planar binary trees with n leaves whose
internal nodes carry operation labels; there are C(n-1) * k^(n-1) such
monomials (Catalan number times label choices). The defining relations
span the weight-3 component of an ideal; higher components are generated
by one-step composition with single operations on either side. Component
dimensions of the presented operad are basis size minus ideal dimension.

Orderings are fixed so golden tests are byte-stable: trees are ordered by
descending left-subtree leaf count (recursively), labels are read in
pre-order, and the monomial basis runs through trees in tree order and
labels in lexicographic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .linalg import Subspace, span
from .presentations import Presentation

__all__ = [
    "PlanarTree",
    "TreeMonomial",
    "WeightComponent",
    "LEAF",
    "catalan",
    "tree_arity",
    "enumerate_trees",
    "weight_basis",
    "graft",
    "ideal_span",
    "weight_component",
    "component_dim",
    "binary_ops_dimension",
    "format_monomial",
]


@dataclass(frozen=True)
class PlanarTree:
    """Planar binary tree: a leaf, or an ordered pair of subtrees."""

    left: PlanarTree | None = None
    right: PlanarTree | None = None

    def __post_init__(self) -> None:
        if (self.left is None) != (self.right is None):
            raise ValueError("a tree node has either two children or none")

    @property
    def is_leaf(self) -> bool:
        return self.left is None


LEAF = PlanarTree()


def catalan(n: int) -> int:
    """Number of planar binary trees with n+1 leaves."""
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def tree_arity(t: PlanarTree) -> int:
    """Number of leaves."""
    if t.is_leaf:
        return 1
    return tree_arity(t.left) + tree_arity(t.right)


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[PlanarTree, ...]:
    """All planar binary trees with n leaves, larger left subtrees first."""
    if n < 1:
        raise ValueError("a tree has at least one leaf")
    if n == 1:
        return (LEAF,)
    out = []
    for left_leaves in range(n - 1, 0, -1):
        for lt in enumerate_trees(left_leaves):
            for rt in enumerate_trees(n - left_leaves):
                out.append(PlanarTree(lt, rt))
    return tuple(out)


@dataclass(frozen=True)
class TreeMonomial:
    """A tree shape with one operation label per internal node, pre-order."""

    shape: PlanarTree
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != tree_arity(self.shape) - 1:
            raise ValueError("one label per internal node")
        if any(g < 0 for g in self.labels):
            raise ValueError("labels are operation indices")

    @property
    def arity(self) -> int:
        return tree_arity(self.shape)


@lru_cache(maxsize=None)
def weight_basis(num_ops: int, n: int) -> tuple[TreeMonomial, ...]:
    """Ordered monomial basis of the weight-n free component."""
    if num_ops < 1:
        raise ValueError("need at least one operation")
    out = []
    for tree in enumerate_trees(n):
        for labels in itertools.product(range(num_ops), repeat=n - 1):
            out.append(TreeMonomial(tree, labels))
    return tuple(out)


def _graft(
    shape: PlanarTree,
    labels: Sequence[int],
    position: int,
    inner: TreeMonomial,
) -> tuple[PlanarTree, list[int]]:
    if shape.is_leaf:
        return inner.shape, list(inner.labels)
    left_leaves = tree_arity(shape.left)
    left_labels = labels[1 : left_leaves]
    right_labels = labels[left_leaves:]
    if position < left_leaves:
        new_left, new_left_labels = _graft(
            shape.left, left_labels, position, inner
        )
        return (
            PlanarTree(new_left, shape.right),
            [labels[0]] + new_left_labels + list(right_labels),
        )
    new_right, new_right_labels = _graft(
        shape.right, right_labels, position - left_leaves, inner
    )
    return (
        PlanarTree(shape.left, new_right),
        [labels[0]] + list(left_labels) + new_right_labels,
    )


def graft(outer: TreeMonomial, position: int, inner: TreeMonomial) -> TreeMonomial:
    """Substitute ``inner`` at leaf ``position`` (0-based, left to right)."""
    if not 0 <= position < outer.arity:
        raise ValueError(
            f"leaf position {position} out of range for arity {outer.arity}"
        )
    shape, labels = _graft(outer.shape, outer.labels, position, inner)
    return TreeMonomial(shape, tuple(labels))


_LEFT_COMB = PlanarTree(PlanarTree(LEAF, LEAF), LEAF)
_RIGHT_COMB = PlanarTree(LEAF, PlanarTree(LEAF, LEAF))


@lru_cache(maxsize=None)
def _quadratic_monomials(num_ops: int) -> tuple[TreeMonomial, ...]:
    """Weight-3 monomials in relation-vector coordinate order.

    Coordinate i*k+j holds (x op_i y) op_j z: the left comb with pre-order
    labels (outer j, inner i). Coordinate k*k+i*k+j holds x op_i (y op_j z):
    the right comb with labels (i, j).
    """
    out = []
    for i in range(num_ops):
        for j in range(num_ops):
            out.append(TreeMonomial(_LEFT_COMB, (j, i)))
    for i in range(num_ops):
        for j in range(num_ops):
            out.append(TreeMonomial(_RIGHT_COMB, (i, j)))
    return tuple(out)


@lru_cache(maxsize=None)
def ideal_span(p: Presentation, n: int) -> Subspace:
    """Weight-n component of the ideal generated by the relations.

    Weight 3 is the relation space itself, re-coordinatized to the monomial
    basis. Each higher weight is spanned by one-step composites of the
    previous weight: a single operation grafted into any leaf, and the
    previous vectors grafted into either slot of a single operation.
    """
    if n < 3:
        raise ValueError("the relation ideal starts at weight 3")
    k = p.num_ops
    basis = weight_basis(k, n)
    index = {m: i for i, m in enumerate(basis)}
    ambient = len(basis)
    vecs = []
    if n == 3:
        quad = _quadratic_monomials(k)
        for row in p.relations.basis.row_list():
            out = [Fraction(0)] * ambient
            for c, mon in zip(row, quad):
                if c:
                    out[index[mon]] += c
            vecs.append(out)
        return span(vecs, ambient)
    prev = ideal_span(p, n - 1)
    prev_basis = weight_basis(k, n - 1)
    one_node = [TreeMonomial(PlanarTree(LEAF, LEAF), (g,)) for g in range(k)]
    for row in prev.basis.row_list():
        terms = [(c, prev_basis[i]) for i, c in enumerate(row) if c]
        for g in one_node:
            for pos in range(n - 1):
                out = [Fraction(0)] * ambient
                for c, mon in terms:
                    out[index[graft(mon, pos, g)]] += c
                vecs.append(out)
            for slot in (0, 1):
                out = [Fraction(0)] * ambient
                for c, mon in terms:
                    out[index[graft(g, slot, mon)]] += c
                vecs.append(out)
    return span(vecs, ambient)


@dataclass(frozen=True)
class WeightComponent:
    """One weight-graded piece: monomial basis and the ideal inside it."""

    arity: int
    basis: tuple[TreeMonomial, ...]
    ideal: Subspace

    @property
    def dimension(self) -> int:
        return len(self.basis) - self.ideal.dimension

    def surviving_monomials(self) -> tuple[TreeMonomial, ...]:
        """Monomials at non-pivot coordinates: a basis of the quotient."""
        pivots = set(self.ideal.pivot_columns())
        return tuple(m for i, m in enumerate(self.basis) if i not in pivots)


def weight_component(p: Presentation, n: int) -> WeightComponent:
    """The weight-n component of the operad presented by ``p``."""
    if n < 1:
        raise ValueError("weight starts at 1")
    basis = weight_basis(p.num_ops, n)
    if n < 3:
        ideal = Subspace.zero(len(basis))
    else:
        ideal = ideal_span(p, n)
    return WeightComponent(n, basis, ideal)


def component_dim(p: Presentation, n: int) -> int:
    """Dimension of the weight-n component of the presented operad."""
    return weight_component(p, n).dimension


def binary_ops_dimension(p: Presentation) -> int:
    """Dimension of the full space of binary operations.

    Each nonsymmetric generator contributes two binary operations, one per
    order of the two arguments.
    """
    return 2 * p.num_ops


_VARIABLES = ("x", "y", "z", "w", "u", "v", "s", "t")


def format_monomial(m: TreeMonomial, names: Sequence[str]) -> str:
    """Render a monomial with variables x, y, z, ... in leaf order."""
    arity = m.arity
    if arity <= len(_VARIABLES):
        leaves = _VARIABLES[:arity]
    else:
        leaves = tuple(f"x{i + 1}" for i in range(arity))
    state = {"label": 0, "leaf": 0}

    def go(t: PlanarTree, top: bool) -> str:
        if t.is_leaf:
            s = leaves[state["leaf"]]
            state["leaf"] += 1
            return s
        op = names[m.labels[state["label"]]]
        state["label"] += 1
        left = go(t.left, False)
        right = go(t.right, False)
        body = f"{left} {op} {right}"
        return body if top else f"({body})"

    return go(m.shape, True)
