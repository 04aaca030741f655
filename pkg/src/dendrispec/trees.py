"""Balanced rooted trees described by a characteristic tuple.

A balanced tree of height l is fixed by a tuple (c_1, ..., c_l) of
positive integers: every vertex at depth j-1 has exactly c_j children.
Level sizes follow as n_0 = 1 and n_j = n_{j-1} * c_j, and the vertex
total is the sum of the level sizes.  A dendrimer with l layers and
branching number k >= 2 is the special case (k, k-1, ..., k-1).

The characteristic polynomial of such a tree splits into factors
Q_1, ..., Q_{l+1} where Q_j enters with multiplicity
n_{l+1-j} - n_{l-j} (with n_{-1} = 0).  The set of factor indices with
positive multiplicity is recorded on the tree as ``active_factors``;
it always contains l+1, and contains j <= l exactly when c_{l+1-j} != 1.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .caps import ADJACENCY_VERTEX_CAP, effective_cap
from .errors import CapacityError, ValidationError


def validate_tuple(entries: Iterable[int]) -> tuple[int, ...]:
    """Check a characteristic tuple: non-empty, integer entries, all >= 1."""
    try:
        tup = tuple(operator.index(c) for c in entries)
    except TypeError:
        raise ValidationError("tuple entries must be integers") from None
    if not tup:
        raise ValidationError("characteristic tuple must be non-empty")
    if any(c < 1 for c in tup):
        raise ValidationError(f"tuple entries must be positive, got {tup}")
    return tup


def _dendrimer_parameters(entries: Sequence[int]) -> tuple[int, int] | None:
    """Return (levels, k) when the tuple has dendrimer shape, else None."""
    k = entries[0]
    if k < 2 or any(c != k - 1 for c in entries[1:]):
        return None
    return len(entries), k


@dataclass(frozen=True)
class BalancedTree:
    """A validated balanced tree together with its derived level data.

    Attributes
    ----------
    entries:        the characteristic tuple (c_1, ..., c_l)
    level_counts:   (n_0, ..., n_l) with n_0 = 1 and n_j = n_{j-1} * c_j
    total_vertices: sum of the level counts
    active_factors: indices j in 1..l+1 whose factor has multiplicity > 0
    dendrimer:      (levels, k) when the tuple is (k, k-1, ..., k-1), else None
    """

    entries: tuple[int, ...]
    level_counts: tuple[int, ...]
    total_vertices: int
    active_factors: frozenset[int]
    dendrimer: tuple[int, int] | None

    @property
    def levels(self) -> int:
        return len(self.entries)

    def factor_multiplicity(self, factor_index: int) -> int:
        """Multiplicity n_{l+1-j} - n_{l-j} of factor j, with n_{-1} = 0."""
        if not 1 <= factor_index <= self.levels + 1:
            raise ValidationError(
                f"factor index must lie in 1..{self.levels + 1}, got {factor_index}"
            )
        counts = (0,) + self.level_counts
        return counts[self.levels + 2 - factor_index] - counts[self.levels + 1 - factor_index]

    def label(self) -> str:
        """Short display name, e.g. ``d(2,3)`` or ``tuple(2,1,2)``."""
        if self.dendrimer is not None:
            return f"d({self.dendrimer[0]},{self.dendrimer[1]})"
        return "tuple(" + ",".join(str(c) for c in self.entries) + ")"


def balanced_tree_from_tuple(entries: Iterable[int]) -> BalancedTree:
    """Build a BalancedTree from its characteristic tuple."""
    tup = validate_tuple(entries)
    levels = len(tup)
    counts = [1]
    for c in tup:
        counts.append(counts[-1] * c)
    active = {levels + 1}
    active.update(j for j in range(1, levels + 1) if tup[levels - j] != 1)
    return BalancedTree(
        entries=tup,
        level_counts=tuple(counts),
        total_vertices=sum(counts),
        active_factors=frozenset(active),
        dendrimer=_dendrimer_parameters(tup),
    )


def dendrimer(levels: int, k: int) -> BalancedTree:
    """The dendrimer with the given layer count and branching number.

    Its characteristic tuple is (k, k-1, ..., k-1) with levels-1 trailing
    entries, so the root has k children and every other internal vertex
    has k-1.  Requires levels >= 1 and k >= 2.
    """
    if not isinstance(levels, int) or not isinstance(k, int):
        raise ValidationError("dendrimer parameters must be integers")
    if levels < 1:
        raise ValidationError(f"dendrimer needs at least one layer, got {levels}")
    if k < 2:
        raise ValidationError(f"dendrimer branching number must be >= 2, got {k}")
    return balanced_tree_from_tuple((k,) + (k - 1,) * (levels - 1))


def block_matrix(alpha: int, beta: int) -> np.ndarray:
    """The 0/1 matrix with a one at (i, j) exactly when floor(i*beta/alpha) == j.

    Requires beta to divide alpha; the result has alpha rows, beta columns,
    one 1 per row, and alpha/beta ones per column.  These blocks link
    consecutive levels of a balanced tree's adjacency matrix.
    """
    alpha = operator.index(alpha)
    beta = operator.index(beta)
    if beta < 1 or alpha < beta:
        raise ValidationError(f"need alpha >= beta >= 1, got ({alpha}, {beta})")
    if alpha % beta != 0:
        raise ValidationError(f"beta must divide alpha, got ({alpha}, {beta})")
    out = np.zeros((alpha, beta), dtype=np.int8)
    rows = np.arange(alpha)
    out[rows, rows * beta // alpha] = 1
    return out


def adjacency_matrix(tree: BalancedTree, max_vertices: int | None = None) -> np.ndarray:
    """Dense adjacency matrix with levels laid out deepest first.

    Vertices are ordered level l, level l-1, ..., level 0 (the root last),
    consecutively within each level, and the block linking level j to
    level j-1 is ``block_matrix(n_j, n_{j-1})``.  Guarded by the adjacency
    vertex cap unless ``max_vertices`` overrides it.
    """
    cap = effective_cap(ADJACENCY_VERTEX_CAP) if max_vertices is None else max_vertices
    if tree.total_vertices > cap:
        raise CapacityError(
            f"tree has {tree.total_vertices} vertices, adjacency cap is {cap}"
        )
    n = tree.total_vertices
    out = np.zeros((n, n), dtype=np.int8)
    offset = 0
    counts = tree.level_counts
    for j in range(tree.levels, 0, -1):
        rows, cols = counts[j], counts[j - 1]
        block = block_matrix(rows, cols)
        out[offset : offset + rows, offset + rows : offset + rows + cols] = block
        out[offset + rows : offset + rows + cols, offset : offset + rows] = block.T
        offset += rows
    return out
