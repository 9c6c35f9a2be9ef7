"""Generalized double Bruhat cells of the rectangular matrix space.

A pair of equal-rank partial permutations ``(w1, w2)`` names the
intersection of the upper cell of ``w1`` with the lower cell of ``w2``.
Nonemptiness has two local criteria (Bruhat comparison of the unique
factorizations, and domain/range set comparison) plus an independent
global one (existence of a stratum index with the prescribed off-diagonal
blocks); all are implemented and cross-checked.  A nonempty cell splits
into finitely many strata, with the factorization quadruple itself naming
the unique open dense one.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from . import cells
from .exact_matrix import RationalMatrix
from .leaves import enumerate_leaves
from .permutations import (Perm, PartialPerm, bruhat_leq, compose,
                           left_compose, longest, right_compose, subset_leq)
from .sigma import SigmaTuple, decompose_partial, phi_to_leaf


@dataclass(frozen=True)
class DoubleCellIndex:
    """Upper-cell label ``w1`` and lower-cell label ``w2`` on the same grid."""

    w1: PartialPerm
    w2: PartialPerm

    def __post_init__(self) -> None:
        if (self.w1.rows, self.w1.cols) != (self.w2.rows, self.w2.cols):
            raise ValueError("dimension mismatch between the two labels")

    @property
    def shape(self) -> tuple[int, int]:
        return self.w1.rows, self.w1.cols


def _tail_perms(n: int, t: int) -> Iterator[Perm]:
    """Permutations fixing ``1..t`` pointwise, lexicographically."""
    head = tuple(range(1, t + 1))
    for tail in itertools.permutations(range(t + 1, n + 1)):
        yield head + tail


def is_nonempty(d: DoubleCellIndex) -> bool:
    """
    Nonemptiness of the double cell.  Computes both local criteria -- the
    Bruhat tests ``z <= y`` and ``v <= u`` on the unique factorizations, and
    the set tests ``dom(w1) <= dom(w2)``, ``rng(w1) >= rng(w2)`` -- asserts
    they agree, and returns the verdict.  Unequal ranks give ``False``.
    """
    if d.w1.rank() != d.w2.rank():
        return False
    y, _v = decompose_partial(d.w1, "yv")
    z, u = decompose_partial(d.w2, "zu")
    v = _v
    by_factorization = bruhat_leq(z, y) and bruhat_leq(v, u)
    by_sets = (subset_leq(d.w1.dom(), d.w2.dom())
               and subset_leq(d.w2.rng(), d.w1.rng()))
    assert by_factorization == by_sets
    return by_factorization


def nonempty_by_completion(d: DoubleCellIndex) -> bool:
    """
    Independent global criterion: some stratum index has lower-left block
    ``w1`` and upper-right block equal to the reflected transpose of ``w2``.
    Enumerates all stratum indices; intended for small shapes.
    """
    m, n = d.shape
    if d.w1.rank() != d.w2.rank():
        return False
    target12 = left_compose(longest(n), right_compose(d.w2.transpose(), longest(m)))
    for leaf in enumerate_leaves(m, n):
        b = leaf.blocks()
        if b.w21 == d.w1 and b.w12 == target12:
            return True
    return False


def decompose(d: DoubleCellIndex) -> list[SigmaTuple]:
    """
    The strata contained in the double cell: all quadruples
    ``(y, v0 tau2, z0 tau1, u)`` with the tails Bruhat-compatible, the base
    quadruple first; order is lexicographic in ``(tau1, tau2)``.
    """
    if not is_nonempty(d):
        raise ValueError("empty double cell has no decomposition")
    m, n = d.shape
    t = d.w1.rank()
    y, v0 = decompose_partial(d.w1, "yv")
    z0, u = decompose_partial(d.w2, "zu")
    out = []
    for tau1 in _tail_perms(m, t):
        z = compose(z0, tau1)
        if not bruhat_leq(z, y):
            continue
        for tau2 in _tail_perms(n, t):
            v = compose(v0, tau2)
            if bruhat_leq(v, u):
                out.append(SigmaTuple(y, v, z, u, t))
    return out


def dense_orbit(d: DoubleCellIndex) -> SigmaTuple:
    """
    The quadruple of the unique stratum open and dense in the cell: the base
    factorization quadruple.  Every other stratum in the decomposition is
    checked to sit strictly below it in the closure order.
    """
    if not is_nonempty(d):
        raise ValueError("empty double cell has no dense stratum")
    t = d.w1.rank()
    y, v0 = decompose_partial(d.w1, "yv")
    z0, u = decompose_partial(d.w2, "zu")
    dense = SigmaTuple(y, v0, z0, u, t)
    top = phi_to_leaf(dense)
    assert all(bruhat_leq(phi_to_leaf(sig).w, top.w) for sig in decompose(d))
    return dense


def classify_double(x: RationalMatrix) -> DoubleCellIndex:
    """The pair of cell labels of ``x``: upper class and lower class."""
    return DoubleCellIndex(cells.classify(x, cells.B_PLUS),
                           cells.classify(x, cells.B_MINUS))
