"""Bruhat-cell membership and classification for rectangular matrices.

Each matrix lies in the cell of exactly one partial permutation for either
triangular pair: the (upper, upper) class is cut out by the ranks of
lower-left submatrices, the (lower, lower) class by the ranks of upper-right
submatrices.  Classification reads the partial permutation off the second
differences of the corresponding rank table; membership and closure tests
compare tables entrywise.

Profiles of partial permutations are computed by counting entries in the
corner region, never by numeric rank of the 0/1 matrix.
"""
from __future__ import annotations

from typing import Sequence, Union

from .exact_matrix import NORTHEAST, SOUTHWEST, RankProfile, RationalMatrix, rank_profile
from .permutations import PartialPerm, as_partial

B_PLUS = "B+"
B_MINUS = "B-"

CellLabel = Union[PartialPerm, Sequence[int]]


def _as_pp(w: CellLabel) -> PartialPerm:
    return w if isinstance(w, PartialPerm) else as_partial(w)


def _kind(side: str) -> str:
    if side == B_PLUS:
        return SOUTHWEST
    if side == B_MINUS:
        return NORTHEAST
    raise ValueError(f"side must be 'B+' or 'B-', got {side!r}")


def pp_rank_profile(w: CellLabel, kind: str) -> RankProfile:
    """Corner rank profile of a (partial) permutation matrix, by dot counting."""
    w = _as_pp(w)
    m, n = w.rows, w.cols
    if kind == SOUTHWEST:
        table = []
        for p in range(1, m + 2):
            row = [0]
            for q in range(1, n + 1):
                r = w.image[q - 1]
                row.append(row[-1] + (1 if r is not None and r >= p else 0))
            table.append(tuple(row))
        return RankProfile(SOUTHWEST, m, n, tuple(table))
    if kind == NORTHEAST:
        table = []
        for p in range(m + 1):
            row = [0] * (n + 1)
            for q in range(n, 0, -1):
                r = w.image[q - 1]
                row[q - 1] = row[q] + (1 if r is not None and r <= p else 0)
            table.append(tuple(row))
        return RankProfile(NORTHEAST, m, n, tuple(table))
    raise ValueError(f"unknown profile kind {kind!r}")


def in_cell(x: RationalMatrix, w: CellLabel, side: str = B_PLUS,
            mode: str = "cell") -> bool:
    """
    Membership of ``x`` in the Bruhat cell of ``w`` (``mode="cell"``) or in
    its Zariski closure (``mode="closure"``) for the given triangular side.
    """
    w = _as_pp(w)
    if (x.rows, x.cols) != (w.rows, w.cols):
        raise ValueError(f"dimension mismatch: {x.rows}x{x.cols} vs {w.rows}x{w.cols}")
    kind = _kind(side)
    xt = rank_profile(x, kind).table
    wt = pp_rank_profile(w, kind).table
    if mode == "cell":
        return xt == wt
    if mode == "closure":
        return all(a <= b for xr, wr in zip(xt, wt) for a, b in zip(xr, wr))
    raise ValueError(f"mode must be 'cell' or 'closure', got {mode!r}")


def classify(x: RationalMatrix, side: str = B_PLUS) -> PartialPerm:
    """
    The unique partial permutation whose cell contains ``x``, recovered from
    the second differences of the corner rank table.
    """
    kind = _kind(side)
    prof = rank_profile(x, kind)
    m, n = x.rows, x.cols
    pairs = []
    if kind == SOUTHWEST:
        for p in range(1, m + 1):
            for q in range(1, n + 1):
                d = (prof.rank_at(p, q) - prof.rank_at(p + 1, q)
                     - prof.rank_at(p, q - 1) + prof.rank_at(p + 1, q - 1))
                if d == 1:
                    pairs.append((q, p))
    else:
        for p in range(1, m + 1):
            for q in range(1, n + 1):
                d = (prof.rank_at(p, q) - prof.rank_at(p - 1, q)
                     - prof.rank_at(p, q + 1) + prof.rank_at(p - 1, q + 1))
                if d == 1:
                    pairs.append((q, p))
    return PartialPerm.from_pairs(m, n, pairs)
