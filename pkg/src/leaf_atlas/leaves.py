"""Torus-orbit strata of the space of m x n matrices.

Each stratum (a torus orbit of symplectic leaves for the standard Poisson
structure) is indexed by a permutation ``w`` of ``{1..m+n}`` subject to the
displacement window ``n <= w(i)+i-1 <= m+2n``; equivalently ``w`` lies above
the product of the two block longest elements in the Bruhat order.  This
module enumerates the indices, decides membership of a matrix in a stratum
or its closure through four families of exact rank conditions, classifies a
matrix by embedding it in an invertible ``(m+n) x (m+n)`` block matrix, and
exposes the closure order and its Hasse diagram.

Membership (`in_leaf`) and classification (`classify_leaf`) are deliberately
independent code paths; the point of the package is to cross-validate their
agreement, so neither delegates to the other.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from . import cells
from .exact_matrix import (NORTHEAST, SOUTHWEST, RationalMatrix,
                           interval_column_ranks, interval_row_ranks, rank_profile)
from .permutations import (Perm, Blocks, block_longest, block_split,
                           bruhat_leq, check_perm, dots_in, left_compose,
                           length, longest, right_compose)


def window_ok(w: Sequence[int], m: int, n: int) -> bool:
    """Displacement window ``n <= w(i)+i-1 <= m+2n`` for every position ``i``."""
    return all(n <= x + i <= m + 2 * n for i, x in enumerate(w))


def rank_of_index(w: Sequence[int], n: int) -> int:
    """Number of columns ``j <= n`` sent past ``n``; the matrix rank on the stratum."""
    return sum(1 for x in w[:n] if x > n)


@dataclass(frozen=True)
class LeafIndex:
    """
    Index of one stratum: a permutation ``w`` of ``{1..m+n}`` inside the
    displacement window, with its cached rank ``t`` and dimension.
    """

    w: Perm
    m: int
    n: int
    t: int
    dim: int

    def __post_init__(self) -> None:
        w = check_perm(self.w)
        if len(w) != self.m + self.n:
            raise ValueError(f"permutation size {len(w)} != {self.m}+{self.n}")
        if not window_ok(w, self.m, self.n):
            raise ValueError(f"{w} violates the displacement window for m={self.m}, n={self.n}")
        if self.t != rank_of_index(w, self.n):
            raise ValueError(f"cached rank {self.t} wrong for {w}")
        if self.dim != _leaf_dim(w, self.m, self.n):
            raise ValueError(f"cached dimension {self.dim} wrong for {w}")

    @classmethod
    def from_w(cls, w: Sequence[int], m: int, n: int) -> "LeafIndex":
        w = check_perm(w)
        return cls(w, m, n, rank_of_index(w, n), _leaf_dim(w, m, n))

    def blocks(self) -> Blocks:
        return _split_blocks(self.w, self.n, self.m)

    def to_dict(self) -> dict:
        return {"w": list(self.w), "m": self.m, "n": self.n,
                "t": self.t, "dim": self.dim}

    @classmethod
    def from_dict(cls, d: dict) -> "LeafIndex":
        leaf = cls.from_w(tuple(d["w"]), d["m"], d["n"])
        for key in ("t", "dim"):
            if key in d and d[key] != getattr(leaf, key):
                raise ValueError(f"inconsistent {key} in {d}")
        return leaf


def _leaf_dim(w: Perm, m: int, n: int) -> int:
    return length(w) - (n * (n - 1) + m * (m - 1)) // 2


_split_blocks = lru_cache(maxsize=None)(block_split)


def enumerate_leaves(m: int, n: int, t: Optional[int] = None) -> list[LeafIndex]:
    """
    All stratum indices for ``m x n`` matrices in lexicographic order of the
    one-line notation, optionally restricted to matrix rank ``t``.

    >>> [L.w for L in enumerate_leaves(1, 1)]
    [(1, 2), (2, 1)]
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    N = m + n
    base = block_longest(n, m)
    out = []
    for w in itertools.permutations(range(1, N + 1)):
        ok = window_ok(w, m, n)
        if __debug__ and N <= 7:
            assert ok == bruhat_leq(base, w)
        if not ok:
            continue
        if t is not None and rank_of_index(w, n) != t:
            continue
        out.append(LeafIndex.from_w(w, m, n))
    return out


# ---------------------------------------------------------------------------
# Membership: four families of rank conditions


@dataclass(frozen=True)
class LeafTables:
    """Reusable per-matrix data for membership tests against many indices."""

    m: int
    n: int
    sw: tuple[tuple[int, ...], ...]
    ne: tuple[tuple[int, ...], ...]
    col: tuple[tuple[int, ...], ...]  # col[p][q] = rank of columns p..q
    row: tuple[tuple[int, ...], ...]  # row[p][q] = rank of rows p..q


def leaf_profile(x: RationalMatrix) -> LeafTables:
    return LeafTables(
        x.rows, x.cols,
        rank_profile(x, SOUTHWEST).table,
        rank_profile(x, NORTHEAST).table,
        tuple(tuple(r) for r in interval_column_ranks(x)),
        tuple(tuple(r) for r in interval_row_ranks(x)),
    )


@dataclass(frozen=True)
class _LeafTargets:
    sw: tuple[tuple[int, ...], ...]
    ne: tuple[tuple[int, ...], ...]
    col: tuple[tuple[int, int, int], ...]  # (p, q, expected rank of columns p..q)
    row: tuple[tuple[int, int, int], ...]  # (p, q, expected rank of rows p..q)


@lru_cache(maxsize=None)
def _leaf_targets(L: LeafIndex) -> _LeafTargets:
    m, n = L.m, L.n
    b = L.blocks()
    sw = cells.pp_rank_profile(b.w21, SOUTHWEST).table
    ne_label = left_compose(longest(m), right_compose(b.w12.transpose(), longest(n)))
    ne = cells.pp_rank_profile(ne_label, NORTHEAST).table
    top_left = left_compose(longest(n), b.w11)       # n x n
    col = tuple((p, q, q + 1 - p - dots_in(top_left, p, n, p, q))
                for p in range(2, n + 1) for q in range(p, n + 1))
    bottom_right = right_compose(b.w22, longest(m))  # m x m
    row = tuple((p, q, q + 1 - p - dots_in(bottom_right, p, q, 1, q))
                for p in range(1, m) for q in range(p, m))
    return _LeafTargets(sw, ne, col, row)


def in_leaf(x: RationalMatrix, L: LeafIndex, mode: str = "cell",
            tables: Optional[LeafTables] = None) -> bool:
    """
    Membership of ``x`` in the stratum of ``L`` (``mode="cell"``) or in its
    Zariski closure (``mode="closure"``), decided by the rank conditions
    alone.  Pass precomputed ``tables`` when testing one matrix against many
    indices.
    """
    if mode not in {"cell", "closure"}:
        raise ValueError(f"mode must be 'cell' or 'closure', got {mode!r}")
    if (x.rows, x.cols) != (L.m, L.n):
        raise ValueError(f"dimension mismatch: {x.rows}x{x.cols} vs {L.m}x{L.n}")
    T = tables if tables is not None else leaf_profile(x)
    tg = _leaf_targets(L)
    if mode == "cell":
        if T.sw != tg.sw or T.ne != tg.ne:
            return False
        return (all(T.col[p][q] == r for p, q, r in tg.col)
                and all(T.row[p][q] == r for p, q, r in tg.row))
    if not all(a <= b for xr, wr in zip(T.sw, tg.sw) for a, b in zip(xr, wr)):
        return False
    if not all(a <= b for xr, wr in zip(T.ne, tg.ne) for a, b in zip(xr, wr)):
        return False
    return (all(T.col[p][q] <= r for p, q, r in tg.col)
            and all(T.row[p][q] <= r for p, q, r in tg.row))


def classify_leaf(x: RationalMatrix) -> LeafIndex:
    """
    The unique stratum containing ``x``: embed ``x`` as the lower-left block
    of an invertible ``(m+n) x (m+n)`` matrix (anti-identities on the other
    two blocks) and classify that matrix's upper Bruhat cell.
    """
    m, n = x.rows, x.cols
    N = m + n
    rows = []
    for i in range(1, n + 1):
        row = [0] * N
        row[n - i] = 1
        rows.append(row)
    for i in range(1, m + 1):
        row = list(x.entries[i - 1]) + [0] * m
        row[n + m - i] = 1
        rows.append(row)
    w = cells.classify(RationalMatrix(rows), cells.B_PLUS).to_perm()
    return LeafIndex.from_w(w, m, n)


def closure_leq(a: LeafIndex, b: LeafIndex) -> bool:
    """Closure containment order on strata: the Bruhat order of the indices."""
    if (a.m, a.n) != (b.m, b.n):
        raise ValueError("indices for different matrix spaces")
    return bruhat_leq(a.w, b.w)


def hasse(m: int, n: int) -> list[tuple[LeafIndex, LeafIndex]]:
    """
    Covering relations of the closure order.  The index family is upward
    closed in a length-graded order, so covers are exactly the comparable
    pairs whose dimensions differ by one.
    """
    by_dim: dict[int, list[LeafIndex]] = {}
    for leaf in enumerate_leaves(m, n):
        by_dim.setdefault(leaf.dim, []).append(leaf)
    edges = []
    for d in sorted(by_dim):
        for a in by_dim[d]:
            for b in by_dim.get(d + 1, ()):
                if bruhat_leq(a.w, b.w):
                    edges.append((a, b))
    return edges


def hasse_dot(m: int, n: int) -> str:
    """Hasse diagram in DOT format, low strata at the bottom."""
    lines = ["digraph leaves {", "  rankdir=BT;"]
    for leaf in enumerate_leaves(m, n):
        label = ",".join(map(str, leaf.w))
        lines.append(f'  "{label}" [dim={leaf.dim}, rank={leaf.t}];')
    for a, b in hasse(m, n):
        la, lb = ",".join(map(str, a.w)), ",".join(map(str, b.w))
        lines.append(f'  "{la}" -> "{lb}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
