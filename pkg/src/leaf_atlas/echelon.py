"""Column/row echelon patterns and their stratification.

A column-echelon pattern in ``m x t`` fixes the pivot row of each column
(strictly increasing); the set of matrices with that exact pattern is a
finite disjoint union of strata indexed by pairs ``(y, z)`` with ``z`` below
``y`` and ``z`` pinned to the pivots.  Row patterns are the transposed
picture.  Every stratum of the full ``m x n`` space factors, up to closure,
as a product of one column-echelon stratum and one row-echelon stratum; the
factor descriptors come straight from the quadruple index.

Strata carry no direct parametrization, so sampling works by rejection from
the ambient pattern (plus targeted zeroing) with a small-entry representative
search as fallback; strata the search cannot reach are reported as skipped,
never silently dropped.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .exact_matrix import (RationalMatrix, Seed, _as_rng, _rand_nonzero,
                           sample_echelon_col)
from .leaves import LeafIndex, classify_leaf
from .permutations import (Perm, bruhat_leq, check_perm, identity,
                           min_reps_last)
from .sigma import SigmaTuple, phi_inv, phi_to_leaf

COLUMN = "column"
ROW = "row"


@dataclass(frozen=True)
class EchelonPattern:
    """
    Pivot signature of rank-``t`` echelon matrices.  ``column``: shape is
    ``rows x t`` and ``pivots`` lists the pivot row of each column.  ``row``:
    shape is ``t x cols`` and ``pivots`` lists the pivot column of each row.
    """

    kind: str
    rows: int
    cols: int
    pivots: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in {COLUMN, ROW}:
            raise ValueError(f"kind must be 'column' or 'row', got {self.kind!r}")
        t = self.cols if self.kind == COLUMN else self.rows
        long_dim = self.rows if self.kind == COLUMN else self.cols
        if not 1 <= t <= long_dim:
            raise ValueError(f"impossible pattern shape {self.rows}x{self.cols}")
        if len(self.pivots) != t:
            raise ValueError(f"need {t} pivots, got {len(self.pivots)}")
        if any(not 1 <= p <= long_dim for p in self.pivots):
            raise ValueError(f"pivots {self.pivots} out of range 1..{long_dim}")
        if any(a >= b for a, b in zip(self.pivots, self.pivots[1:])):
            raise ValueError(f"pivots {self.pivots} not strictly increasing")

    @property
    def t(self) -> int:
        return self.cols if self.kind == COLUMN else self.rows

    def literal(self) -> str:
        body = ",".join(map(str, self.pivots))
        return f"{'col' if self.kind == COLUMN else 'row'}:{self.rows},{self.cols}:{body}"

    def transposed(self) -> "EchelonPattern":
        kind = ROW if self.kind == COLUMN else COLUMN
        return EchelonPattern(kind, self.cols, self.rows, self.pivots)


def column_pattern(m: int, pivots: Sequence[int]) -> EchelonPattern:
    return EchelonPattern(COLUMN, m, len(tuple(pivots)), tuple(pivots))


def row_pattern(n: int, pivots: Sequence[int]) -> EchelonPattern:
    return EchelonPattern(ROW, len(tuple(pivots)), n, tuple(pivots))


def parse_pattern(text: str) -> EchelonPattern:
    """Parse the CLI literal ``"col:m,t:1,3,4"`` / ``"row:t,n:2,4,5"``."""
    try:
        kind_s, dims_s, pivots_s = text.strip().split(":")
        a, b = (int(x) for x in dims_s.split(","))
        pivots = tuple(int(x) for x in pivots_s.split(",")) if pivots_s else ()
    except Exception as exc:
        raise ValueError(f"bad pattern literal {text!r}") from exc
    if kind_s == "col":
        return EchelonPattern(COLUMN, a, b, pivots)
    if kind_s == "row":
        return EchelonPattern(ROW, a, b, pivots)
    raise ValueError(f"bad pattern kind in {text!r}")


def all_patterns(kind: str, long_dim: int, t: int) -> list[EchelonPattern]:
    """All pivot signatures of the given kind, shape and rank."""
    out = []
    for pivots in itertools.combinations(range(1, long_dim + 1), t):
        if kind == COLUMN:
            out.append(EchelonPattern(COLUMN, long_dim, t, pivots))
        else:
            out.append(EchelonPattern(ROW, t, long_dim, pivots))
    return out


def in_pattern(a: RationalMatrix, pat: EchelonPattern) -> bool:
    """Exact sign-pattern membership: nonzero pivots, zeros strictly before them."""
    if (a.rows, a.cols) != (pat.rows, pat.cols):
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} vs {pat.rows}x{pat.cols}")
    if pat.kind == COLUMN:
        for j, pr in enumerate(pat.pivots, start=1):
            if a.entry(pr, j) == 0:
                return False
            if any(a.entry(i, j) != 0 for i in range(1, pr)):
                return False
        return True
    for i, pc in enumerate(pat.pivots, start=1):
        if a.entry(i, pc) == 0:
            return False
        if any(a.entry(i, j) != 0 for j in range(1, pc)):
            return False
    return True


def stratify_pattern(pat: EchelonPattern) -> list[tuple[Perm, Perm]]:
    """
    Stratum index pairs of a pattern: ``(y, z)`` pairs for a column pattern
    (``z`` pinned to the pivot rows), ``(u, v)`` pairs for a row pattern
    (``v`` pinned to the pivot columns).
    """
    long_dim = pat.rows if pat.kind == COLUMN else pat.cols
    t = pat.t
    pinned = []
    for tail in itertools.permutations(sorted(set(range(1, long_dim + 1))
                                              - set(pat.pivots))):
        pinned.append(pat.pivots + tail)
    out = []
    for big in min_reps_last(long_dim, long_dim - t):
        for small in pinned:
            if bruhat_leq(small, big):
                out.append((big, small))
    out.sort()
    return out


def column_stratum_sigma(m: int, t: int, y: Perm, z: Perm) -> SigmaTuple:
    """The quadruple ``(y, 1, z, 1)`` naming a column stratum inside ``m x t``."""
    return SigmaTuple(check_perm(y), identity(t), check_perm(z), identity(t), t)


def row_stratum_sigma(t: int, n: int, u: Perm, v: Perm) -> SigmaTuple:
    """The quadruple ``(1, v, 1, u)`` naming a row stratum inside ``t x n``."""
    return SigmaTuple(identity(t), check_perm(v), identity(t), check_perm(u), t)


def leaf_factors(L: LeafIndex) -> tuple[tuple[Perm, Perm], tuple[Perm, Perm]]:
    """
    Echelon factor descriptors of a stratum: the column-side pair ``(y, z)``
    (a stratum in ``m x t``) and the row-side pair ``(u, v)`` (a stratum in
    ``t x n``); products of members of the two factors fill the stratum up
    to closure.
    """
    sig = phi_inv(L)
    return (sig.y, sig.z), (sig.u, sig.v)


# ---------------------------------------------------------------------------
# Sampling inside strata

_REP_CACHE: dict[tuple[int, int, tuple[int, ...]], dict[tuple[Perm, Perm], RationalMatrix]] = {}

_REP_PALETTE = (0, 1, 2)


def _stratum_map(m: int, t: int, pivots: tuple[int, ...]) -> dict[tuple[Perm, Perm], RationalMatrix]:
    """
    One small-entry representative per reachable stratum of a column pattern,
    found by scanning pattern matrices with unit pivots and free entries from
    a small palette.  Cached per pattern.
    """
    key = (m, t, pivots)
    if key in _REP_CACHE:
        return _REP_CACHE[key]
    free_cells = [(i, j) for j, pr in enumerate(pivots, start=1)
                  for i in range(pr + 1, m + 1)]
    found: dict[tuple[Perm, Perm], RationalMatrix] = {}
    for values in itertools.product(_REP_PALETTE, repeat=len(free_cells)):
        rows = [[0] * t for _ in range(m)]
        for j, pr in enumerate(pivots, start=1):
            rows[pr - 1][j - 1] = 1
        for (i, j), val in zip(free_cells, values):
            rows[i - 1][j - 1] = val
        a = RationalMatrix(rows)
        sig = phi_inv(classify_leaf(a))
        found.setdefault((sig.y, sig.z), a)
    _REP_CACHE[key] = found
    return found


def column_stratum_representative(m: int, t: int, y: Perm, z: Perm) -> Optional[RationalMatrix]:
    """A fixed small-entry member of the column stratum, or ``None`` if unreached."""
    return _stratum_map(m, t, tuple(z[:t])).get((check_perm(y), check_perm(z)))


def sample_column_stratum(m: int, t: int, y: Perm, z: Perm, seed: Seed,
                          tries: int = 30) -> Optional[RationalMatrix]:
    """
    A random member of the column stratum ``(y, z)`` inside ``m x t``:
    rejection from the ambient pattern with random zeroing first, then a
    random torus scaling of the cached representative.  ``None`` means the
    stratum was not reached and the caller should report a skip.
    """
    rng = _as_rng(seed)
    target = phi_to_leaf(column_stratum_sigma(m, t, y, z))
    pivots = tuple(z[:t])
    for _ in range(tries):
        a = sample_echelon_col(m, t, pivots, rng, zero_prob=0.4)
        if classify_leaf(a) == target:
            return a
    rep = column_stratum_representative(m, t, y, z)
    if rep is None:
        return None
    row_f = [_rand_nonzero(rng) for _ in range(m)]
    col_f = [_rand_nonzero(rng) for _ in range(t)]
    return rep.scaled(row_f, col_f)


def sample_row_stratum(t: int, n: int, u: Perm, v: Perm, seed: Seed,
                       tries: int = 30) -> Optional[RationalMatrix]:
    """Row-side analogue of ``sample_column_stratum``, via transposition."""
    a = sample_column_stratum(n, t, u, v, seed, tries)
    return None if a is None else a.transpose()
