"""Exact rational dense matrices: rank, corner rank profiles, seeded sampling.

Every membership decision in this package runs on exact rationals; floating
point never enters the logic.  Internally each row is scaled to integers
once (rank is insensitive to row scaling), and all elimination is
fraction-free so intermediate values stay integral.

Samplers are pure functions of an explicit seed.  The generator is CPython's
``random.Random`` (Mersenne Twister), whose integer methods are stable across
platforms, so seeded runs reproduce everywhere.  Random entries are drawn
uniformly from the integers ``-9..9``.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

SOUTHWEST = "southwest"
NORTHEAST = "northeast"

ENTRY_BOUND = 9

Seed = Union[int, random.Random]


def _as_rng(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _rand_entry(rng: random.Random) -> int:
    return rng.randint(-ENTRY_BOUND, ENTRY_BOUND)


def _rand_nonzero(rng: random.Random) -> int:
    v = rng.randint(1, ENTRY_BOUND)
    return v if rng.randint(0, 1) else -v


class RationalMatrix:
    """
    Immutable dense matrix of normalized ``Fraction`` entries.

    ``entry(i, j)`` uses 1-based indices matching the usual submatrix
    notation; ``entries`` is the raw 0-based tuple-of-tuples.
    """

    __slots__ = ("rows", "cols", "entries", "_irows")

    def __init__(self, entries: Iterable[Iterable[object]]) -> None:
        data = tuple(tuple(Fraction(e) for e in row) for row in entries)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and column")
        if any(len(row) != len(data[0]) for row in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "entries", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", len(data[0]))
        object.__setattr__(self, "_irows", tuple(_integerize(row) for row in data))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def zero(cls, m: int, n: int) -> "RationalMatrix":
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> Fraction:
        """Entry in row ``i``, column ``j`` (both 1-based)."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise ValueError(f"index ({i},{j}) outside {self.rows}x{self.cols}")
        return self.entries[i - 1][j - 1]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.entries))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.cols} vs {other.rows}")
        cols = list(zip(*other.entries))
        return RationalMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols]
                               for row in self.entries])

    def scaled(self, row_factors: Sequence[object],
               col_factors: Sequence[object]) -> "RationalMatrix":
        """Scale row ``i`` by ``row_factors[i-1]`` and column ``j`` by ``col_factors[j-1]``."""
        rf = [Fraction(f) for f in row_factors]
        cf = [Fraction(f) for f in col_factors]
        if len(rf) != self.rows or len(cf) != self.cols:
            raise ValueError("factor count mismatch")
        if any(f == 0 for f in rf + cf):
            raise ValueError("zero scale factor")
        return RationalMatrix([[rf[i] * a * cf[j] for j, a in enumerate(row)]
                               for i, row in enumerate(self.entries)])

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"RationalMatrix({[list(map(str, row)) for row in self.entries]})"

    def to_text(self) -> str:
        """Rows of whitespace-separated entries, each ``p/q`` or a plain integer."""
        return "\n".join(" ".join(str(e) for e in row) for row in self.entries)

    def to_json_obj(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.entries]


def _integerize(row: Sequence[Fraction]) -> tuple[int, ...]:
    scale = lcm(*(e.denominator for e in row)) if row else 1
    return tuple(int(e * scale) for e in row)


def from_text(text: str) -> RationalMatrix:
    """Parse the whitespace matrix format (one row per line)."""
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty matrix text")
    return RationalMatrix(rows)


def from_json(payload: Union[str, list]) -> RationalMatrix:
    """Parse a JSON array-of-arrays of strings (or numbers)."""
    obj = json.loads(payload) if isinstance(payload, str) else payload
    if not isinstance(obj, list):
        raise ValueError("expected a JSON array of rows")
    return RationalMatrix(obj)


def load_matrix(text: str) -> RationalMatrix:
    """Sniff between the JSON and whitespace formats."""
    stripped = text.lstrip()
    if stripped.startswith("["):
        return from_json(stripped)
    return from_text(text)


# ---------------------------------------------------------------------------
# Rank and rank profiles


def _bareiss_rank(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; all divisions below are exact."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    prev = 1
    for c in range(n):
        piv = None
        for i in range(r, m):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, m):
            f = rows[i][c]
            ri, rr = rows[i], rows[r]
            for j in range(c + 1, n):
                ri[j] = (p * ri[j] - f * rr[j]) // prev
            ri[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def rank(x: RationalMatrix) -> int:
    """
    Exact rank over the rationals.

    >>> rank(RationalMatrix([[1, 0, 2], [3, 0, 6], [2, 0, 4]]))
    1
    """
    return _bareiss_rank([list(r) for r in x._irows])


def _echelon_insert(basis: list[tuple[int, list[int]]], vec: list[int]) -> bool:
    """
    Reduce ``vec`` against an integer echelon basis (kept sorted by leading
    index) using fraction-free combinations; insert it if independent.
    """
    for lead, bvec in basis:
        c = vec[lead]
        if c:
            p = bvec[lead]
            vec = [p * a - c * b for a, b in zip(vec, bvec)]
    lead = next((i for i, a in enumerate(vec) if a), None)
    if lead is None:
        return False
    g = 0
    for a in vec:
        g = gcd(g, a)
    if vec[lead] < 0:
        g = -g
    vec = [a // g for a in vec]
    pos = 0
    while pos < len(basis) and basis[pos][0] < lead:
        pos += 1
    basis.insert(pos, (lead, vec))
    return True


@dataclass(frozen=True)
class RankProfile:
    """
    Table of ranks of corner-anchored submatrices.

    ``southwest``: ``rank_at(p, q)`` is the rank of rows ``p..rows`` and
    columns ``1..q``, for ``p`` in ``1..rows+1`` and ``q`` in ``0..cols``.
    ``northeast``: ``rank_at(p, q)`` is the rank of rows ``1..p`` and columns
    ``q..cols``, for ``p`` in ``0..rows`` and ``q`` in ``1..cols+1``.
    Either table has ``(rows+1) x (cols+1)`` entries; out-of-corner indices
    denote empty submatrices and give 0.
    """

    kind: str
    rows: int
    cols: int
    table: tuple[tuple[int, ...], ...]

    def rank_at(self, p: int, q: int) -> int:
        if self.kind == SOUTHWEST:
            if not (1 <= p <= self.rows + 1 and 0 <= q <= self.cols):
                raise ValueError(f"({p},{q}) outside the southwest index range")
            return self.table[p - 1][q]
        if not (0 <= p <= self.rows and 1 <= q <= self.cols + 1):
            raise ValueError(f"({p},{q}) outside the northeast index range")
        return self.table[p][q - 1]


def _sw_table(irows: Sequence[Sequence[int]], m: int, n: int) -> tuple[tuple[int, ...], ...]:
    table = []
    for p in range(1, m + 2):
        basis: list[tuple[int, list[int]]] = []
        row = [0]
        sub = irows[p - 1:]
        for q in range(1, n + 1):
            _echelon_insert(basis, [r[q - 1] for r in sub])
            row.append(len(basis))
        table.append(tuple(row))
    return tuple(table)


def _ne_table(irows: Sequence[Sequence[int]], m: int, n: int) -> tuple[tuple[int, ...], ...]:
    table = []
    for p in range(m + 1):
        basis: list[tuple[int, list[int]]] = []
        row = [0] * (n + 1)
        sub = irows[:p]
        for q in range(n, 0, -1):
            _echelon_insert(basis, [r[q - 1] for r in sub])
            row[q - 1] = len(basis)
        table.append(tuple(row))
    return tuple(table)


def rank_profile(x: RationalMatrix, kind: str) -> RankProfile:
    """Full corner rank profile, one elimination sweep per row anchor."""
    if kind == SOUTHWEST:
        return RankProfile(kind, x.rows, x.cols, _sw_table(x._irows, x.rows, x.cols))
    if kind == NORTHEAST:
        return RankProfile(kind, x.rows, x.cols, _ne_table(x._irows, x.rows, x.cols))
    raise ValueError(f"unknown profile kind {kind!r}")


def interval_column_ranks(x: RationalMatrix) -> list[list[int]]:
    """``out[p][q]`` = rank of columns ``p..q`` (full row range), 1-based."""
    m, n = x.rows, x.cols
    out = [[0] * (n + 1) for _ in range(n + 1)]
    for p in range(1, n + 1):
        basis: list[tuple[int, list[int]]] = []
        for q in range(p, n + 1):
            _echelon_insert(basis, [r[q - 1] for r in x._irows])
            out[p][q] = len(basis)
    return out


def interval_row_ranks(x: RationalMatrix) -> list[list[int]]:
    """``out[p][q]`` = rank of rows ``p..q`` (full column range), 1-based."""
    m = x.rows
    out = [[0] * (m + 1) for _ in range(m + 1)]
    for p in range(1, m + 1):
        basis: list[tuple[int, list[int]]] = []
        for q in range(p, m + 1):
            _echelon_insert(basis, list(x._irows[q - 1]))
            out[p][q] = len(basis)
    return out


# ---------------------------------------------------------------------------
# Seeded sampling


def sample_dense(m: int, n: int, seed: Seed) -> RationalMatrix:
    """Uniform integer entries in ``-9..9``."""
    rng = _as_rng(seed)
    return RationalMatrix([[_rand_entry(rng) for _ in range(n)] for _ in range(m)])


def sample_rank(m: int, n: int, t: int, seed: Seed) -> RationalMatrix:
    """
    A matrix of rank exactly ``t``: the product of full-rank ``m x t`` and
    ``t x n`` integer factors (factors are resampled until full rank).
    """
    if not 0 <= t <= min(m, n):
        raise ValueError(f"rank {t} impossible for {m}x{n}")
    rng = _as_rng(seed)
    if t == 0:
        return RationalMatrix.zero(m, n)

    def full_rank_factor(a: int, b: int) -> RationalMatrix:
        while True:
            f = RationalMatrix([[_rand_entry(rng) for _ in range(b)] for _ in range(a)])
            if rank(f) == min(a, b):
                return f

    return full_rank_factor(m, t) @ full_rank_factor(t, n)


def sample_invertible_triangular(sign: str, n: int, seed: Seed) -> RationalMatrix:
    """Invertible upper (``"+"``) or lower (``"-"``) triangular matrix."""
    if sign not in {"+", "-"}:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    rng = _as_rng(seed)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(_rand_nonzero(rng))
            elif (i < j) == (sign == "+"):
                row.append(_rand_entry(rng))
            else:
                row.append(0)
        rows.append(row)
    return RationalMatrix(rows)


def _check_pivots(bound: int, pivots: Sequence[int]) -> tuple[int, ...]:
    pivots = tuple(pivots)
    if any(not 1 <= p <= bound for p in pivots):
        raise ValueError(f"pivots {pivots} out of range 1..{bound}")
    if any(a >= b for a, b in zip(pivots, pivots[1:])):
        raise ValueError(f"pivots {pivots} not strictly increasing")
    return pivots


def sample_echelon_col(m: int, t: int, pivots: Sequence[int], seed: Seed,
                       zero_prob: float = 0.0) -> RationalMatrix:
    """
    Column-echelon sample in ``m x t``: column ``j`` is zero above its pivot
    row ``pivots[j-1]``, nonzero there, free below (``zero_prob`` biases the
    free entries toward 0).
    """
    pivots = _check_pivots(m, pivots)
    if len(pivots) != t or not 1 <= t <= m:
        raise ValueError(f"impossible column pattern: m={m}, t={t}, pivots={pivots}")
    rng = _as_rng(seed)
    rows = [[0] * t for _ in range(m)]
    for j, pr in enumerate(pivots):
        rows[pr - 1][j] = _rand_nonzero(rng)
        for i in range(pr, m):
            free = 0 if rng.random() < zero_prob else _rand_entry(rng)
            rows[i][j] = free
    return RationalMatrix(rows)


def sample_echelon_row(t: int, n: int, pivots: Sequence[int], seed: Seed,
                       zero_prob: float = 0.0) -> RationalMatrix:
    """Row-echelon sample in ``t x n``: row ``i`` starts at its pivot column."""
    pivots = _check_pivots(n, pivots)
    if len(pivots) != t or not 1 <= t <= n:
        raise ValueError(f"impossible row pattern: t={t}, n={n}, pivots={pivots}")
    rng = _as_rng(seed)
    rows = [[0] * n for _ in range(t)]
    for i, pc in enumerate(pivots):
        rows[i][pc - 1] = _rand_nonzero(rng)
        for j in range(pc, n):
            rows[i][j] = 0 if rng.random() < zero_prob else _rand_entry(rng)
    return RationalMatrix(rows)
