"""Permutations and partial permutations in one-line notation.

Conventions used across the package (all indices and values are 1-based):

- A permutation of ``{1..n}`` is a tuple ``w`` of length ``n`` listing its
  images, so ``w[i-1]`` is ``w(i)``.
- ``compose(a, b)`` is the map ``i -> a(b(i))``.
- The 0/1 matrix attached to ``w`` carries the 1 of column ``j`` in row
  ``w(j)``; with this convention matrix products agree with ``compose``.
- A partial permutation on an ``m x n`` grid injects part of the column set
  ``{1..n}`` into the row set ``{1..m}``.  Storage is column-indexed; the
  row-indexed view is obtained with ``transpose()``.
"""
from __future__ import annotations

import itertools
from bisect import insort
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, Iterator, Optional, Sequence

Perm = tuple[int, ...]


def is_perm(w: Sequence[int]) -> bool:
    """
    Check that ``w`` lists each of ``1..len(w)`` exactly once.

    >>> is_perm((2, 1, 3)), is_perm((1, 1, 2)), is_perm(())
    (True, False, True)
    """
    n = len(w)
    seen = [False] * (n + 1)
    for x in w:
        if not isinstance(x, int) or not 1 <= x <= n or seen[x]:
            return False
        seen[x] = True
    return True


def check_perm(w: Sequence[int]) -> Perm:
    """Return ``w`` as a tuple, raising ``ValueError`` if it is not a permutation."""
    t = tuple(w)
    if not is_perm(t):
        raise ValueError(f"not a permutation of 1..{len(t)}: {t}")
    return t


def identity(n: int) -> Perm:
    """The identity permutation of ``{1..n}``."""
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    """
    The order-reversing permutation, the longest element of S_n.

    >>> longest(4)
    (4, 3, 2, 1)
    """
    return tuple(range(n, 0, -1))


def compose(a: Sequence[int], b: Sequence[int]) -> Perm:
    """
    Right-to-left composition: ``compose(a, b)(i) = a(b(i))``.

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)}")
    return tuple(a[j - 1] for j in b)


def inverse(w: Sequence[int]) -> Perm:
    """
    The inverse permutation.

    >>> inverse((3, 1, 2))
    (2, 3, 1)
    """
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x - 1] = i + 1
    return tuple(inv)


def length(w: Sequence[int]) -> int:
    """
    Coxeter length of ``w``: the number of inversions.

    >>> length((1, 2, 3, 4)), length(longest(4)), length((6, 2, 3, 5, 4, 1))
    (0, 6, 10)
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def all_perms(n: int) -> Iterator[Perm]:
    """All permutations of ``{1..n}`` in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def subset_leq(left: Iterable[int], right: Iterable[int]) -> bool:
    """
    Compare two equal-size integer sets entrywise after ascending sort.

    >>> subset_leq({1, 3}, {2, 3}), subset_leq({3}, {2})
    (True, False)
    """
    a, b = sorted(left), sorted(right)
    if len(a) != len(b):
        raise ValueError(f"unequal sizes: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def bruhat_leq(y: Sequence[int], z: Sequence[int]) -> bool:
    """
    Bruhat order on S_n: ``y <= z`` iff for every p the sorted prefix
    ``{y(1)..y(p)}`` is entrywise <= the sorted prefix ``{z(1)..z(p)}``.

    >>> bruhat_leq((2, 1, 3), (2, 3, 1))
    True
    >>> bruhat_leq((3, 1, 2), (2, 3, 1)), bruhat_leq((2, 3, 1), (3, 1, 2))
    (False, False)
    """
    n = len(y)
    if n != len(z):
        raise ValueError(f"size mismatch: {n} vs {len(z)}")
    ys: list[int] = []
    zs: list[int] = []
    for p in range(n - 1):  # the full prefix is always equal
        insort(ys, y[p])
        insort(zs, z[p])
        for a, b in zip(ys, zs):
            if a > b:
                return False
    return True


def block_longest(n: int, m: int) -> Perm:
    """
    The product of the longest elements of the two blocks ``{1..n}`` and
    ``{n+1..n+m}`` inside S_{n+m}.

    >>> block_longest(2, 2)
    (2, 1, 4, 3)
    """
    return longest(n) + tuple(2 * n + m + 1 - i for i in range(n + 1, n + m + 1))


def w_mn(n: int, m: int) -> Perm:
    """
    The longest element of S_{n+m} times ``block_longest(n, m)``; its matrix
    is the block anti-identity ``[[0, I_m], [I_n, 0]]``.

    >>> w_mn(2, 2)
    (3, 4, 1, 2)
    """
    return compose(longest(n + m), block_longest(n, m))


def is_min_rep_first(w: Sequence[int], t: int) -> bool:
    """
    True iff ``w`` is the minimal-length representative of its coset modulo
    the subgroup permuting positions ``1..t``, i.e. ``w(1) < ... < w(t)``.

    >>> is_min_rep_first((1, 3, 2), 2), is_min_rep_first((3, 1, 2), 2)
    (True, False)
    """
    if not 0 <= t <= len(w):
        raise ValueError(f"t out of range: {t}")
    return all(w[i] < w[i + 1] for i in range(t - 1))


def is_min_rep_last(w: Sequence[int], k: int) -> bool:
    """
    True iff ``w`` is minimal modulo the subgroup permuting the last ``k``
    positions, i.e. ``w(n-k+1) < ... < w(n)``.
    """
    n = len(w)
    if not 0 <= k <= n:
        raise ValueError(f"k out of range: {k}")
    return all(w[i] < w[i + 1] for i in range(n - k, n - 1))


def min_rep_first(w: Sequence[int], t: int) -> Perm:
    """
    Minimal representative of the coset of ``w`` modulo the subgroup
    permuting positions ``1..t``: sort the first ``t`` images ascending.

    >>> min_rep_first((2, 1, 3), 2)
    (1, 2, 3)
    """
    if not 0 <= t <= len(w):
        raise ValueError(f"t out of range: {t}")
    return tuple(sorted(w[:t])) + tuple(w[t:])


def min_rep_last(w: Sequence[int], k: int) -> Perm:
    """Minimal coset representative: sort the last ``k`` images ascending."""
    n = len(w)
    if not 0 <= k <= n:
        raise ValueError(f"k out of range: {k}")
    return tuple(w[: n - k]) + tuple(sorted(w[n - k:]))


def extend_ascending(n: int, head: Sequence[int]) -> Perm:
    """
    The unique permutation of ``{1..n}`` starting with ``head`` whose
    remaining images are ascending.

    >>> extend_ascending(4, (3, 1))
    (3, 1, 2, 4)
    """
    head = tuple(head)
    rest = sorted(set(range(1, n + 1)) - set(head))
    if len(head) + len(rest) != n:
        raise ValueError(f"head {head} is not injective into 1..{n}")
    return head + tuple(rest)


def min_reps_first(n: int, t: int) -> Iterator[Perm]:
    """All ``w`` in S_n with ``w(1) < ... < w(t)``, lexicographically."""
    universe = range(1, n + 1)
    for head in itertools.combinations(universe, t):
        rest = [x for x in universe if x not in head]
        for tail in itertools.permutations(rest):
            yield head + tail


def min_reps_last(n: int, k: int) -> Iterator[Perm]:
    """All ``w`` in S_n with the last ``k`` images ascending, lexicographically."""
    universe = range(1, n + 1)
    for head in itertools.permutations(universe, n - k):
        chosen = set(head)
        yield head + tuple(x for x in universe if x not in chosen)


# ---------------------------------------------------------------------------
# Partial permutations


@dataclass(frozen=True)
class PartialPerm:
    """
    A partial permutation on an ``m x n`` grid: an injective map from a
    subset of the columns ``{1..n}`` to the rows ``{1..m}``.  ``image[j-1]``
    is the row hit by column ``j``, or ``None``.
    """

    rows: int
    cols: int
    image: tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.image) != self.cols:
            raise ValueError(f"image length {len(self.image)} != cols {self.cols}")
        hit = set()
        for r in self.image:
            if r is None:
                continue
            if not 1 <= r <= self.rows:
                raise ValueError(f"row {r} out of range 1..{self.rows}")
            if r in hit:
                raise ValueError(f"row {r} hit twice")
            hit.add(r)

    @classmethod
    def from_pairs(cls, rows: int, cols: int,
                   pairs: Iterable[tuple[int, int]]) -> "PartialPerm":
        """Build from ``(column, row)`` pairs."""
        image: list[Optional[int]] = [None] * cols
        for c, r in pairs:
            if not 1 <= c <= cols:
                raise ValueError(f"column {c} out of range 1..{cols}")
            if image[c - 1] is not None:
                raise ValueError(f"column {c} defined twice")
            image[c - 1] = r
        return cls(rows, cols, tuple(image))

    @classmethod
    def empty(cls, rows: int, cols: int) -> "PartialPerm":
        return cls(rows, cols, (None,) * cols)

    def __call__(self, j: int) -> Optional[int]:
        """Row hit by column ``j`` (1-based), or ``None``."""
        if not 1 <= j <= self.cols:
            raise ValueError(f"column {j} out of range 1..{self.cols}")
        return self.image[j - 1]

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Defined ``(column, row)`` pairs in column order."""
        return tuple((j + 1, r) for j, r in enumerate(self.image) if r is not None)

    def dom(self) -> tuple[int, ...]:
        """Defined columns, ascending."""
        return tuple(j + 1 for j, r in enumerate(self.image) if r is not None)

    def rng(self) -> tuple[int, ...]:
        """Hit rows, ascending."""
        return tuple(sorted(r for r in self.image if r is not None))

    def rank(self) -> int:
        return sum(1 for r in self.image if r is not None)

    def transpose(self) -> "PartialPerm":
        """The inverse bijection, mapping hit rows back to columns."""
        return PartialPerm.from_pairs(self.cols, self.rows,
                                      ((r, j) for j, r in self.pairs()))

    def is_total(self) -> bool:
        return self.rows == self.cols == self.rank()

    def to_perm(self) -> Perm:
        """One-line notation; requires a total square partial permutation."""
        if not self.is_total():
            raise ValueError("not a total permutation")
        return check_perm([r for r in self.image])  # type: ignore[misc]

    def literal(self) -> str:
        """
        Text form ``"<rows>x<cols>:c1->r1,c2->r2"`` with columns ascending.

        >>> PartialPerm.from_pairs(3, 3, [(1, 3)]).literal()
        '3x3:1->3'
        """
        body = ",".join(f"{c}->{r}" for c, r in self.pairs())
        return f"{self.rows}x{self.cols}:{body}"


def parse_partial(text: str) -> PartialPerm:
    """Parse the ``"3x3:1->3,2->2"`` literal form (empty entry list allowed)."""
    head, sep, body = text.strip().partition(":")
    try:
        rows_s, cols_s = head.split("x")
        rows, cols = int(rows_s), int(cols_s)
    except Exception as exc:
        raise ValueError(f"bad partial permutation literal {text!r}") from exc
    pairs = []
    if body.strip():
        for item in body.split(","):
            c_s, arrow, r_s = item.partition("->")
            if not arrow:
                raise ValueError(f"bad entry {item!r} in {text!r}")
            pairs.append((int(c_s), int(r_s)))
    return PartialPerm.from_pairs(rows, cols, pairs)


def as_partial(w: Sequence[int]) -> PartialPerm:
    """View a permutation as a total square partial permutation."""
    w = check_perm(w)
    return PartialPerm(len(w), len(w), w)


def partial_identity(m: int, n: int, t: int) -> PartialPerm:
    """
    The rank-``t`` partial identity on the ``m x n`` grid: column ``j`` maps
    to row ``j`` for ``j <= t``.

    >>> partial_identity(2, 3, 0).rank()
    0
    """
    if not 0 <= t <= min(m, n):
        raise ValueError(f"t out of range: {t}")
    return PartialPerm.from_pairs(m, n, ((j, j) for j in range(1, t + 1)))


def partial_identity_tail(m: int, t: int) -> PartialPerm:
    """The ``m x m`` partial identity on columns ``t+1..m`` (zero block then identity)."""
    if not 0 <= t <= m:
        raise ValueError(f"t out of range: {t}")
    return PartialPerm.from_pairs(m, m, ((j, j) for j in range(t + 1, m + 1)))


def left_compose(p: Sequence[int], w: PartialPerm) -> PartialPerm:
    """Relabel rows of ``w`` by the permutation ``p``: column ``j`` maps to ``p(w(j))``."""
    p = check_perm(p)
    if len(p) != w.rows:
        raise ValueError(f"size mismatch: {len(p)} vs {w.rows} rows")
    return PartialPerm(w.rows, w.cols,
                       tuple(None if r is None else p[r - 1] for r in w.image))


def right_compose(w: PartialPerm, p: Sequence[int]) -> PartialPerm:
    """Precompose columns: the result maps column ``j`` to ``w(p(j))``."""
    p = check_perm(p)
    if len(p) != w.cols:
        raise ValueError(f"size mismatch: {w.cols} cols vs {len(p)}")
    return PartialPerm(w.rows, w.cols, tuple(w.image[j - 1] for j in p))


def dots_in(w: PartialPerm, r1: int, r2: int, c1: int, c2: int) -> int:
    """Number of entries of ``w`` inside rows ``r1..r2`` and columns ``c1..c2``."""
    return sum(1 for j, r in enumerate(w.image)
               if r is not None and r1 <= r <= r2 and c1 <= j + 1 <= c2)


@dataclass(frozen=True)
class Blocks:
    """The four blocks of a permutation matrix split after row/column ``n``."""

    w11: PartialPerm  # n x n
    w12: PartialPerm  # n x m
    w21: PartialPerm  # m x n
    w22: PartialPerm  # m x m


def block_split(w: Sequence[int], n: int, m: int) -> Blocks:
    """
    Split a permutation of ``{1..n+m}`` into the four partial permutations
    whose matrix blocks (split after row and column ``n``) reassemble it.

    >>> block_split((6, 2, 3, 5, 4, 1), 3, 3).w21.pairs()
    ((1, 3),)
    """
    w = check_perm(w)
    if len(w) != n + m:
        raise ValueError(f"block sizes inconsistent: {len(w)} != {n}+{m}")
    p11, p12, p21, p22 = [], [], [], []
    for j in range(1, n + 1):
        r = w[j - 1]
        (p11 if r <= n else p21).append((j, r if r <= n else r - n))
    for j in range(1, m + 1):
        r = w[n + j - 1]
        (p12 if r <= n else p22).append((j, r if r <= n else r - n))
    return Blocks(PartialPerm.from_pairs(n, n, p11), PartialPerm.from_pairs(n, m, p12),
                  PartialPerm.from_pairs(m, n, p21), PartialPerm.from_pairs(m, m, p22))


def block_join(blocks: Blocks) -> Perm:
    """Reassemble a permutation from its four blocks (inverse of ``block_split``)."""
    w11, w12, w21, w22 = blocks.w11, blocks.w12, blocks.w21, blocks.w22
    n, m = w11.rows, w22.rows
    if (w11.cols, w12.rows, w12.cols, w21.rows, w21.cols, w22.cols) != (n, n, m, m, n, m):
        raise ValueError("block sizes inconsistent")
    image = []
    for j in range(1, n + 1):
        top, bottom = w11(j), w21(j)
        if (top is None) == (bottom is None):
            raise ValueError(f"column {j} covered {'twice' if top else 'never'}")
        image.append(top if top is not None else n + bottom)  # type: ignore[operator]
    for j in range(1, m + 1):
        top, bottom = w12(j), w22(j)
        if (top is None) == (bottom is None):
            raise ValueError(f"column {n + j} covered {'twice' if top else 'never'}")
        image.append(top if top is not None else n + bottom)  # type: ignore[operator]
    return check_perm(image)


def partial_perms(m: int, n: int, rank: Optional[int] = None) -> Iterator[PartialPerm]:
    """
    All partial permutations on the ``m x n`` grid (optionally of fixed rank),
    in lexicographic order of the column-indexed image (undefined first).
    """
    for raw in itertools.product(range(m + 1), repeat=n):
        defined = [r for r in raw if r]
        if len(set(defined)) != len(defined):
            continue
        if rank is not None and len(defined) != rank:
            continue
        yield PartialPerm(m, n, tuple(r if r else None for r in raw))


def count_partial_perms(m: int, n: int, t: int) -> int:
    """Closed-form count of rank-``t`` partial permutations on an ``m x n`` grid."""
    return factorial(t) * comb(m, t) * comb(n, t)
