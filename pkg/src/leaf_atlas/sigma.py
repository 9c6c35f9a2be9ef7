"""Quadruple indexing of the rank-``t`` strata.

A stratum of rank ``t`` is equivalently indexed by a quadruple
``(y, v, z, u)`` of minimal coset representatives in S_m and S_n with
``z <= y`` and ``v <= u``: the stratum's two rectangular Bruhat classes
factor as ``y . I_t . v^{-1}`` (upper side) and ``z . I_t . u^{-1}`` (lower
side).  This module enumerates the quadruples, converts between them and
permutation indices via an explicit block construction, and provides the
underlying unique factorizations of partial permutations.
"""
from __future__ import annotations

from dataclasses import dataclass

from .leaves import LeafIndex
from .permutations import (Perm, PartialPerm, bruhat_leq, check_perm, compose,
                           extend_ascending, identity, inverse, is_min_rep_first,
                           is_min_rep_last, left_compose, longest, min_rep_last,
                           min_reps_first, min_reps_last, partial_identity,
                           right_compose)


@dataclass(frozen=True)
class SigmaTuple:
    """
    ``(y, v, z, u, t)`` with ``y`` in S_m ascending after position ``t``,
    ``v`` in S_n ascending on positions ``1..t``, ``z`` in S_m ascending on
    ``1..t``, ``u`` in S_n ascending after ``t``, and ``z <= y``, ``v <= u``
    in the Bruhat order.
    """

    y: Perm
    v: Perm
    z: Perm
    u: Perm
    t: int

    def __post_init__(self) -> None:
        y, v, z, u = map(check_perm, (self.y, self.v, self.z, self.u))
        m, n, t = len(y), len(v), self.t
        if len(z) != m or len(u) != n:
            raise ValueError("component sizes disagree")
        if not 0 <= t <= min(m, n):
            raise ValueError(f"t={t} out of range for m={m}, n={n}")
        if not is_min_rep_last(y, m - t):
            raise ValueError(f"y={y} is not ascending after position {t}")
        if not is_min_rep_first(v, t):
            raise ValueError(f"v={v} is not ascending on positions 1..{t}")
        if not is_min_rep_first(z, t):
            raise ValueError(f"z={z} is not ascending on positions 1..{t}")
        if not is_min_rep_last(u, n - t):
            raise ValueError(f"u={u} is not ascending after position {t}")
        if not bruhat_leq(z, y):
            raise ValueError(f"z={z} is not Bruhat-below y={y}")
        if not bruhat_leq(v, u):
            raise ValueError(f"v={v} is not Bruhat-below u={u}")

    @property
    def m(self) -> int:
        return len(self.y)

    @property
    def n(self) -> int:
        return len(self.v)

    def to_dict(self) -> dict:
        return {"y": list(self.y), "v": list(self.v), "z": list(self.z),
                "u": list(self.u), "t": self.t}

    @classmethod
    def from_dict(cls, d: dict) -> "SigmaTuple":
        return cls(tuple(d["y"]), tuple(d["v"]), tuple(d["z"]), tuple(d["u"]), d["t"])


def enumerate_sigma(m: int, n: int, t: int) -> list[SigmaTuple]:
    """All valid quadruples for rank ``t``, ordered lexicographically by (y, v, z, u)."""
    if not 0 <= t <= min(m, n):
        raise ValueError(f"t={t} out of range for m={m}, n={n}")
    yz = [(y, z) for y in min_reps_last(m, m - t)
          for z in min_reps_first(m, t) if bruhat_leq(z, y)]
    vu = [(v, u) for v in min_reps_first(n, t)
          for u in min_reps_last(n, n - t) if bruhat_leq(v, u)]
    out = [SigmaTuple(y, v, z, u, t) for (y, z) in yz for (v, u) in vu]
    out.sort(key=lambda s: (s.y, s.v, s.z, s.u))
    return out


def phi(sig: SigmaTuple) -> Perm:
    """
    The block permutation attached to a quadruple: columns ``1..n`` map
    through ``w_o^m y I_t v^{-1}`` into the top rows or through
    ``u J_t v^{-1}`` into the bottom rows, columns ``n+1..n+m`` through
    ``w_o^m y J_t z^{-1} w_o^m`` or ``u I_t z^{-1} w_o^m``.  The result obeys
    ``-n <= phi(i) - i <= m`` with exactly ``t`` of the first ``n`` columns
    landing in the top rows.
    """
    m, n, t = sig.m, sig.n, sig.t
    y, v, z, u = sig.y, sig.v, sig.z, sig.u
    vinv, zinv = inverse(v), inverse(z)
    images = []
    for c in range(1, n + 1):
        j = vinv[c - 1]
        images.append(m + 1 - y[j - 1] if j <= t else m + u[j - 1])
    for c in range(1, m + 1):
        j = zinv[m - c]  # z^{-1} of the reflected column index
        images.append(m + u[j - 1] if j <= t else m + 1 - y[j - 1])
    return check_perm(images)


def phi_to_leaf(sig: SigmaTuple) -> LeafIndex:
    """The stratum index of a quadruple: the longest element times ``phi``."""
    N = sig.m + sig.n
    leaf = LeafIndex.from_w(compose(longest(N), phi(sig)), sig.m, sig.n)
    assert leaf.t == sig.t
    return leaf


def phi_inv(L: LeafIndex) -> SigmaTuple:
    """
    The unique quadruple mapping to ``L``, reconstructed from the blocks of
    the reflected permutation: ``y`` from the top-left block along its domain
    in ascending order, ``u`` from the bottom-right block along its domain in
    descending order, then ``v`` and ``z`` extended through the transposed
    off-diagonal blocks.
    """
    m, n, t = L.m, L.n, L.t
    N = m + n
    wt = tuple(N + 1 - x for x in L.w)
    # Blocks of wt with rows split (m, n) and columns split (n, m).
    w11: dict[int, int] = {}
    w21: dict[int, int] = {}
    for c in range(1, n + 1):
        r = wt[c - 1]
        if r <= m:
            w11[c] = r
        else:
            w21[c] = r - m
    w12: dict[int, int] = {}
    w22: dict[int, int] = {}
    for c in range(1, m + 1):
        r = wt[n + c - 1]
        if r <= m:
            w12[c] = r
        else:
            w22[c] = r - m
    assert len(w11) == t and len(w22) == t

    vs = sorted(w11)
    y = extend_ascending(m, [m + 1 - w11[c] for c in vs])
    zs = sorted(w22, reverse=True)
    u = extend_ascending(n, [w22[c] for c in zs])
    w21_inv = {r: c for c, r in w21.items()}
    v = tuple(vs) + tuple(w21_inv[u[j - 1]] for j in range(t + 1, n + 1))
    w12_inv = {r: c for c, r in w12.items()}
    z = (tuple(m + 1 - c for c in zs)
         + tuple(m + 1 - w12_inv[m + 1 - y[j - 1]] for j in range(t + 1, m + 1)))
    return SigmaTuple(y, v, z, u, t)


def decompose_partial(w: PartialPerm, form: str) -> tuple[Perm, Perm]:
    """
    Unique two-sided factorization of a rank-``t`` partial permutation as
    ``first . I_t . second^{-1}``:

    - ``form="yv"``: ``y`` ascending after position ``t``, ``v`` ascending on
      both ``1..t`` and ``t+1..n``;
    - ``form="zu"``: ``z`` ascending on both ranges, ``u`` ascending after
      position ``t``.
    """
    m, n, t = w.rows, w.cols, w.rank()
    if form == "yv":
        dom = w.dom()
        v = extend_ascending(n, dom)
        y = extend_ascending(m, [w(c) for c in dom])
        first, second = y, v
    elif form == "zu":
        rng_rows = w.rng()
        z = extend_ascending(m, rng_rows)
        wt = w.transpose()
        u = extend_ascending(n, [wt(r) for r in rng_rows])
        first, second = z, u
    else:
        raise ValueError(f"form must be 'yv' or 'zu', got {form!r}")
    recomposed = left_compose(first, right_compose(partial_identity(m, n, t),
                                                   inverse(second)))
    assert recomposed == w
    return first, second


def sigma_retile(sig: SigmaTuple) -> tuple[SigmaTuple, Perm, Perm]:
    """
    Split ``z = z0 . tau1`` and ``v = v0 . tau2`` with ``z0``, ``v0`` minimal
    on both ranges and ``tau1``, ``tau2`` permuting only positions past ``t``.
    The base quadruple ``(y, v0, z0, u)`` is again valid.
    """
    m, n, t = sig.m, sig.n, sig.t
    z0 = min_rep_last(sig.z, m - t)
    v0 = min_rep_last(sig.v, n - t)
    tau1 = compose(inverse(z0), sig.z)
    tau2 = compose(inverse(v0), sig.v)
    assert tau1[:t] == identity(m)[:t] and tau2[:t] == identity(n)[:t]
    return SigmaTuple(sig.y, v0, z0, sig.u, t), tau1, tau2
