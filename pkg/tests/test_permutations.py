import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leaf_atlas.permutations import (
    Blocks, PartialPerm, all_perms, as_partial, block_longest, block_join,
    block_split, bruhat_leq, compose, count_partial_perms, dots_in,
    extend_ascending, identity, inverse, is_min_rep_first, is_min_rep_last,
    left_compose, length, longest, min_rep_first, min_rep_last,
    min_reps_first, min_reps_last, parse_partial, partial_identity,
    partial_identity_tail, partial_perms, right_compose, subset_leq, w_mn,
)

perms = st.integers(1, 6).flatmap(
    lambda n: st.permutations(tuple(range(1, n + 1))).map(tuple))


def adjacent_transposition(n, i):
    s = list(range(1, n + 1))
    s[i - 1], s[i] = s[i], s[i - 1]
    return tuple(s)


# --- basic operations -------------------------------------------------------

def test_length_examples():
    assert length(identity(4)) == 0
    assert length(longest(4)) == 6
    assert length((6, 2, 3, 5, 4, 1)) == 10


def test_length_matches_double_loop_oracle():
    for w in all_perms(5):
        brute = sum(1 for i, j in itertools.combinations(range(5), 2) if w[i] > w[j])
        assert length(w) == brute


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose((1, 2), (1, 2, 3))


@given(perms)
def test_inverse_roundtrip(w):
    assert compose(w, inverse(w)) == identity(len(w))
    assert inverse(inverse(w)) == w
    assert length(inverse(w)) == length(w)


@given(perms, st.data())
def test_adjacent_transposition_changes_length_by_one(w, data):
    n = len(w)
    if n < 2:
        return
    i = data.draw(st.integers(1, n - 1))
    assert abs(length(compose(w, adjacent_transposition(n, i))) - length(w)) == 1


# --- set comparison and Bruhat order ---------------------------------------

def test_subset_leq_examples():
    assert subset_leq({1, 3}, {2, 3})
    assert subset_leq({2}, {2})
    assert not subset_leq({3}, {2})
    with pytest.raises(ValueError):
        subset_leq({1, 2}, {3})


def test_bruhat_examples():
    assert bruhat_leq((2, 1, 3), (2, 3, 1))
    assert not bruhat_leq((3, 1, 2), (2, 3, 1))
    assert not bruhat_leq((2, 3, 1), (3, 1, 2))
    for w in all_perms(4):
        assert bruhat_leq(w, w)
        assert bruhat_leq(identity(4), w)
        assert bruhat_leq(w, longest(4))


def bruhat_lower_set(w):
    """Independent oracle: all products of subwords of a fixed reduced word."""
    n = len(w)
    word = []
    v = list(w)
    # Sort v with adjacent swaps, recording them; reversing gives a reduced
    # word for w.
    for i in range(n):
        for j in range(n - 1):
            if v[j] > v[j + 1]:
                v[j], v[j + 1] = v[j + 1], v[j]
                word.append(j + 1)
    word.reverse()
    assert len(word) == length(w)
    reach = {identity(n)}
    for i in word:
        s = adjacent_transposition(n, i)
        reach |= {compose(u, s) for u in reach}
    return reach


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bruhat_matches_subword_oracle_exhaustive(n):
    for w in all_perms(n):
        lower = bruhat_lower_set(w)
        for y in all_perms(n):
            assert bruhat_leq(y, w) == (y in lower)


def test_bruhat_matches_subword_oracle_s5():
    for w in all_perms(5):
        lower = bruhat_lower_set(w)
        for y in all_perms(5):
            assert bruhat_leq(y, w) == (y in lower)


def test_bruhat_antitone_under_longest():
    w0 = longest(4)
    for y in all_perms(4):
        for z in all_perms(4):
            assert bruhat_leq(y, z) == bruhat_leq(compose(w0, z), compose(w0, y))


# --- special elements -------------------------------------------------------

def test_block_longest_and_w_mn():
    assert block_longest(1, 1) == (1, 2)
    assert block_longest(2, 3) == (2, 1, 5, 4, 3)
    assert w_mn(2, 2) == (3, 4, 1, 2)
    assert length(block_longest(3, 2)) == 3 + 1
    # matrix form of w_mn is [[0, I_m], [I_n, 0]]
    for n, m in [(1, 2), (2, 2), (3, 2)]:
        w = w_mn(n, m)
        assert w == tuple(range(m + 1, m + n + 1)) + tuple(range(1, m + 1))


def test_partial_identities():
    assert partial_identity(2, 3, 0).rank() == 0
    assert partial_identity(3, 2, 2).pairs() == ((1, 1), (2, 2))
    assert partial_identity_tail(4, 1).pairs() == ((2, 2), (3, 3), (4, 4))
    with pytest.raises(ValueError):
        partial_identity(2, 3, 3)


# --- minimal coset representatives -----------------------------------------

def test_min_rep_checks():
    assert is_min_rep_first((1, 3, 2), 2)
    assert not is_min_rep_first((3, 1, 2), 2)
    assert is_min_rep_first(identity(5), 4)
    assert is_min_rep_last(identity(5), 3)
    assert min_rep_first((2, 1, 3), 2) == (1, 2, 3)
    assert min_rep_last((1, 3, 2), 2) == (1, 2, 3)


def test_min_rep_is_shortest_in_coset():
    # the sorted-head representative minimizes length over the whole coset
    for w in all_perms(4):
        rep = min_rep_first(w, 2)
        coset = {compose(w, tau + (3, 4)) for tau in all_perms(2)}
        assert rep in coset
        assert length(rep) == min(length(u) for u in coset)


def test_min_reps_enumerators():
    assert sorted(min_reps_first(3, 2)) == sorted(
        w for w in all_perms(3) if is_min_rep_first(w, 2))
    assert sorted(min_reps_last(4, 2)) == sorted(
        w for w in all_perms(4) if is_min_rep_last(w, 2))


def test_extend_ascending():
    assert extend_ascending(4, (3, 1)) == (3, 1, 2, 4)
    with pytest.raises(ValueError):
        extend_ascending(3, (2, 2))


# --- partial permutations ---------------------------------------------------

def test_partial_perm_basics():
    p = PartialPerm.from_pairs(3, 4, [(2, 3), (4, 1)])
    assert p.rank() == 2
    assert p.dom() == (2, 4)
    assert p.rng() == (1, 3)
    assert p(2) == 3 and p(1) is None
    assert p.literal() == "3x4:2->3,4->1"
    assert parse_partial("3x4:2->3,4->1") == p
    assert parse_partial("2x2:") == PartialPerm.empty(2, 2)
    with pytest.raises(ValueError):
        PartialPerm.from_pairs(2, 2, [(1, 1), (2, 1)])


pps = st.tuples(st.integers(1, 5), st.integers(1, 5), st.randoms(use_true_random=False)).map(
    lambda args: _random_pp(*args))


def _random_pp(m, n, rng):
    cols = [c for c in range(1, n + 1) if rng.random() < 0.6]
    rows = rng.sample(range(1, m + 1), min(len(cols), m))
    return PartialPerm.from_pairs(m, n, zip(cols, rows))


@given(pps)
def test_transpose_involution(p):
    assert p.transpose().transpose() == p
    assert p.transpose().rank() == p.rank()
    assert p.transpose().dom() == p.rng()


def test_partial_perm_counts():
    for m in range(1, 5):
        for n in range(1, 5):
            for t in range(min(m, n) + 1):
                assert (sum(1 for _ in partial_perms(m, n, t))
                        == count_partial_perms(m, n, t))


# --- block splitting --------------------------------------------------------

def test_block_split_rank_one_example():
    b = block_split((6, 2, 3, 5, 4, 1), 3, 3)
    assert b.w21.pairs() == ((1, 3),)
    assert b.w12.pairs() == ((3, 1),)
    assert b.w11.pairs() == ((2, 2), (3, 3))
    assert b.w22.pairs() == ((1, 2), (2, 1))


def test_block_split_of_w_mn():
    # square case: both diagonal blocks empty, off-diagonal blocks identities
    for n in (2, 3):
        b = block_split(w_mn(n, n), n, n)
        assert b.w11.rank() == 0 and b.w22.rank() == 0
        assert b.w21 == partial_identity(n, n, n)
        assert b.w12 == partial_identity(n, n, n)
    # rectangular case, checked entry by entry
    b = block_split(w_mn(3, 2), 3, 2)
    assert b.w11.pairs() == ((1, 3),)
    assert b.w21.pairs() == ((2, 1), (3, 2))
    assert b.w12.pairs() == ((1, 1), (2, 2))
    assert b.w22.rank() == 0


def test_block_join_roundtrip():
    for w in all_perms(4):
        for n in (1, 2, 3):
            assert block_join(block_split(w, n, 4 - n)) == w


def test_block_join_inconsistent():
    b = block_split((2, 1, 4, 3), 2, 2)
    broken = Blocks(b.w11, b.w12, b.w11, b.w22)
    with pytest.raises(ValueError):
        block_join(broken)


def test_compose_helpers():
    p = partial_identity(3, 4, 2)
    y = (3, 1, 2)
    v = (2, 1, 3, 4)
    q = left_compose(y, right_compose(p, inverse(v)))
    # columns v(1), v(2) map to y(1), y(2)
    assert q.pairs() == ((1, 1), (2, 3))
    assert dots_in(q, 1, 3, 1, 1) == 1
    assert dots_in(q, 2, 3, 1, 2) == 1
    assert as_partial((2, 1)).to_perm() == (2, 1)
