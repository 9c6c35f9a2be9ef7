import json
import random

import pytest

from leaf_atlas import cells
from leaf_atlas.exact_matrix import RationalMatrix, rank, sample_rank
from leaf_atlas.leaves import (LeafIndex, classify_leaf, closure_leq,
                               enumerate_leaves, hasse, hasse_dot, in_leaf,
                               leaf_profile, window_ok)
from leaf_atlas.permutations import (block_longest, bruhat_leq, left_compose,
                                     longest, right_compose)


def test_enumeration_counts():
    assert len(enumerate_leaves(1, 1)) == 2
    assert len(enumerate_leaves(2, 1)) == 4
    assert len(enumerate_leaves(1, 2)) == 4
    assert len(enumerate_leaves(2, 2)) == 14


def test_enumeration_order_and_window():
    out = enumerate_leaves(2, 2)
    assert [L.w for L in out] == sorted(L.w for L in out)
    assert all(window_ok(L.w, 2, 2) for L in out)
    assert enumerate_leaves(1, 1)[0].w == (1, 2)


def test_window_equals_bruhat_condition():
    for m, n in [(1, 1), (2, 1), (1, 3), (2, 2), (3, 2)]:
        base = block_longest(n, m)
        from leaf_atlas.permutations import all_perms
        window = {w for w in all_perms(m + n) if window_ok(w, m, n)}
        bruhat = {w for w in all_perms(m + n) if bruhat_leq(base, w)}
        assert window == bruhat


def test_rank_filter_partitions():
    total = enumerate_leaves(3, 2)
    by_rank = [enumerate_leaves(3, 2, t) for t in range(3)]
    assert sum(len(b) for b in by_rank) == len(total)
    for t, batch in enumerate(by_rank):
        assert all(L.t == t for L in batch)


def test_leaf_index_validation():
    with pytest.raises(ValueError):
        LeafIndex.from_w((1, 2, 3), 2, 1)  # s(3)=3 breaks the window
    with pytest.raises(ValueError):
        LeafIndex((2, 1), 1, 1, 0, 1)      # wrong cached rank


def test_one_by_one_membership():
    zero = RationalMatrix.zero(1, 1)
    five = RationalMatrix([[5]])
    ident = LeafIndex.from_w((1, 2), 1, 1)
    trans = LeafIndex.from_w((2, 1), 1, 1)
    assert in_leaf(zero, ident) and not in_leaf(zero, trans)
    assert in_leaf(five, trans) and not in_leaf(five, ident)
    assert classify_leaf(zero) == ident and ident.dim == 0
    assert classify_leaf(five) == trans and trans.dim == 1


def test_rank_one_example_membership():
    L = LeafIndex.from_w((6, 2, 3, 5, 4, 1), 3, 3)
    assert (L.t, L.dim) == (1, 4)
    good = RationalMatrix([[1, 0, 2], [3, 0, 6], [2, 0, 4]])
    assert in_leaf(good, L, "cell")
    assert classify_leaf(good) == L
    bad = RationalMatrix([[1, 1, 1], [1, 1, 1], [1, 1, 1]])  # middle column nonzero
    assert not in_leaf(bad, L, "cell")
    mid_row_zero = RationalMatrix([[1, 0, 2], [0, 0, 0], [2, 0, 4]])
    assert not in_leaf(mid_row_zero, L, "cell")
    assert in_leaf(mid_row_zero, L, "closure")


def test_generic_square_matrix_is_dense_orbit():
    rng = random.Random(12)
    for _ in range(20):
        x = sample_rank(2, 2, 2, rng)
        L = classify_leaf(x)
        if rank(x) == 2 and all(e != 0 for row in x.entries for e in row):
            assert L.w == (4, 3, 2, 1) or L.dim <= 4
    # a concrete generic invertible matrix
    x = RationalMatrix([[1, 2], [3, 4]])
    L = classify_leaf(x)
    assert L.w == longest(4) and L.dim == 4


def test_membership_equals_classification_exhaustive_2x2():
    rng = random.Random(7)
    leaves = enumerate_leaves(2, 2)
    for i in range(150):
        x = sample_rank(2, 2, i % 3, rng)
        L0 = classify_leaf(x)
        tables = leaf_profile(x)
        for L in leaves:
            assert in_leaf(x, L, "cell", tables) == (L == L0)


def test_closure_equals_bruhat_exhaustive_2x2():
    rng = random.Random(8)
    leaves = enumerate_leaves(2, 2)
    for i in range(100):
        x = sample_rank(2, 2, i % 3, rng)
        L0 = classify_leaf(x)
        tables = leaf_profile(x)
        for L in leaves:
            assert in_leaf(x, L, "closure", tables) == bruhat_leq(L0.w, L.w)


def test_classify_rank_consistency():
    rng = random.Random(9)
    for i in range(60):
        m, n = 1 + i % 3, 1 + (i // 3) % 4
        x = sample_rank(m, n, i % (min(m, n) + 1), rng)
        assert classify_leaf(x).t == rank(x)


def test_block_containment():
    rng = random.Random(10)
    for i in range(60):
        m, n = 1 + i % 3, 1 + (i // 5) % 3
        x = sample_rank(m, n, i % (min(m, n) + 1), rng)
        b = classify_leaf(x).blocks()
        assert cells.classify(x, "B+") == b.w21
        assert cells.classify(x, "B-") == left_compose(
            longest(m), right_compose(b.w12.transpose(), longest(n)))


def test_dimension_bounds():
    for m, n in [(1, 1), (2, 2), (2, 3), (3, 3)]:
        leaves = enumerate_leaves(m, n)
        base = block_longest(n, m)
        for L in leaves:
            assert 0 <= L.dim <= m * n
            assert (L.dim == m * n) == (L.w == longest(m + n))
            assert (L.dim == 0) == (L.w == base)


def test_closure_leq_extremes():
    leaves = enumerate_leaves(2, 2)
    bottom = LeafIndex.from_w(block_longest(2, 2), 2, 2)
    top = LeafIndex.from_w(longest(4), 2, 2)
    for L in leaves:
        assert closure_leq(bottom, L)
        assert closure_leq(L, top)
    with pytest.raises(ValueError):
        closure_leq(bottom, LeafIndex.from_w((2, 1), 1, 1))


def brute_covers(leaves):
    edges = []
    for a in leaves:
        for b in leaves:
            if a != b and bruhat_leq(a.w, b.w):
                between = any(c not in (a, b) and bruhat_leq(a.w, c.w)
                              and bruhat_leq(c.w, b.w) for c in leaves)
                if not between:
                    edges.append((a, b))
    return sorted(edges, key=lambda e: (e[0].w, e[1].w))


def test_hasse_examples_and_covers():
    single = hasse(1, 1)
    assert len(single) == 1
    assert (single[0][0].w, single[0][1].w) == ((1, 2), (2, 1))
    for m, n in [(2, 1), (2, 2)]:
        got = sorted(hasse(m, n), key=lambda e: (e[0].w, e[1].w))
        assert got == brute_covers(enumerate_leaves(m, n))


def test_hasse_dot_output():
    dot = hasse_dot(1, 1)
    assert dot.startswith("digraph leaves {")
    assert '"1,2" -> "2,1";' in dot


def test_leaf_json_roundtrip():
    L = LeafIndex.from_w((6, 2, 3, 5, 4, 1), 3, 3)
    assert LeafIndex.from_dict(json.loads(json.dumps(L.to_dict()))) == L
    with pytest.raises(ValueError):
        LeafIndex.from_dict({"w": [6, 2, 3, 5, 4, 1], "m": 3, "n": 3, "t": 2})
