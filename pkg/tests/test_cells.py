import itertools
import random

import pytest

from leaf_atlas import cells
from leaf_atlas.exact_matrix import (NORTHEAST, SOUTHWEST, RationalMatrix,
                                     rank_profile, sample_rank)
from leaf_atlas.permutations import PartialPerm, identity, partial_perms


def test_in_cell_examples():
    eye = RationalMatrix.identity(3)
    assert cells.in_cell(eye, identity(3), "B+", "cell")
    swap = RationalMatrix([[0, 1], [1, 0]])
    assert not cells.in_cell(swap, identity(2), "B+", "cell")
    zero = RationalMatrix.zero(2, 2)
    assert cells.in_cell(zero, PartialPerm.from_pairs(2, 2, [(1, 1)]), "B+", "closure")
    with pytest.raises(ValueError):
        cells.in_cell(zero, identity(3))
    with pytest.raises(ValueError):
        cells.in_cell(zero, identity(2), "B?", "cell")


def test_classify_examples():
    assert cells.classify(RationalMatrix.identity(3)).pairs() == ((1, 1), (2, 2), (3, 3))
    assert cells.classify(RationalMatrix.zero(3, 4)).rank() == 0
    x = RationalMatrix([[1, 0, 2], [3, 0, 6], [2, 0, 4]])
    assert cells.classify(x, "B+").pairs() == ((1, 3),)
    assert cells.classify(x, "B-").pairs() == ((3, 1),)


def test_pp_profile_matches_numeric_profile():
    # dot counting agrees with the rank profile of the 0/1 matrix
    for pp in partial_perms(3, 4):
        dense = RationalMatrix([[1 if pp(j) == i else 0 for j in range(1, 5)]
                                for i in range(1, 4)])
        for kind in (SOUTHWEST, NORTHEAST):
            assert cells.pp_rank_profile(pp, kind).table == rank_profile(dense, kind).table


def test_partition_property():
    rng = random.Random(99)
    labels = list(partial_perms(3, 3))
    for i in range(1000):
        t = i % 4
        x = sample_rank(3, 3, t, rng)
        hits = [w for w in labels if cells.in_cell(x, w, "B+", "cell")]
        assert hits == [cells.classify(x, "B+")]


def test_classify_agrees_with_membership_both_sides():
    rng = random.Random(5)
    for i in range(300):
        m, n = 1 + i % 3, 1 + (i // 3) % 3
        x = sample_rank(m, n, i % (min(m, n) + 1), rng)
        for side in ("B+", "B-"):
            assert cells.in_cell(x, cells.classify(x, side), side, "cell")


def brute_ne_class(x):
    """Independent search: the unique label with matching upper-right ranks."""
    hits = []
    for w in partial_perms(x.rows, x.cols):
        if cells.pp_rank_profile(w, NORTHEAST).table == rank_profile(x, NORTHEAST).table:
            hits.append(w)
    assert len(hits) == 1
    return hits[0]


def test_b_minus_classify_vs_brute_force():
    for shape in [(2, 2), (2, 3)]:
        m, n = shape
        for flat in itertools.product((-1, 0, 1), repeat=m * n):
            x = RationalMatrix([flat[i * n:(i + 1) * n] for i in range(m)])
            assert cells.classify(x, "B-") == brute_ne_class(x)
    rng = random.Random(17)
    for _ in range(400):
        x = RationalMatrix([[rng.choice((-1, 0, 1)) for _ in range(3)]
                            for _ in range(3)])
        assert cells.classify(x, "B-") == brute_ne_class(x)


def test_closure_matches_profile_order():
    rng = random.Random(31)
    labels = list(partial_perms(2, 3))
    for i in range(200):
        x = sample_rank(2, 3, i % 3, rng)
        mine = cells.classify(x, "B+")
        my_table = cells.pp_rank_profile(mine, SOUTHWEST).table
        for w in labels:
            wt = cells.pp_rank_profile(w, SOUTHWEST).table
            profile_leq = all(a <= b for ra, rb in zip(my_table, wt)
                              for a, b in zip(ra, rb))
            assert cells.in_cell(x, w, "B+", "closure") == profile_leq
