import random

import pytest

from leaf_atlas import cells
from leaf_atlas.echelon import (COLUMN, ROW, all_patterns,
                                column_pattern, column_stratum_representative,
                                column_stratum_sigma, in_pattern, leaf_factors,
                                parse_pattern, row_pattern, row_stratum_sigma,
                                sample_column_stratum, sample_row_stratum,
                                stratify_pattern)
from leaf_atlas.exact_matrix import (RationalMatrix, rank, sample_echelon_col,
                                     sample_echelon_row)
from leaf_atlas.leaves import LeafIndex, classify_leaf
from leaf_atlas.sigma import enumerate_sigma, phi_to_leaf


def test_pattern_validation_and_literals():
    pat = parse_pattern("row:3,6:2,4,5")
    assert pat == row_pattern(6, (2, 4, 5))
    assert pat.literal() == "row:3,6:2,4,5"
    assert parse_pattern("col:4,2:1,3") == column_pattern(4, (1, 3))
    for bad in ("col:3,2:2,2", "col:3,2:3", "row:2,3:1", "xyz:1,1:1"):
        with pytest.raises(ValueError):
            parse_pattern(bad)


def test_in_pattern_examples():
    pat = row_pattern(6, (2, 4, 5))
    rows = RationalMatrix([[0, 1, 0, 0, 0, 0],
                           [0, 0, 0, 1, 0, 0],
                           [0, 0, 0, 0, 1, 0]])
    assert in_pattern(rows, pat)
    assert not in_pattern(RationalMatrix.zero(3, 6), pat)
    assert in_pattern(RationalMatrix.identity(2), column_pattern(2, (1, 2)))
    with pytest.raises(ValueError):
        in_pattern(RationalMatrix.zero(2, 2), pat)


def test_pattern_members_have_full_rank():
    rng = random.Random(4)
    for seed in range(20):
        a = sample_echelon_col(4, 2, (2, 4), rng)
        assert in_pattern(a, column_pattern(4, (2, 4)))
        assert rank(a) == 2


def test_stratify_examples():
    assert stratify_pattern(column_pattern(1, (1,))) == [((1,), (1,))]
    for m in (2, 3, 4):
        for t in range(1, m + 1):
            for pat in all_patterns(COLUMN, m, t):
                strata = stratify_pattern(pat)
                assert len(strata) >= 1
                for y, z in strata:
                    assert tuple(z[:t]) == pat.pivots
    # row side mirrors with (u, v) roles
    for u, v in stratify_pattern(row_pattern(3, (2,))):
        assert v[0] == 2


def test_stratification_covers_and_separates():
    rng = random.Random(11)
    for pat in all_patterns(COLUMN, 3, 2):
        strata = stratify_pattern(pat)
        targets = {pair: phi_to_leaf(column_stratum_sigma(3, 2, *pair))
                   for pair in strata}
        for k in range(12):
            a = sample_echelon_col(3, 2, pat.pivots, rng,
                                   zero_prob=0.0 if k % 2 else 0.5)
            L = classify_leaf(a)
            hits = [pair for pair, tgt in targets.items() if tgt == L]
            assert len(hits) == 1
            # opposite-side class pins the pivots
            lower = cells.classify(a, "B-")
            assert lower.pairs() == tuple((j, r) for j, r in
                                          enumerate(pat.pivots, start=1))


def test_transpose_duality():
    rng = random.Random(12)
    for t, n in [(1, 3), (2, 3), (2, 4)]:
        for pivots in [p.pivots for p in all_patterns(ROW, n, t)]:
            a = sample_echelon_row(t, n, pivots, rng)
            assert in_pattern(a, row_pattern(n, pivots))
            assert in_pattern(a.transpose(), column_pattern(n, pivots))


def test_torus_stability():
    rng = random.Random(13)
    pat = column_pattern(4, (1, 3))
    for _ in range(10):
        a = sample_echelon_col(4, 2, (1, 3), rng)
        scaled = a.scaled([rng.choice((-3, 2, "1/2", 5)) for _ in range(4)],
                          [rng.choice((7, -1, "2/3")) for _ in range(2)])
        assert in_pattern(scaled, pat)
        assert classify_leaf(scaled) == classify_leaf(a)


def test_stratum_representatives_m_le_3_all_reachable():
    for m in (2, 3):
        for t in range(1, m + 1):
            for pat in all_patterns(COLUMN, m, t):
                for y, z in stratify_pattern(pat):
                    rep = column_stratum_representative(m, t, y, z)
                    assert rep is not None
                    assert classify_leaf(rep) == phi_to_leaf(
                        column_stratum_sigma(m, t, y, z))


def test_targeted_stratum_sampling():
    rng = random.Random(14)
    for y, z in stratify_pattern(column_pattern(3, (2,))):
        a = sample_column_stratum(3, 1, y, z, rng)
        assert a is not None
        assert classify_leaf(a) == phi_to_leaf(column_stratum_sigma(3, 1, y, z))
    u, v = stratify_pattern(row_pattern(3, (2,)))[0]
    r = sample_row_stratum(1, 3, u, v, rng)
    assert r is not None
    assert classify_leaf(r) == phi_to_leaf(row_stratum_sigma(1, 3, u, v))


def test_leaf_factors_descriptors():
    L = LeafIndex.from_w((6, 2, 3, 5, 4, 1), 3, 3)
    (y, z), (u, v) = leaf_factors(L)
    assert (y, z) == ((3, 1, 2), (1, 2, 3))
    assert (u, v) == ((3, 1, 2), (1, 3, 2))
    zero = LeafIndex.from_w((3, 2, 1, 6, 5, 4), 3, 3)  # rank-0 stratum
    assert zero.t == 0
    (y0, z0), (u0, v0) = leaf_factors(zero)
    assert y0 == z0 == (1, 2, 3) and u0 == v0 == (1, 2, 3)


def test_factor_products_classify_to_the_leaf():
    rng = random.Random(15)
    for m, n in [(2, 2), (3, 2), (3, 3)]:
        for t in range(min(m, n) + 1):
            sigs = enumerate_sigma(m, n, t)
            for sig in (sigs if len(sigs) <= 20 else rng.sample(sigs, 20)):
                if t == 0:
                    assert classify_leaf(RationalMatrix.zero(m, n)) == phi_to_leaf(sig)
                    continue
                c = sample_column_stratum(m, t, sig.y, sig.z, rng)
                r = sample_row_stratum(t, n, sig.u, sig.v, rng)
                assert c is not None and r is not None
                # the factors themselves sit in their own strata
                assert classify_leaf(c) == phi_to_leaf(
                    column_stratum_sigma(m, t, sig.y, sig.z))
                assert classify_leaf(r) == phi_to_leaf(
                    row_stratum_sigma(t, n, sig.u, sig.v))
                assert classify_leaf(c @ r) == phi_to_leaf(sig)
