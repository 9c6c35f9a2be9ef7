"""Seeded cross-validation campaigns over the whole library.

Each campaign ties one family of characterizations to the others on seeded
random input and/or exhaustive small enumerations, and returns a
machine-readable report.  Failures embed a replayable payload: feeding it to
``replay`` re-executes exactly the failed check on exactly the failed input.

Determinism: all randomness flows from ``random.Random(stream_seed)`` where
``stream_seed = seed * 1_000_003 + stream_index`` and the sample budget is
split into fixed-size streams, so reports are bit-identical for a given
``(campaign, m, n, samples, seed)`` regardless of the worker count.  Sample
budgets rotate across ranks ``0..min(m, n)`` so degenerate strata are
exercised, with random row/column/entry zeroing layered on top.
"""
from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import cells
from .double_bruhat import (DoubleCellIndex, classify_double, decompose,
                            dense_orbit, is_nonempty)
from .echelon import (COLUMN, ROW, EchelonPattern, all_patterns,
                      column_stratum_sigma, in_pattern, parse_pattern,
                      sample_column_stratum, sample_row_stratum,
                      stratify_pattern)
from .exact_matrix import (RationalMatrix, from_text, sample_echelon_col,
                           sample_echelon_row, sample_rank, _rand_nonzero)
from .leaves import (LeafIndex, classify_leaf, enumerate_leaves, in_leaf,
                     leaf_profile, window_ok)
from .permutations import (PartialPerm, all_perms, block_longest, bruhat_leq,
                           count_partial_perms, inverse, left_compose,
                           longest, parse_partial, partial_identity,
                           partial_perms, right_compose)
from .sigma import SigmaTuple, enumerate_sigma, phi, phi_inv, phi_to_leaf

CAMPAIGNS = ("partition", "thm42_equiv", "closure_order", "lemma75_blocks",
             "phi_bijection", "echelon_strata", "double_cells", "counts")

_SAMPLING = {"partition", "thm42_equiv", "closure_order", "lemma75_blocks"}

_STREAM_CHUNK = 250          # fixed stream granularity, independent of workers
_EXHAUSTIVE_LIMIT = 300      # exhaustive index sweeps only below this many strata
_OTHERS_PER_SAMPLE = 12      # spot-checked wrong indices above the limit

ENV_THREADS = "LEAF_ATLAS_THREADS"


def derive_seed(seed: int, stream: int) -> int:
    return seed * 1_000_003 + stream


def resolve_threads(threads: Optional[int]) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get(ENV_THREADS)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass
class VerificationReport:
    """Outcome of one campaign; ``passed + failed + skipped == attempted``."""

    campaign: str
    params: dict
    attempted: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexamples: list = field(default_factory=list)
    wall_time: float = 0.0
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {"schema": "leaf-atlas/v1", "campaign": self.campaign,
                "params": self.params, "attempted": self.attempted,
                "passed": self.passed, "failed": self.failed,
                "skipped": self.skipped, "counterexamples": self.counterexamples,
                "wall_time": self.wall_time, "info": self.info}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


@lru_cache(maxsize=None)
def _leaves(m: int, n: int) -> tuple[LeafIndex, ...]:
    return tuple(enumerate_leaves(m, n))


# ---------------------------------------------------------------------------
# Individual checks (shared between campaigns and replay)


def check_unique_membership(x: RationalMatrix, leaf_list) -> bool:
    """Exactly one stratum accepts ``x`` under the rank conditions."""
    tables = leaf_profile(x)
    return sum(1 for L in leaf_list if in_leaf(x, L, "cell", tables)) == 1


def check_classify_equiv(x: RationalMatrix, leaf_list) -> bool:
    """Rank-condition membership agrees with classification on every index."""
    L0 = classify_leaf(x)
    tables = leaf_profile(x)
    return all(in_leaf(x, L, "cell", tables) == (L == L0) for L in leaf_list)


def check_closure_order(x: RationalMatrix, leaf_list) -> bool:
    """Closure membership agrees with the Bruhat comparison against the class of ``x``."""
    L0 = classify_leaf(x)
    tables = leaf_profile(x)
    return all(in_leaf(x, L, "closure", tables) == bruhat_leq(L0.w, L.w)
               for L in leaf_list)


def check_block_classes(x: RationalMatrix) -> bool:
    """
    The two rectangular cell labels of ``x`` equal both the off-diagonal
    blocks of its stratum index and the quadruple factorizations.
    """
    L = classify_leaf(x)
    sig = phi_inv(L)
    b = L.blocks()
    m, n, t = L.m, L.n, L.t
    ident = partial_identity(m, n, t)
    up_target = left_compose(sig.y, right_compose(ident, inverse(sig.v)))
    lo_target = left_compose(sig.z, right_compose(ident, inverse(sig.u)))
    lo_block = left_compose(longest(m), right_compose(b.w12.transpose(), longest(n)))
    return (cells.classify(x, cells.B_PLUS) == up_target == b.w21
            and cells.classify(x, cells.B_MINUS) == lo_target == lo_block)


def check_sigma_in_double_cell(x: RationalMatrix) -> bool:
    """The quadruple of ``x``'s stratum appears in its double cell's decomposition."""
    d = classify_double(x)
    if not is_nonempty(d):
        return False
    return phi_inv(classify_leaf(x)) in decompose(d)


def check_criteria_agreement(d: DoubleCellIndex, leaf_list=None) -> bool:
    """Factorization test, set test and index-completion search all agree."""
    local = is_nonempty(d)  # asserts the two local criteria match
    m, n = d.shape
    target12 = left_compose(longest(n), right_compose(d.w2.transpose(), longest(m)))
    if leaf_list is None:
        leaf_list = _leaves(m, n)
    by_search = any(L.blocks().w21 == d.w1 and L.blocks().w12 == target12
                    for L in leaf_list)
    return local == by_search


def check_dense_orbit(d: DoubleCellIndex) -> bool:
    """The base quadruple leads the decomposition and dominates it in closure order."""
    dec = decompose(d)
    dense = dense_orbit(d)
    top = phi_to_leaf(dense)
    return dense == dec[0] and all(bruhat_leq(phi_to_leaf(s).w, top.w) for s in dec)


def check_echelon_member(a: RationalMatrix, pat: EchelonPattern) -> bool:
    """
    A pattern member classifies into one of the pattern's strata: the
    quadruple degenerates to a pinned pair, the opposite-side class has the
    pattern's pivots, and membership transposes correctly.
    """
    if not in_pattern(a, pat):
        return False
    if not in_pattern(a.transpose(), pat.transposed()):
        return False
    if pat.kind == COLUMN:
        sig = phi_inv(classify_leaf(a))
        t = pat.t
        idt = tuple(range(1, t + 1))
        if sig.v != idt or sig.u != idt or tuple(sig.z[:t]) != pat.pivots:
            return False
        if (sig.y, sig.z) not in stratify_pattern(pat):
            return False
        lower = cells.classify(a, cells.B_MINUS)
        return lower == PartialPerm.from_pairs(pat.rows, t,
                                               ((j, r) for j, r in enumerate(pat.pivots, 1)))
    sig = phi_inv(classify_leaf(a))
    t = pat.t
    idt = tuple(range(1, t + 1))
    if sig.y != idt or sig.z != idt or tuple(sig.v[:t]) != pat.pivots:
        return False
    if (sig.u, sig.v) not in stratify_pattern(pat):
        return False
    upper = cells.classify(a, cells.B_PLUS)
    return upper == PartialPerm.from_pairs(t, pat.cols,
                                           ((c, i) for i, c in enumerate(pat.pivots, 1)))


def check_echelon_stratum(a: RationalMatrix, m: int, t: int, y, z) -> bool:
    """A targeted stratum sample classifies to exactly its stratum."""
    return classify_leaf(a) == phi_to_leaf(column_stratum_sigma(m, t, tuple(y), tuple(z)))


def check_product(c: RationalMatrix, r: RationalMatrix, sig: SigmaTuple) -> bool:
    """A product of matching echelon factors lands in the quadruple's stratum."""
    return classify_leaf(c @ r) == phi_to_leaf(sig)


def check_torus_stability(a: RationalMatrix, pat: EchelonPattern,
                          row_factors, col_factors) -> bool:
    """Row/column scaling by nonzero rationals moves nothing."""
    b = a.scaled(row_factors, col_factors)
    return (in_pattern(a, pat) == in_pattern(b, pat)
            and classify_leaf(a) == classify_leaf(b))


def check_window_vs_bruhat(m: int, n: int) -> bool:
    """The displacement window and the Bruhat test cut out the same index set."""
    base = block_longest(n, m)
    return all(window_ok(w, m, n) == bruhat_leq(base, w) for w in all_perms(m + n))


def check_sigma_count(m: int, n: int, t: int) -> bool:
    return len(enumerate_sigma(m, n, t)) == len(_leaves_by_rank(m, n).get(t, ()))


def check_pp_count(m: int, n: int, t: int) -> bool:
    return (sum(1 for _ in partial_perms(m, n, t)) == count_partial_perms(m, n, t))


def check_phi_roundtrip(sig: SigmaTuple) -> bool:
    return phi_inv(phi_to_leaf(sig)) == sig


def check_leaf_roundtrip(L: LeafIndex) -> bool:
    return phi_to_leaf(phi_inv(L)) == L


def check_phi_lock(m: int, n: int) -> bool:
    """The pinned example: the quadruple of the index (6,2,3,5,4,1) in S_6."""
    if (m, n) != (3, 3):
        return True
    sig = phi_inv(LeafIndex.from_w((6, 2, 3, 5, 4, 1), 3, 3))
    return sig == SigmaTuple((3, 1, 2), (1, 3, 2), (1, 2, 3), (3, 1, 2), 1)


@lru_cache(maxsize=None)
def _leaves_by_rank(m: int, n: int) -> dict[int, tuple[LeafIndex, ...]]:
    out: dict[int, list[LeafIndex]] = {}
    for L in _leaves(m, n):
        out.setdefault(L.t, []).append(L)
    return {t: tuple(v) for t, v in out.items()}


# ---------------------------------------------------------------------------
# Replay


def replay(payload: dict) -> bool:
    """
    Re-run the check named in a counterexample payload on its embedded
    inputs; returns whether the check passes now.  A genuine counterexample
    returns ``False``, bit-exactly reproducing the failure.
    """
    kind = payload["check"]
    m, n = payload.get("m", 0), payload.get("n", 0)
    if kind == "unique_membership":
        return check_unique_membership(from_text(payload["matrix"]), _leaves(m, n))
    if kind == "classify_equiv":
        return check_classify_equiv(from_text(payload["matrix"]), _leaves(m, n))
    if kind == "closure_order":
        return check_closure_order(from_text(payload["matrix"]), _leaves(m, n))
    if kind == "block_classes":
        return check_block_classes(from_text(payload["matrix"]))
    if kind == "sigma_in_double_cell":
        return check_sigma_in_double_cell(from_text(payload["matrix"]))
    if kind == "criteria_agreement":
        return check_criteria_agreement(DoubleCellIndex(
            parse_partial(payload["w1"]), parse_partial(payload["w2"])))
    if kind == "dense_orbit":
        return check_dense_orbit(DoubleCellIndex(
            parse_partial(payload["w1"]), parse_partial(payload["w2"])))
    if kind == "echelon_member":
        return check_echelon_member(from_text(payload["matrix"]),
                                    parse_pattern(payload["pattern"]))
    if kind == "echelon_stratum":
        return check_echelon_stratum(from_text(payload["matrix"]), m, payload["t"],
                                     tuple(payload["y"]), tuple(payload["z"]))
    if kind == "echelon_product":
        return check_product(from_text(payload["c"]), from_text(payload["r"]),
                             SigmaTuple.from_dict(payload["sigma"]))
    if kind == "torus_stability":
        return check_torus_stability(from_text(payload["matrix"]),
                                     parse_pattern(payload["pattern"]),
                                     [int(f) for f in payload["row_factors"]],
                                     [int(f) for f in payload["col_factors"]])
    if kind == "window_vs_bruhat":
        return check_window_vs_bruhat(m, n)
    if kind == "sigma_count":
        return check_sigma_count(m, n, payload["t"])
    if kind == "pp_count":
        return check_pp_count(m, n, payload["t"])
    if kind == "phi_roundtrip":
        return check_phi_roundtrip(SigmaTuple.from_dict(payload["sigma"]))
    if kind == "leaf_roundtrip":
        return check_leaf_roundtrip(LeafIndex.from_dict(payload["leaf"]))
    if kind == "phi_injective":
        sigs = enumerate_sigma(m, n, payload["t"])
        return len({phi(s) for s in sigs}) == len(sigs)
    if kind == "phi_lock":
        return check_phi_lock(m, n)
    if kind == "orbit_partition":
        return _orbit_partition_ok(m, n)
    raise ValueError(f"unknown check {kind!r}")


def _orbit_partition_ok(m: int, n: int) -> bool:
    hit: list = []
    for t in range(min(m, n) + 1):
        pps = list(partial_perms(m, n, t))
        for w1 in pps:
            for w2 in pps:
                d = DoubleCellIndex(w1, w2)
                if is_nonempty(d):
                    hit.extend(phi_to_leaf(s).w for s in decompose(d))
    return sorted(hit) == sorted(L.w for L in _leaves(m, n))


# ---------------------------------------------------------------------------
# Sample generation


def _zero_row(x: RationalMatrix, i: int) -> RationalMatrix:
    return RationalMatrix([[0] * x.cols if r == i else list(row)
                           for r, row in enumerate(x.entries)])


def _zero_col(x: RationalMatrix, j: int) -> RationalMatrix:
    return RationalMatrix([[0 if c == j else e for c, e in enumerate(row)]
                           for row in x.entries])


def _zero_entry(x: RationalMatrix, i: int, j: int) -> RationalMatrix:
    return RationalMatrix([[0 if (r, c) == (i, j) else e for c, e in enumerate(row)]
                           for r, row in enumerate(x.entries)])


def sample_stream(m: int, n: int, count: int, rng: random.Random):
    """Rank-rotating matrix stream with random degenerations layered on top."""
    tmax = min(m, n)
    for i in range(count):
        x = sample_rank(m, n, i % (tmax + 1), rng)
        style = rng.random()
        if style < 0.15 and m > 1:
            x = _zero_row(x, rng.randrange(m))
        elif style < 0.3 and n > 1:
            x = _zero_col(x, rng.randrange(n))
        elif style < 0.45:
            for _ in range(rng.randint(1, max(1, m * n // 3))):
                x = _zero_entry(x, rng.randrange(m), rng.randrange(n))
        yield x


# ---------------------------------------------------------------------------
# Campaign bodies


@dataclass
class _Tally:
    attempted: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexamples: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def record(self, ok: bool, payload: dict) -> None:
        self.attempted += 1
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.counterexamples.append(payload)

    def skip(self, note: Optional[dict] = None) -> None:
        self.attempted += 1
        self.skipped += 1
        if note is not None:
            self.info.setdefault("skips", []).append(note)

    def bump(self, key: str, amount: int = 1) -> None:
        self.info[key] = self.info.get(key, 0) + amount


def _matrix_checks_stream(campaign: str, m: int, n: int, count: int,
                          stream_seed: int) -> _Tally:
    rng = random.Random(stream_seed)
    tally = _Tally()
    leaf_list = _leaves(m, n)
    exhaustive = len(leaf_list) <= _EXHAUSTIVE_LIMIT
    for x in sample_stream(m, n, count, rng):
        payload = {"check": None, "m": m, "n": n, "matrix": x.to_text()}
        if campaign == "partition":
            if exhaustive:
                ok = check_unique_membership(x, leaf_list)
            else:
                L0 = classify_leaf(x)
                tables = leaf_profile(x)
                others = rng.sample(leaf_list, _OTHERS_PER_SAMPLE)
                ok = (in_leaf(x, L0, "cell", tables)
                      and all(in_leaf(x, L, "cell", tables) == (L == L0) for L in others))
            payload["check"] = "unique_membership"
        elif campaign == "thm42_equiv":
            if exhaustive:
                ok = check_classify_equiv(x, leaf_list)
            else:
                L0 = classify_leaf(x)
                tables = leaf_profile(x)
                subset = rng.sample(leaf_list, _OTHERS_PER_SAMPLE) + [L0]
                ok = all(in_leaf(x, L, "cell", tables) == (L == L0) for L in subset)
            payload["check"] = "classify_equiv"
        elif campaign == "closure_order":
            subset = leaf_list if exhaustive else \
                rng.sample(leaf_list, _OTHERS_PER_SAMPLE) + [classify_leaf(x)]
            ok = check_closure_order(x, subset)
            payload["check"] = "closure_order"
        elif campaign == "lemma75_blocks":
            ok = check_block_classes(x)
            payload["check"] = "block_classes"
        else:  # pragma: no cover
            raise ValueError(campaign)
        tally.record(ok, payload)
        tally.bump(f"rank_{classify_leaf(x).t}")
    return tally


def _run_phi_bijection(m: int, n: int, tally: _Tally) -> None:
    for t in range(min(m, n) + 1):
        sigs = enumerate_sigma(m, n, t)
        leaves_t = _leaves_by_rank(m, n).get(t, ())
        tally.record(len(sigs) == len(leaves_t),
                     {"check": "sigma_count", "m": m, "n": n, "t": t})
        tally.record(len({phi(s) for s in sigs}) == len(sigs),
                     {"check": "phi_injective", "m": m, "n": n, "t": t})
        for s in sigs:
            tally.record(check_phi_roundtrip(s),
                         {"check": "phi_roundtrip", "m": m, "n": n,
                          "sigma": s.to_dict()})
        for L in leaves_t:
            tally.record(check_leaf_roundtrip(L),
                         {"check": "leaf_roundtrip", "m": m, "n": n,
                          "leaf": L.to_dict()})
        tally.bump(f"sigma_count_{t}", len(sigs))
    tally.record(check_phi_lock(m, n), {"check": "phi_lock", "m": m, "n": n})


def _run_counts(m: int, n: int, tally: _Tally) -> None:
    tally.record(check_window_vs_bruhat(m, n),
                 {"check": "window_vs_bruhat", "m": m, "n": n})
    for t in range(min(m, n) + 1):
        tally.record(check_sigma_count(m, n, t),
                     {"check": "sigma_count", "m": m, "n": n, "t": t})
        tally.record(check_pp_count(m, n, t),
                     {"check": "pp_count", "m": m, "n": n, "t": t})
        tally.info[f"leaves_rank_{t}"] = len(_leaves_by_rank(m, n).get(t, ()))
    tally.info["leaf_count"] = len(_leaves(m, n))


def _run_echelon(m: int, n: int, samples: int, seed: int, tally: _Tally) -> None:
    rng = random.Random(derive_seed(seed, 0))
    per_pattern = max(3, samples // 50)
    for t in range(1, min(m, n) + 1):
        for side, long_dim in ((COLUMN, m), (ROW, n)):
            for pat in all_patterns(side, long_dim, t):
                strata = stratify_pattern(pat)
                for k in range(per_pattern):
                    zp = 0.0 if k % 2 == 0 else 0.4
                    if pat.kind == COLUMN:
                        a = sample_echelon_col(pat.rows, t, pat.pivots, rng, zp)
                    else:
                        a = sample_echelon_row(t, pat.cols, pat.pivots, rng, zp)
                    tally.record(check_echelon_member(a, pat),
                                 {"check": "echelon_member", "m": pat.rows,
                                  "n": pat.cols, "matrix": a.to_text(),
                                  "pattern": pat.literal()})
                rf = [_rand_nonzero(rng) for _ in range(pat.rows)]
                cf = [_rand_nonzero(rng) for _ in range(pat.cols)]
                a = (sample_echelon_col(pat.rows, t, pat.pivots, rng)
                     if pat.kind == COLUMN else
                     sample_echelon_row(t, pat.cols, pat.pivots, rng))
                tally.record(check_torus_stability(a, pat, rf, cf),
                             {"check": "torus_stability", "m": pat.rows,
                              "n": pat.cols, "matrix": a.to_text(),
                              "pattern": pat.literal(),
                              "row_factors": [str(f) for f in rf],
                              "col_factors": [str(f) for f in cf]})
                if pat.kind == COLUMN:
                    for (y, z) in strata:
                        a = sample_column_stratum(pat.rows, t, y, z, rng)
                        if a is None:
                            tally.skip({"stratum": [list(y), list(z)],
                                        "pattern": pat.literal()})
                            continue
                        tally.record(check_echelon_stratum(a, pat.rows, t, y, z),
                                     {"check": "echelon_stratum", "m": pat.rows,
                                      "n": t, "t": t, "y": list(y), "z": list(z),
                                      "matrix": a.to_text()})
    # product tests across full quadruples
    for t in range(min(m, n) + 1):
        sigs = enumerate_sigma(m, n, t)
        budget = min(len(sigs), max(4, samples // 25))
        for sig in (sigs if len(sigs) <= budget else rng.sample(sigs, budget)):
            if t == 0:
                tally.record(classify_leaf(RationalMatrix.zero(m, n)) == phi_to_leaf(sig),
                             {"check": "classify_equiv", "m": m, "n": n,
                              "matrix": RationalMatrix.zero(m, n).to_text()})
                continue
            c = sample_column_stratum(m, t, sig.y, sig.z, rng)
            r = sample_row_stratum(t, n, sig.u, sig.v, rng)
            if c is None or r is None:
                tally.skip({"product_sigma": sig.to_dict()})
                continue
            tally.record(check_product(c, r, sig),
                         {"check": "echelon_product", "m": m, "n": n,
                          "c": c.to_text(), "r": r.to_text(),
                          "sigma": sig.to_dict()})
    tally.bump("patterns_covered",
               sum(len(all_patterns(COLUMN, m, t)) + len(all_patterns(ROW, n, t))
                   for t in range(1, min(m, n) + 1)))


def _run_double_cells(m: int, n: int, samples: int, seed: int, tally: _Tally) -> None:
    rng = random.Random(derive_seed(seed, 0))
    leaf_list = _leaves(m, n)
    for t in range(min(m, n) + 1):
        pps = list(partial_perms(m, n, t))
        for w1 in pps:
            for w2 in pps:
                d = DoubleCellIndex(w1, w2)
                tally.record(check_criteria_agreement(d, leaf_list),
                             {"check": "criteria_agreement", "m": m, "n": n,
                              "w1": w1.literal(), "w2": w2.literal()})
                if is_nonempty(d):
                    tally.record(check_dense_orbit(d),
                                 {"check": "dense_orbit", "m": m, "n": n,
                                  "w1": w1.literal(), "w2": w2.literal()})
    tally.record(_orbit_partition_ok(m, n),
                 {"check": "orbit_partition", "m": m, "n": n})
    for x in sample_stream(m, n, samples, rng):
        tally.record(check_sigma_in_double_cell(x),
                     {"check": "sigma_in_double_cell", "m": m, "n": n,
                      "matrix": x.to_text()})


def _stream_worker(job: tuple) -> _Tally:
    campaign, m, n, count, stream_seed = job
    return _matrix_checks_stream(campaign, m, n, count, stream_seed)


def _merge_info(dst: dict, src: dict) -> None:
    for k, v in src.items():
        if isinstance(v, int) and isinstance(dst.get(k, 0), int):
            dst[k] = dst.get(k, 0) + v
        elif isinstance(v, list):
            dst.setdefault(k, []).extend(v)
        else:
            dst[k] = v


def run(campaign: str, m: int, n: int, samples: int = 1000, seed: int = 0,
        threads: Optional[int] = None) -> VerificationReport:
    """Execute one campaign and return its report (deterministic given the seed)."""
    if campaign not in CAMPAIGNS:
        raise ValueError(f"unknown campaign {campaign!r}; choose from {CAMPAIGNS}")
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    threads = resolve_threads(threads)
    report = VerificationReport(campaign, {"m": m, "n": n, "samples": samples,
                                           "seed": seed})
    start = time.perf_counter()
    if campaign in _SAMPLING:
        specs = []
        remaining, stream = samples, 0
        while remaining > 0:
            count = min(_STREAM_CHUNK, remaining)
            specs.append((campaign, m, n, count, derive_seed(seed, stream)))
            remaining -= count
            stream += 1
        if threads > 1 and len(specs) > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                tallies = list(pool.map(_stream_worker, specs))
        else:
            tallies = [_stream_worker(s) for s in specs]
    else:
        tally = _Tally()
        if campaign == "phi_bijection":
            _run_phi_bijection(m, n, tally)
        elif campaign == "counts":
            _run_counts(m, n, tally)
        elif campaign == "echelon_strata":
            _run_echelon(m, n, samples, seed, tally)
        elif campaign == "double_cells":
            _run_double_cells(m, n, samples, seed, tally)
        tallies = [tally]
    for t in tallies:
        report.attempted += t.attempted
        report.passed += t.passed
        report.failed += t.failed
        report.skipped += t.skipped
        report.counterexamples.extend(t.counterexamples)
        _merge_info(report.info, t.info)
    report.wall_time = time.perf_counter() - start
    return report
