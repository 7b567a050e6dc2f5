"""Search engine: class index, decompositions, search vs oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psituples import (
    ORACLE_MAX_BOUND,
    SearchConfig,
    brute_force_oracle,
    build_class_index,
    build_sieve,
    decompose_sum_of_powers,
    kind_by_name,
    max_safe_bound,
    search,
    verify_solution,
)
from psituples.search import _descend, _PairSumTable
from psituples.tuples import TupleKind

# Every cubic triple with a <= 200, frozen from a brute-force oracle run and
# cross-checked against the fast path.  The published table lists 28 of
# these; (197, 27, 46) is a genuine unlisted solution (197 is prime, so
# psi(197) = 198, and 198^3 = 197^3 + 27^3 + 46^3).
CUBIC_TRIPLES_TO_200 = [
    (4, 3, 5), (5, 3, 4), (6, 8, 10), (8, 6, 10), (12, 16, 20), (16, 12, 20),
    (18, 24, 30), (24, 32, 40), (25, 15, 20), (32, 24, 40), (36, 48, 60),
    (48, 64, 80), (53, 12, 19), (54, 72, 90), (58, 59, 69), (64, 48, 80),
    (72, 96, 120), (96, 128, 160), (102, 26, 208), (102, 117, 195),
    (108, 144, 180), (116, 118, 138), (118, 116, 138), (125, 75, 100),
    (128, 96, 160), (144, 192, 240), (162, 216, 270), (192, 256, 320),
    (197, 27, 46),
]


# --- class index ------------------------------------------------------------


def test_class_index_frozen_examples():
    idx = build_class_index(build_sieve(25))
    assert idx.classes[36] == [18, 20, 22]  # contains the published pair {18, 22}
    idx = build_class_index(build_sieve(16))
    assert idx.classes[24] == [12, 14, 15, 16]  # contains {14, 16}
    idx = build_class_index(build_sieve(1))
    assert idx.classes == {1: [1]}


def test_class_index_partition(sieve_1k):
    idx = build_class_index(sieve_1k)
    seen = sorted(n for members in idx.classes.values() for n in members)
    assert seen == list(range(1, 1001))
    for v, members in idx.classes.items():
        assert members == sorted(members)
        assert all(sieve_1k.psi_at(n) == v for n in members)


# --- decomposition ----------------------------------------------------------


def test_decompose_examples():
    assert decompose_sum_of_powers(25, 2, 2, 25) == [(3, 4)]
    assert decompose_sum_of_powers(1729, 2, 3, 13) == [(1, 12), (9, 10)]
    assert decompose_sum_of_powers(9, 1, 2, 10) == [(3,)]


def test_decompose_edge_cases():
    assert decompose_sum_of_powers(0, 1, 2, 10) == []
    assert decompose_sum_of_powers(2, 2, 2, 10) == [(1, 1)]
    assert decompose_sum_of_powers(3, 4, 2, 10) == []  # four entries need sum >= 4
    assert decompose_sum_of_powers(4, 4, 2, 10) == [(1, 1, 1, 1)]
    # cap filters otherwise valid decompositions
    assert decompose_sum_of_powers(25, 2, 2, 3) == []


def test_decompose_huge_residual_small_cap():
    # residuals past the int64 envelope must stay on the big-int path
    assert decompose_sum_of_powers(2**100, 4, 2, 10) == []


def test_decompose_rejects_bad_args():
    with pytest.raises(ValueError):
        decompose_sum_of_powers(10, 2, 6, 10)
    with pytest.raises(ValueError):
        decompose_sum_of_powers(10, 0, 2, 10)
    with pytest.raises(ValueError):
        decompose_sum_of_powers(-1, 2, 2, 10)


@settings(max_examples=200)
@given(
    st.integers(min_value=0, max_value=500_000),
    st.sampled_from([1, 2, 3, 4]),
    st.sampled_from([2, 3, 4, 5]),
    st.integers(min_value=1, max_value=60),
)
def test_decompose_exactness_and_uniqueness(residual, count, power, cap):
    tuples = decompose_sum_of_powers(residual, count, power, cap)
    assert len(set(tuples)) == len(tuples)
    assert tuples == sorted(tuples)
    for t in tuples:
        assert len(t) == count
        assert all(1 <= b <= cap for b in t)
        assert list(t) == sorted(t)
        assert sum(b**power for b in t) == residual


def test_mitm_agrees_with_recursive_descent():
    # descent costs about residual**(3/power), so the sweep keeps residuals
    # small for low powers and large where descent stays cheap
    import random

    from psituples.arith import int_kth_root
    from psituples.search import _mitm4

    rng = random.Random(20_240_817)
    ranges = {2: 20_000, 3: 300_000, 4: 3_000_000, 5: 20_000_000}
    for power, top in ranges.items():
        residuals = [rng.randrange(4, top) for _ in range(10)]
        residuals += [4, top, int_kth_root(top, power) ** power]
        for residual in residuals:
            cap = int_kth_root(residual, power)
            if cap < 2:
                continue
            table = _PairSumTable(power, cap)
            via_table = sorted(_mitm4(residual, power, cap, table))
            via_descent: list = []
            _descend(residual, 4, power, 1, cap, (), via_descent)
            assert via_table == via_descent, (power, residual)


# --- search ----------------------------------------------------------------


def test_search_quadratic_pair_empty():
    out = search(SearchConfig(kind_by_name("quadratic-pair"), 10_000))
    assert out == []


def test_search_triples_to_16():
    out = search(SearchConfig(kind_by_name("quadratic-triple"), 16))
    assert [(s.equal_entries + s.free_entries) for s in out] == [
        (2, 2, 1), (4, 4, 2), (8, 8, 4), (16, 16, 8),
    ]


def test_search_cubic_triples_matches_frozen_list():
    out = search(SearchConfig(kind_by_name("cubic-triple"), 200))
    got = [s.equal_entries + s.free_entries for s in out]
    assert got == CUBIC_TRIPLES_TO_200


def test_search_emits_verified_solutions(sieve_1k):
    out = search(SearchConfig(kind_by_name("cubic-quintuple"), 100), sieve=sieve_1k)
    assert out
    for s in out:
        assert verify_solution(s.kind, s.equal_entries, s.free_entries, sieve_1k).ok
        assert s.equal_entries == tuple(sorted(s.equal_entries))
        assert s.free_entries == tuple(sorted(s.free_entries))


def test_oversized_sieve_respects_bound(sieve_1k):
    # a sieve built past the bound must not leak larger equal entries
    for name in ("quadratic-triple", "cubic-triple"):
        cfg = SearchConfig(kind_by_name(name), 64)
        with_big_sieve = search(cfg, sieve=sieve_1k)
        assert with_big_sieve == search(cfg)
        assert all(max(s.equal_entries) <= 64 for s in with_big_sieve)


def test_search_agrees_with_oracle_small():
    for name, bound in [
        ("quadratic-triple", 128),
        ("cubic-triple", 100),
        ("cubic-quadruple", 80),
        ("quadratic-quadruple", 60),
        ("cubic-quintuple", 60),
    ]:
        cfg = SearchConfig(kind_by_name(name), bound)
        assert search(cfg) == brute_force_oracle(cfg), name


def test_search_jobs_do_not_change_output():
    cfg1 = SearchConfig(kind_by_name("cubic-quadruple"), 150, jobs=1)
    cfg2 = SearchConfig(kind_by_name("cubic-quadruple"), 150, jobs=2)
    assert search(cfg1) == search(cfg2)


def test_search_free_entries_unbounded_by_n():
    # (102, 26, 208): the free entry 208 exceeds the bound on a
    out = search(SearchConfig(kind_by_name("cubic-triple"), 110))
    assert (102, 26, 208) in [s.equal_entries + s.free_entries for s in out]


def test_entry_may_repeat_across_classes():
    # (6, 6, 6, 6): equal entries repeat and the free entry equals them
    out = search(SearchConfig(kind_by_name("quadratic-quadruple"), 6))
    assert [(s.equal_entries + s.free_entries) for s in out] == [(6, 6, 6, 6)]


def test_config_validation():
    kind = kind_by_name("quintic-quintuple")
    with pytest.raises(ValueError):
        SearchConfig(kind, 0)
    with pytest.raises(ValueError):
        SearchConfig(kind, 10, jobs=0)
    safe = max_safe_bound(5)
    with pytest.raises(ValueError, match=str(safe)):
        SearchConfig(kind, safe + 1)
    SearchConfig(kind, safe)  # boundary itself is fine


def test_oracle_refuses_large_bounds():
    cfg = SearchConfig(kind_by_name("quadratic-pair"), ORACLE_MAX_BOUND + 1)
    with pytest.raises(ValueError):
        brute_force_oracle(cfg)


def test_oracle_pair_empty_at_ceiling():
    cfg = SearchConfig(kind_by_name("quadratic-pair"), 500)
    assert brute_force_oracle(cfg) == []


def test_generic_kind_searchable():
    # an unnamed (3, 1, 1) kind: psi(a)^3 - a^3 must be a perfect cube
    out = search(SearchConfig(TupleKind(3, 1, 1), 500))
    for s in out:
        assert verify_solution(s.kind, s.equal_entries, s.free_entries).ok


def test_no_cubic_quintuples_hidden_below_930():
    # The published quintuple list jumps from equal-class entries near 96
    # straight to 930.  Settle what lives in between and report it.
    from psituples import TABLES

    out = search(SearchConfig(kind_by_name("cubic-quintuple"), 929, jobs=2))
    found = {s.sort_key() for s in out}
    printed = set()
    for row in TABLES[5].rows:
        equal, free = TABLES[5].split_row(row)
        if max(equal) <= 929:
            printed.add((tuple(sorted(equal)), tuple(sorted(free))))
    assert printed <= found
    extras = sorted(found - printed)
    # the gap is far from empty; (96, 124, 155, 37, 80) is the smallest find
    assert len(extras) == 90
    assert extras[0] == ((96, 124, 155), (37, 80))
    print(f"REPORT: {len(extras)} unlisted cubic quintuples with equal-class "
          f"max <= 929, first {extras[0]}")
