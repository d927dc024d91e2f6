import random
from math import factorial

import numpy as np
import pytest

from oracles import count_syt, s3_table
from symcoef.characters import (
    an_character,
    border_strips,
    char_interval,
    character_table,
    maximal_runs,
    memo_stats,
    mn_character,
    raw_table,
    set_memo_limit,
)
from symcoef.errors import DomainError
from symcoef.partitions import class_sizes, conjugate, gen_partitions, z_factor


def test_border_strips_of_hook():
    assert border_strips((2, 1), 3) == [((), 1)]
    assert sorted(border_strips((2, 1), 1)) == [((1, 1), 0), ((2,), 0)]
    assert border_strips((2, 2), 3) == [((1,), 1)]
    assert sorted(border_strips((2, 2), 2)) == [((1, 1), 1), ((2,), 0)]
    # the whole square contains a 2x2 block
    assert border_strips((2, 2), 4) == []


def test_spot_values():
    assert mn_character((5,), (2, 2, 1)) == 1
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((4, 1), (2, 1, 1, 1)) == 2
    assert mn_character((1,) * 5, (2, 1, 1, 1)) == -1


def test_unsorted_cycle_type_accepted():
    assert mn_character((3, 1), (1, 2, 1)) == mn_character((3, 1), (2, 1, 1))


def test_size_mismatch():
    with pytest.raises(DomainError, match="incompatible sizes"):
        mn_character((2, 1), (2,))


def test_s3_against_permutation_representation():
    oracle = s3_table()
    table = character_table(3)
    assert table.rows == ((3,), (2, 1), (1, 1, 1))
    for lam in table.rows:
        for mu in table.columns:
            assert table(lam, mu) == oracle[tuple(lam)][tuple(mu)]
    assert [table(lam, (1, 1, 1)) for lam in table.rows] == [1, 2, 1]


def test_trivial_table():
    assert character_table(1).values.tolist() == [[1]]
    assert character_table(0).values.tolist() == [[1]]


@pytest.mark.parametrize("n", range(1, 11))
def test_table_agrees_with_recursive_evaluator(n):
    table = raw_table(n)
    parts = gen_partitions(n)
    rng = random.Random(n)
    for _ in range(40):
        a, b = rng.randrange(len(parts)), rng.randrange(len(parts))
        assert table[a, b] == mn_character(parts[a], parts[b])


@pytest.mark.parametrize("n", range(1, 9))
def test_row_and_column_orthogonality(n):
    values = raw_table(n).astype(object)
    sizes = np.array(class_sizes(n), dtype=object)
    gram = (values * sizes).dot(values.T)
    assert (gram == np.diag([factorial(n)] * len(sizes))).all()
    col = values.T.dot(values)
    assert (col == np.diag([z_factor(mu) for mu in gen_partitions(n)])).all()


@pytest.mark.parametrize("n", range(1, 9))
def test_dimensions_are_syt_counts(n):
    table = character_table(n)
    for lam in table.rows:
        assert table(lam, (1,) * n) == count_syt(lam) > 0
        assert table((n,), lam) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_sign_twist(n):
    table = character_table(n)
    for lam in table.rows:
        for mu in table.columns:
            assert table(conjugate(lam), mu) == (-1) ** (n - len(mu)) * table(lam, mu)


@pytest.mark.parametrize("n", range(2, 11))
def test_defining_character(n):
    for mu in gen_partitions(n):
        assert mn_character((n - 1, 1), mu) == mu.count(1) - 1


def test_big_integer_mode_matches_int64():
    from symcoef import characters

    small = raw_table(9)
    saved = characters._int64_safe
    try:
        characters._int64_safe = lambda n: False
        characters.clear_table_cache()
        big = raw_table(9)
        assert big.dtype == object
        assert (big == small.astype(object)).all()
    finally:
        characters._int64_safe = saved
        characters.clear_table_cache()


def test_memo_limit_bounds_cache():
    set_memo_limit(50)
    try:
        mn_character((6, 4, 2), (3, 3, 2, 2, 1, 1))
        assert memo_stats()["entries"] <= 50
        assert mn_character((4, 1), (2, 1, 1, 1)) == 2
    finally:
        set_memo_limit(1 << 20)


def test_maximal_runs():
    assert maximal_runs([3, -1, 0, 1, 5, 6]) == [(-1, 1), (3, 3), (5, 6)]


def test_interval_small():
    report = char_interval(7)
    assert report.longest_run == (-6, 6)
    assert report.run_through_zero == (-6, 6)
    assert report.l_n == 13
    doc = report.to_json()
    assert set(doc) == {"n", "l_n", "longest_run", "run_through_zero", "value_set"}
    assert char_interval(1).run_through_zero is None


def test_interval_containment_from_n7():
    for n in range(7, 13):
        values = char_interval(n).value_set
        assert set(range(-(n - 5), n - 1)) <= values


def test_defining_character_misses_n_minus_2():
    # no partition of n has exactly n-1 parts equal to 1
    for n in range(3, 11):
        assert n - 2 not in {mn_character((n - 1, 1), mu) for mu in gen_partitions(n)}


def test_an_character_examples():
    assert an_character((4, 1), (2, 2, 1)) == 0
    assert an_character((5,), (1,) * 5) == 1
    with pytest.raises(DomainError, match="split restriction"):
        an_character((2, 1), (1, 1, 1))
    with pytest.raises(DomainError, match="class splits"):
        an_character((4, 1), (5,))
    with pytest.raises(DomainError, match="not an A_n class"):
        an_character((4, 1), (2, 1, 1, 1))
