import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from partbase.core import (CodeSet, ColumnPerm, DomainError, Params, RegularPartition,
                           RegularityError, ShapeError, codeset_to_partitions,
                           count_regular_partitions, partitions_to_codeset)
from partbase.constructions import construct_maincase, paper_8_3_partitions
from partbase.search import all_regular_partitions, random_regular_partition
from partbase.verifier import is_alt_base, is_sym_base


def test_params():
    assert Params(3, 4).n == 12
    assert not Params(2, 2).faithful and Params(2, 3).faithful
    with pytest.raises(DomainError):
        Params(1, 3)


def test_partition_canonical_order_and_errors():
    p = RegularPartition([[3, 2], [0, 1]])
    assert p.parts == ((0, 1), (2, 3))
    assert list(p.labels) == [0, 0, 1, 1]
    with pytest.raises(ShapeError):
        RegularPartition([[0, 1], [1, 2]])
    with pytest.raises(ShapeError):
        RegularPartition([[0, 1, 2], [3]])
    with pytest.raises(ShapeError):
        RegularPartition([[0, 5], [1, 2]])


def test_single_partition_codeset():
    N = partitions_to_codeset([RegularPartition([[0, 1], [2, 3]])])
    assert N.tuples() == [(0,), (0,), (1,), (1,)]


def test_paper_triple_codeset():
    N = partitions_to_codeset(paper_8_3_partitions())
    assert len(N) == 24
    assert N.regular_size() == 8 and N.width == 3 and N.b == 3
    # points 1 and 8 of the published numbering share a part in all three partitions
    assert len(N.distinct()) == 23
    words, mult = N.multiplicities()
    assert [tuple(w) for w in words[mult == 2]] == [(0, 0, 0)]


def test_identical_partitions_give_diagonal():
    p = RegularPartition([[0, 1, 2], [3, 4, 5]])
    N = partitions_to_codeset([p, p])
    assert all(w[0] == w[1] for w in N.tuples())
    assert list(N.multiplicities()[1]) == [3, 3]


def test_mismatched_shapes():
    with pytest.raises(ShapeError):
        partitions_to_codeset([RegularPartition([[0, 1], [2, 3]]), RegularPartition([[0], [1], [2], [3]])])
    with pytest.raises(ShapeError):
        partitions_to_codeset([])


def test_codeset_validation():
    with pytest.raises(ShapeError):
        CodeSet(np.array([[0, 3]]), 3)
    N = CodeSet.from_words([(1, 0), (0, 1), (0, 1)], 2)
    assert N.tuples() == [(0, 1), (0, 1), (1, 0)]
    assert N.has_duplicates() and len(N.distinct()) == 2
    assert not N.is_regular()


def test_full_cube_to_partitions():
    N = CodeSet(list(itertools.product(range(2), repeat=2)), 2)
    ps = codeset_to_partitions(N)
    assert len(ps) == 2 and all((p.a, p.b) == (2, 2) for p in ps)
    assert partitions_to_codeset(ps) == N


def test_maincase_to_partitions():
    ps = codeset_to_partitions(construct_maincase(3, 1, 1, 0))
    assert len(ps) == 3 and all((p.a, p.b, p.n) == (3, 3, 9) for p in ps)


def test_irregular_codeset_rejected():
    N = CodeSet.from_words([(0,), (0,), (0,), (1,)], 2)
    with pytest.raises(RegularityError):
        codeset_to_partitions(N)


@pytest.mark.parametrize("a,b,expected", [(2, 3, 15), (3, 3, 280), (1, 5, 1)])
def test_count_examples(a, b, expected):
    assert count_regular_partitions(a, b) == expected


def test_count_matches_enumeration():
    for a in range(1, 6):
        for b in range(1, 6):
            if a * b <= 10:
                assert count_regular_partitions(a, b) == sum(1 for _ in all_regular_partitions(a, b))


def test_count_is_exact_for_large_values():
    from math import factorial
    big = count_regular_partitions(100, 10)
    assert big > 2 ** 64
    assert big * factorial(100) ** 10 * factorial(10) == factorial(1000)


def test_column_perm_algebra():
    g = ColumnPerm(((1, 2, 0), (0, 2, 1)))
    assert g.then(g.inverse()).is_identity()
    assert g.apply_word((0, 1)) == (1, 2)


shapes = st.sampled_from([(a, b) for a in range(2, 6) for b in range(2, 6)])


@settings(max_examples=60, deadline=None)
@given(shape=shapes, count=st.integers(1, 4), seed=st.integers(0, 2 ** 32 - 1))
def test_round_trip_preserves_multiset(shape, count, seed):
    rng = np.random.default_rng(seed)
    ps = [random_regular_partition(*shape, rng) for _ in range(count)]
    N = partitions_to_codeset(ps)
    assert N.is_regular(shape[0])
    assert partitions_to_codeset(codeset_to_partitions(N)) == N


@settings(max_examples=60, deadline=None)
@given(shape=shapes, count=st.integers(1, 4), seed=st.integers(0, 2 ** 32 - 1))
def test_base_tests_invariant_under_point_relabelling(shape, count, seed):
    rng = np.random.default_rng(seed)
    ps = [random_regular_partition(*shape, rng) for _ in range(count)]
    perm = rng.permutation(shape[0] * shape[1])
    qs = [p.relabel_points(perm) for p in ps]
    assert bool(is_sym_base(ps)) == bool(is_sym_base(qs))
    assert bool(is_alt_base(ps)) == bool(is_alt_base(qs))
