import pytest
from hypothesis import given
from hypothesis import strategies as st

from deltaq.partitions import (
    EMPTY,
    Partition,
    b_stat,
    bbar_stat,
    compositions,
    conjugate,
    dominates,
    enumerate_partitions,
    horizontal_strip_additions,
    horizontal_strip_removals,
    is_horizontal_strip,
    parse_partition,
    vertical_strip_additions,
    vertical_strip_removals,
    weak_compositions,
)

from oracles import partition_count, transpose

partitions = st.integers(0, 9).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


def test_partition_strips_trailing_zeros():
    assert Partition([3, 1, 0, 0]) == (3, 1)
    assert Partition([]) == EMPTY


def test_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_statistics():
    assert b_stat((3, 2)) == 2
    assert b_stat(()) == 0
    assert b_stat((1, 1, 1)) == 3
    assert bbar_stat((3, 2)) == 1
    assert bbar_stat((1, 1)) == 0
    assert bbar_stat((2, 2, 2)) == 3


def test_multiplicities():
    lam = Partition((3, 3, 1))
    assert lam.multiplicities() == (1, 2)
    assert lam.multiplicity(3) == 2
    assert lam.multiplicity(2) == 0


def test_enumerate_examples():
    assert enumerate_partitions(4, 2) == [(3, 1), (2, 2)]
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(3) == [(3,), (2, 1), (1, 1, 1)]


def test_enumerate_counts():
    for n in range(13):
        parts = enumerate_partitions(n)
        assert len(parts) == partition_count(n)
        assert parts == sorted(parts, reverse=True)


def test_conjugate_examples():
    assert conjugate((3, 2)) == (2, 2, 1)
    assert conjugate((1, 1, 1)) == (3,)
    assert conjugate(()) == ()


def test_conjugate_involution_up_to_10():
    for n in range(11):
        for lam in enumerate_partitions(n):
            assert conjugate(conjugate(lam)) == lam
            assert conjugate(lam) == transpose(lam)


def test_dominance():
    assert dominates((2, 1), (1, 1, 1))
    assert not dominates((2, 2), (3, 1))
    assert not dominates((3, 1, 1, 1), (2, 2, 2)) and not dominates((2, 2, 2), (3, 1, 1, 1))


def test_vertical_strip_examples():
    assert vertical_strip_removals((2, 1), 1) == ((2,), (1, 1))
    assert vertical_strip_removals((2, 1), 0) == ((2, 1),)
    assert vertical_strip_removals((1,), 2) == ()


def test_horizontal_strip_examples():
    assert horizontal_strip_removals((2,)) == ((2,), (1,), ())
    assert horizontal_strip_removals((1, 1)) == ((1, 1), (1,))
    assert horizontal_strip_removals(()) == ((),)


@given(partitions, st.integers(0, 4))
def test_vertical_strip_duality(mu, j):
    for lam in vertical_strip_additions(mu, j):
        assert mu in vertical_strip_removals(lam, j)
        assert conjugate(mu) in horizontal_strip_removals(conjugate(lam))


@given(partitions, st.integers(0, 4))
def test_horizontal_strip_additions_are_strips(mu, j):
    for lam in horizontal_strip_additions(mu, j):
        assert lam.size == mu.size + j
        assert is_horizontal_strip(lam, mu)
        assert mu in horizontal_strip_removals(lam)


def test_compositions():
    assert list(weak_compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(compositions(5))) == 16


def test_parse_partition():
    assert parse_partition("3,2,1") == (3, 2, 1)
    assert parse_partition("") == ()
    with pytest.raises(ValueError):
        parse_partition("1,2")
