import pytest

from deltaq.errors import RangeError, SizeMismatchError
from deltaq.osp import (
    OrderedSetPartition,
    c_via_osp,
    c_via_qprime,
    d_poly,
    enumerate_osp,
    fundamental_qsym_expand,
    ides,
    inv,
    reading_word,
    shuffle_inner,
    shuffle_inner_via_schur,
)
from deltaq.partitions import compositions
from deltaq.qarith import ONE, Q, QLaurent
from deltaq.symfun import SymFunc, complete, elementary, expand_in_vars, omega, qprime

from oracles import osp_count

s = SymFunc.schur
WORKED = OrderedSetPartition([(2, 7), (1, 3, 5), (4, 6)])


def brute_inv(sigma):
    where = {x: b for b, block in enumerate(sigma) for x in block}
    return sum(
        1
        for i in where
        for j in where
        if i < j and i == min(sigma[where[i]]) and where[i] > where[j]
    )


class TestOrderedSetPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            OrderedSetPartition([(1,), (3,)])
        with pytest.raises(ValueError):
            OrderedSetPartition([(1,), ()])

    def test_str(self):
        assert str(WORKED) == "(27 | 135 | 46)"

    def test_enumerate_examples(self):
        assert enumerate_osp(2, 1) == [((1, 2),)]
        assert sorted(enumerate_osp(2, 2)) == [((1,), (2,)), ((2,), (1,))]
        assert len(enumerate_osp(3, 2)) == 6

    def test_enumerate_counts(self):
        for n in range(1, 8):
            for k in range(1, n + 1):
                assert len(enumerate_osp(n, k)) == osp_count(n, k)

    def test_range(self):
        with pytest.raises(RangeError):
            enumerate_osp(2, 3)


class TestStatistics:
    def test_inv_examples(self):
        assert inv(WORKED) == 4
        assert inv([(1,), (2,)]) == 0
        assert inv([(2,), (1,)]) == 1

    def test_inv_matches_pairwise_definition(self):
        for n in range(1, 6):
            for k in range(1, n + 1):
                for sigma in enumerate_osp(n, k):
                    assert inv(sigma) == brute_inv(sigma)

    def test_reading_word_examples(self):
        assert reading_word(WORKED) == (5, 7, 3, 6, 2, 1, 4)
        assert reading_word([(1,), (2,)]) == (1, 2)
        for n in range(1, 6):
            assert ides(reading_word([tuple(range(1, n + 1))])) == frozenset(range(1, n))

    def test_ides_examples(self):
        assert ides((2, 1)) == {1}
        assert ides((1, 2, 3, 4)) == set()
        # inverse of 231 is 312, whose only descent is at 1
        assert ides((2, 3, 1)) == {1}
        with pytest.raises(ValueError):
            ides((1, 1))


class TestQuasisymmetric:
    def test_fundamental_examples(self):
        assert fundamental_qsym_expand(2, set(), 2) == {(2, 0): ONE, (1, 1): ONE, (0, 2): ONE}
        assert fundamental_qsym_expand(2, {1}, 2) == {(1, 1): ONE}
        assert fundamental_qsym_expand(1, set(), 1) == {(1,): ONE}
        with pytest.raises(RangeError):
            fundamental_qsym_expand(2, {2}, 2)

    def test_c_via_osp_examples(self):
        assert c_via_osp(2, 1, 2) == expand_in_vars(elementary(2), 2)
        assert c_via_osp(2, 2, 2) == expand_in_vars(complete(2) + elementary(2) * Q, 2)
        assert c_via_osp(1, 1, 1) == {(1,): ONE}

    def test_two_constructions_agree(self):
        for n in range(1, 6):
            for k in range(1, n + 1):
                assert c_via_osp(n, k, n) == expand_in_vars(c_via_qprime(n, k), n)


class TestCAndD:
    def test_c_examples(self):
        assert c_via_qprime(2, 2) == s((2,)) + s((1, 1), Q)
        assert c_via_qprime(2, 1) == s((1, 1))
        for n in range(1, 6):
            assert c_via_qprime(n, n) == omega(qprime((1,) * n))

    def test_c_at_k1_is_e_n(self):
        for n in range(1, 7):
            assert c_via_qprime(n, 1) == elementary(n)

    def test_c_range(self):
        with pytest.raises(RangeError):
            c_via_qprime(2, 3)

    def test_d_examples(self):
        assert d_poly(2, 2) == s((2,)) + s((1, 1), Q)
        assert d_poly(2, 1) == s((2,))
        assert d_poly(1, 1) == s((1,))
        assert d_poly(0, 0) == s(())
        assert d_poly(3, 0).is_zero() and d_poly(3, 4).is_zero()

    def test_d_reversal_never_overflows(self):
        for n in range(1, 8):
            for k in range(1, n + 1):
                d = d_poly(n, k)
                assert d.is_schur_positive()
                assert d.q_low_degree() == 0


class TestShuffles:
    def test_examples(self):
        total = sum((QLaurent.monomial(inv(sigma)) for sigma in enumerate_osp(3, 3)), QLaurent(0))
        assert shuffle_inner(3, 3, (1, 1, 1)) == total
        assert shuffle_inner(2, 1, (2,)) == ONE
        assert shuffle_inner(2, 2, (2,)) == Q

    def test_bad_composition(self):
        with pytest.raises(SizeMismatchError):
            shuffle_inner(3, 2, (1, 1))

    def test_matches_hall_inner_product(self):
        for n in range(1, 6):
            for k in range(1, n + 1):
                for alpha in compositions(n):
                    assert shuffle_inner(n, k, alpha) == shuffle_inner_via_schur(n, k, alpha)
