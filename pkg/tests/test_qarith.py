from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from deltaq.errors import DegreeOverflowError, InexactDivisionError
from deltaq.qarith import (
    ONE,
    Q,
    ZERO,
    QLaurent,
    pochhammer,
    q_binomial,
    q_factorial,
    q_int,
    q_multinomial,
    reverse_coeffs,
)

from oracles import qbinom_pascal


def poly(*coeffs, lo=0):
    return QLaurent.from_coeffs(coeffs, lo)


laurents = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6).map(QLaurent)


class TestQLaurent:
    def test_zero_is_trimmed(self):
        assert QLaurent({3: 0, -2: 0}) == ZERO
        assert ZERO.is_zero()
        assert not ZERO

    def test_scalar_equality(self):
        assert QLaurent(3) == 3
        assert QLaurent({0: Fraction(4, 2)}).coeff(0) == 2
        assert isinstance(QLaurent({0: Fraction(4, 2)}).coeff(0), int)

    def test_degree_and_low_degree(self):
        f = poly(0, 2, 0, 1, lo=-2)
        assert f.low_degree == -1
        assert f.degree == 1
        with pytest.raises(ValueError):
            ZERO.degree

    def test_arithmetic(self):
        assert (ONE + Q) * (ONE - Q) == ONE - Q ** 2
        assert Q.shift(-3) * Q.shift(1) == ONE
        assert 2 - Q == poly(2, -1)
        assert (Q * Fraction(1, 3)).coeff(1) == Fraction(1, 3)

    def test_exact_div(self):
        assert (q_int(6)).exact_div(q_int(3)) == ONE + Q ** 3
        with pytest.raises(InexactDivisionError):
            q_int(5).exact_div(q_int(2))
        with pytest.raises(ZeroDivisionError):
            ONE.exact_div(ZERO)

    def test_evaluate(self):
        f = poly(1, 2, 3, lo=-1)
        assert f.evaluate(2) == Fraction(1, 2) + 2 + 6
        assert f.at_one() == 6

    def test_str(self):
        assert str(poly(1, 1, 2)) == "1 + q + 2q^2"
        assert str(ZERO) == "0"

    def test_json_roundtrip(self):
        f = QLaurent({-2: Fraction(-3, 4), 5: 7})
        assert QLaurent.from_json(f.to_json()) == f
        assert q_binomial(2, 1).to_json() == [[0, "1/1"], [1, "1/1"]]

    def test_json_rejects_unsorted_exponents(self):
        with pytest.raises(ValueError):
            QLaurent.from_json([[1, "1/1"], [0, "1/1"]])

    @given(laurents, laurents, laurents)
    def test_ring_axioms(self, f, g, h):
        assert (f + g) * h == f * h + g * h
        assert f * g == g * f
        assert f - f == ZERO

    @given(laurents, laurents)
    def test_div_undoes_mul(self, f, g):
        if g:
            assert (f * g).exact_div(g) == f


class TestQAnalogs:
    def test_q_int(self):
        assert q_int(0) == ZERO
        assert q_int(1) == ONE
        assert q_int(3) == poly(1, 1, 1)

    def test_q_binomial_examples(self):
        assert q_binomial(2, 1) == poly(1, 1)
        assert q_binomial(4, 2) == poly(1, 1, 2, 1, 1)
        assert q_binomial(3, 5) == ZERO
        assert q_binomial(3, -1) == ZERO

    def test_q_binomial_matches_pascal(self):
        for n in range(13):
            for k in range(-1, n + 2):
                assert q_binomial(n, k) == qbinom_pascal(n, k)

    def test_q_binomial_palindromic_and_symmetric(self):
        for n in range(13):
            for k in range(n + 1):
                b = q_binomial(n, k)
                assert b == q_binomial(n, n - k)
                assert b.is_palindromic()
                assert b.degree == k * (n - k)

    def test_q_multinomial(self):
        assert q_multinomial([1, 1]) == poly(1, 1)
        assert q_multinomial([5]) == ONE
        assert q_multinomial([1, 1, 1]) == poly(1, 2, 2, 1)
        assert q_multinomial([2, 1]) * q_factorial(2) == q_factorial(3)

    def test_pochhammer_examples(self):
        assert pochhammer(1, 2) == (ONE - Q) * (ONE - Q ** 2)
        assert pochhammer(0, 1) == ZERO
        assert pochhammer(-1, 1) == ONE - Q.shift(-2)
        assert pochhammer(7, 0) == ONE

    @given(st.integers(-5, 5), st.integers(0, 4), st.integers(0, 4))
    def test_pochhammer_additivity(self, a, j, k):
        assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)


class TestReverse:
    def test_examples(self):
        assert reverse_coeffs(poly(1, 2, 3), 2) == poly(3, 2, 1)
        assert reverse_coeffs(ONE, 0) == ONE
        assert reverse_coeffs(Q, 3) == Q ** 2

    def test_overflow(self):
        with pytest.raises(DegreeOverflowError):
            reverse_coeffs(Q ** 3, 2)

    @given(st.lists(st.integers(-4, 4), max_size=6), st.integers(0, 3))
    def test_involution(self, coeffs, slack):
        f = poly(*coeffs)
        d = (f.degree if f else 0) + slack
        assert reverse_coeffs(reverse_coeffs(f, d), d) == f
