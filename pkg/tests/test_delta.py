import pytest

from deltaq.delta import (
    delta_prime_elem_t0,
    delta_prime_schur_t0,
    delta_qdegree,
    delta_result,
    delta_unprimed_schur_t0,
    grfrob_R_nnu,
    grfrob_V,
    lemma41_rhs,
    p_coeff,
    prop51_lhs,
    prop51_rhs,
    prop52_check,
    prop52_lhs,
    rev_omega_delta,
    simple2_rhs,
    theorem12_rhs,
)
from deltaq.errors import RangeError
from deltaq.osp import c_via_qprime, d_poly
from deltaq.partitions import enumerate_partitions
from deltaq.qarith import ONE, Q, q_int
from deltaq.symfun import SymFunc, bisym_product, bisym_y_coefficient, elementary, omega, qprime
from deltaq.tableaux import principal_spec_schur

s = SymFunc.schur


class TestDeltaPrimeSchur:
    def test_empty_nu_is_identity(self):
        assert delta_prime_schur_t0((), 2) == s((1, 1))
        for n in range(1, 6):
            assert delta_prime_schur_t0((), n) == elementary(n)

    def test_small_values(self):
        assert delta_prime_schur_t0((1,), 2) == s((2,)) + s((1, 1), Q)
        assert delta_prime_schur_t0((2,), 2) == s((2,), Q) + s((1, 1), Q ** 2)

    def test_range(self):
        with pytest.raises(RangeError):
            delta_prime_schur_t0((1,), 0)

    def test_vanishes_when_nu_too_long(self):
        # s_nu in l(mu)-1 <= n-1 variables vanishes once l(nu) >= n
        assert delta_prime_schur_t0((1, 1), 2).is_zero()

    def test_degree_claim_and_positivity(self):
        for size in range(5):
            for nu in enumerate_partitions(size):
                for n in range(1, 7):
                    result = delta_result(nu, n)
                    assert result.degree_claim_holds
                    assert result.value.is_schur_positive()
                    assert delta_unprimed_schur_t0(nu, n).is_schur_positive()


class TestDeltaPrimeElem:
    def test_examples(self):
        assert delta_prime_elem_t0(1, 2) == s((1, 1))
        assert delta_prime_elem_t0(2, 2) == s((2,)) + s((1, 1), Q)
        assert delta_prime_elem_t0(1, 1) == s((1,))

    def test_range(self):
        with pytest.raises(RangeError):
            delta_prime_elem_t0(3, 2)

    def test_equals_c(self):
        for n in range(1, 6):
            for k in range(1, n + 1):
                assert delta_prime_elem_t0(k, n) == c_via_qprime(n, k)

    def test_lemma41_examples(self):
        assert lemma41_rhs(2, 2) == d_poly(2, 2)
        assert lemma41_rhs(1, 1) == s((1,))
        assert lemma41_rhs(1, 2) == s((1, 1))


class TestHallLittlewoodSide:
    def test_p_coeff_examples(self):
        assert p_coeff((1,), 2) == ONE
        assert p_coeff((2,), 2) == Q
        assert p_coeff((2,), 3) == Q
        with pytest.raises(RangeError):
            p_coeff((2,), 1)

    def test_theorem12_examples(self):
        for n in range(1, 6):
            assert theorem12_rhs((), n) == s((n,))
        assert theorem12_rhs((2,), 2) == qprime((1, 1)) * Q
        assert theorem12_rhs((1,), 2) == omega(c_via_qprime(2, 2))

    def test_theorem12_matches_delta(self):
        for size in range(4):
            for nu in enumerate_partitions(size):
                for n in range(1, 6):
                    assert omega(delta_prime_schur_t0(nu, n)) == theorem12_rhs(nu, n)


class TestUnprimed:
    def test_examples(self):
        assert delta_unprimed_schur_t0((), 3) == delta_prime_schur_t0((), 3)
        assert delta_unprimed_schur_t0((1,), 2) == s((2,)) + s((1, 1), Q) + s((1, 1))
        assert delta_unprimed_schur_t0((1, 1), 2) == (
            delta_prime_schur_t0((1, 1), 2) + delta_prime_schur_t0((1,), 2))


class TestSimple2:
    def test_examples(self):
        for j in range(6):
            assert simple2_rhs((1,), j) == q_int(j)
        assert simple2_rhs((1, 1), 2) == Q
        assert simple2_rhs((2,), 1) == ONE
        assert simple2_rhs((), 3) == ONE

    def test_matches_principal_specialisation(self):
        for size in range(5):
            for nu in enumerate_partitions(size):
                for j in range(6):
                    assert simple2_rhs(nu, j) == principal_spec_schur(nu, j, 0)


class TestTwoAlphabets:
    def test_prop51_examples(self):
        assert prop51_lhs(0, 2) == bisym_product(s(()), s((2,)))
        lhs = prop51_lhs(1, 2)
        assert bisym_y_coefficient(lhs, (1,)) == s((1, 1)) + s((2,), Q)
        lhs = prop51_lhs(2, 2)
        for nu in enumerate_partitions(2):
            assert bisym_y_coefficient(lhs, nu) == theorem12_rhs(nu, 2)

    def test_prop51(self):
        for m in range(4):
            for n in range(1, 5):
                assert prop51_lhs(m, n) == prop51_rhs(m, n)

    def test_prop52(self):
        assert prop52_lhs(0, 1) == bisym_product(s(()), s((1,)))
        for m in range(4):
            for n in range(1, 5):
                lhs, rhs = prop52_check(m, n)
                assert lhs == rhs

    def test_grfrob_v(self):
        assert grfrob_V(1, 0) == bisym_product(s(()), s((1,)))
        for m in range(3):
            for n in range(1, 4):
                for _, c in grfrob_V(n, m).items():
                    assert c.is_polynomial() and c.has_nonnegative_integer_coeffs()

    def test_grfrob_r_examples(self):
        assert grfrob_R_nnu((), 2) == s((2,))
        assert grfrob_R_nnu((1,), 2) == s((2,)) + s((1, 1), Q)

    def test_grfrob_r_matches_reversed_delta(self):
        for size in range(4):
            for nu in enumerate_partitions(size):
                for n in range(1, 6):
                    r = grfrob_R_nnu(nu, n)
                    assert r == rev_omega_delta(nu, n)
                    assert r.is_schur_positive()

    def test_delta_qdegree(self):
        assert delta_qdegree((2, 1), 3) == 2 * 3 - 1
