from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from remmelkit.combinatorics import eulerian_polynomial, word_statistics_polynomial
from remmelkit.errors import DomainError
from remmelkit.homomorphism import (
    EHomomorphism,
    apply_to_h,
    eulerian_closed_form,
    eulerian_phi,
    orderings_count,
    phi_from_json,
    phi_series,
    trivial_phi,
    words_closed_form,
    words_phi,
)
from remmelkit.combinatorics import Partition
from remmelkit.polynomials import MultiPoly, ONE, Q, X, ZERO
from remmelkit.series import geometric
from remmelkit.symfunc import brick_tabloid_count


class TestApplyToH:
    @pytest.mark.parametrize("n", range(0, 8))
    def test_eulerian_oracle(self, n):
        phi = eulerian_phi(max(n, 1))
        assert apply_to_h(phi, n) * factorial(n) == eulerian_polynomial(n)

    def test_degree_two_value(self):
        assert apply_to_h(eulerian_phi(4), 2) == (1 + X) * Fraction(1, 2)

    @pytest.mark.parametrize("k", range(1, 5))
    @pytest.mark.parametrize("n", range(0, 6))
    def test_word_oracle(self, n, k):
        phi = words_phi(k, max(n, 1))
        assert apply_to_h(phi, n) == word_statistics_polynomial(n, k)

    def test_word_degree_one_is_q_count(self):
        assert apply_to_h(words_phi(3, 2), 1) == 1 + Q + Q**2

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            apply_to_h(eulerian_phi(3), 4)

    @given(st.integers(0, 7))
    def test_orderings_count_single_row_bricks(self, n):
        from remmelkit.combinatorics import partitions

        for lam in partitions(n):
            if n:
                assert orderings_count(lam) == brick_tabloid_count(lam, Partition((n,)))


class TestSeries:
    def test_coefficients_match_h_images(self):
        phi = eulerian_phi(7)
        series = phi_series(phi, 7)
        for n in range(8):
            assert series.coeff(n) == apply_to_h(phi, n)

    def test_trivial_phi_gives_geometric(self):
        assert phi_series(trivial_phi(6), 6) == geometric(1, 6)

    def test_eulerian_closed_form(self):
        assert phi_series(eulerian_phi(8), 8) == eulerian_closed_form(8)

    @pytest.mark.parametrize("k", range(1, 5))
    def test_words_closed_form(self, k):
        assert phi_series(words_phi(k, 6), 6) == words_closed_form(k, 6)

    def test_order_beyond_values(self):
        with pytest.raises(DomainError):
            phi_series(trivial_phi(3), 5)


class TestBuiltins:
    def test_eulerian_first_value(self):
        assert eulerian_phi(4).values[1] == ONE

    def test_words_values(self):
        phi = words_phi(2, 4)
        assert phi.values[2] == -Q * (X - 1)
        assert phi.values[3].is_zero()
        assert phi.values[4].is_zero()

    def test_e0_must_be_one(self):
        with pytest.raises(DomainError):
            EHomomorphism((ZERO,))


class TestUserPhi:
    def test_json_roundtrip(self):
        phi = phi_from_json('{"values": ["1", "1", "-1/2*(x-1)"]}')
        assert phi.bound == 2
        assert phi(2) == -(X - 1) * Fraction(1, 2)

    def test_json_validation(self):
        with pytest.raises(DomainError):
            phi_from_json('{"images": []}')
        with pytest.raises(DomainError):
            phi_from_json('{"values": ["2"]}')

    def test_user_phi_through_engine(self):
        # the descent homomorphism, entered by hand, reproduces the same series
        strings = ["1", "1", "-1/2*(x-1)", "1/6*(x-1)^2", "-1/24*(x-1)^3"]
        phi = phi_from_json({"values": strings})
        assert phi_series(phi, 4) == phi_series(eulerian_phi(4), 4)
