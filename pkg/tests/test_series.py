from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from remmelkit.errors import DomainError
from remmelkit.polynomials import MultiPoly, ONE, Q, X, ZERO
from remmelkit.series import (
    PowerSeries,
    cosine,
    exp_xminus1_t,
    geometric,
    pochhammer_zx,
    secant_qt,
)

small_polys = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.just(0), st.just(0)),
    st.fractions(min_value=-5, max_value=5, max_denominator=5),
    max_size=3,
).map(MultiPoly)

series_tails = st.lists(small_polys, min_size=6, max_size=6)


class TestBasics:
    def test_geometric(self):
        g = geometric(1, 6)
        assert all(c == ONE for c in g.coeffs)
        gq = geometric(Q, 6)
        assert gq.coeff(3) == Q**3

    def test_inverse_is_reciprocal(self):
        f = PowerSeries([1, -1], order=8)
        assert f.inverse() == geometric(1, 8)
        assert (f * f.inverse()) == PowerSeries.one(8)

    def test_inverse_needs_constant_unit(self):
        with pytest.raises(DomainError):
            PowerSeries([0, 1], order=4).inverse()
        with pytest.raises(DomainError):
            PowerSeries([X, 1], order=4).inverse()

    def test_min_order_truncation(self):
        a = PowerSeries.one(8)
        b = PowerSeries.one(4)
        assert (a + b).order == 4
        assert (a * b).order == 4

    def test_secant_coefficient(self):
        assert cosine(8).inverse().coeff(4) == MultiPoly.const(Fraction(5, 24))

    def test_integrate(self):
        assert PowerSeries.one(4).integrate().coeff(1) == ONE
        t3 = PowerSeries.monomial(ONE, 3, 5)
        assert t3.integrate().coeff(4) == MultiPoly.const(Fraction(1, 4))
        assert t3.integrate().coeff(0) == ZERO

    def test_integrate_order_cap(self):
        f = PowerSeries.one(5)
        assert f.integrate().order == 6
        assert f.integrate(max_order=5).order == 5


class TestRoundtrips:
    @given(series_tails)
    def test_exp_log(self, tail):
        f = PowerSeries([ZERO] + tail)
        g = f.exp()
        assert g.log() == f

    @given(series_tails)
    def test_log_exp(self, tail):
        f = PowerSeries([ONE] + tail)
        assert f.log().exp() == f

    @given(series_tails)
    def test_inverse_involutive(self, tail):
        f = PowerSeries([ONE] + tail)
        assert f.inverse().inverse() == f

    def test_exp_log_preconditions(self):
        with pytest.raises(DomainError):
            PowerSeries([1, 1], order=3).exp()
        with pytest.raises(DomainError):
            PowerSeries([2, 1], order=3).log()


class TestQPower:
    def test_identity(self):
        assert PowerSeries.one(6).q_power() == PowerSeries.one(6)

    def test_secant_examples(self):
        s = secant_qt(8).q_power()
        assert s.coeff(2) == Q / 2
        assert s.coeff(4) == Q**3 / 12 + Q**2 / 8

    @given(series_tails)
    def test_specializes_to_original_at_q_one(self, tail):
        f = PowerSeries([ONE] + [Q * c for c in tail])
        assert f.q_power().substitute(q=1) == f.substitute(q=1)

    def test_rejects_non_divisible(self):
        with pytest.raises(DomainError):
            PowerSeries([ONE, X], order=4).q_power()


class TestBuilders:
    def test_exp_xminus1(self):
        f = exp_xminus1_t(5)
        assert f.coeff(2) == (X - 1) ** 2 / 2

    def test_pochhammer(self):
        p = pochhammer_zx(1, 4)
        assert p.coeff(0) == ONE
        assert p.coeff(1) == X - 1
        assert p.coeff(2) == ZERO
        p2 = pochhammer_zx(2, 4)
        assert p2.coeff(1) == (X - 1) * (1 + Q)
        assert p2.coeff(2) == (X - 1) ** 2 * Q

    def test_scale_t(self):
        f = geometric(1, 5).scale_t(Q)
        assert f == geometric(Q, 5)
