from math import factorial

import pytest
from hypothesis import given, strategies as st

from remmelkit.combinatorics import (
    Partition,
    derangement_cycle_word,
    derangement_number,
    derangements,
    enumeration_cap,
    eulerian_polynomial,
    is_downup,
    is_updown,
    partition_count,
    partitions,
    perm_statistics,
    permutations,
    q_derangement,
    word_statistics_polynomial,
)
from remmelkit.errors import DomainError
from remmelkit.polynomials import MultiPoly, ONE, Q, X, q_int

perms = st.integers(2, 7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


class TestPartitions:
    def test_empty(self):
        assert partitions(0) == [Partition(())]

    def test_counts(self):
        assert [len(partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_descending_lex_order(self):
        parts = [p.parts for p in partitions(6)]
        assert parts == sorted(parts, reverse=True)

    def test_part_filter(self):
        odd = [p.parts for p in partitions(5, lambda p: p % 2 == 1)]
        assert odd == [(5,), (3, 1, 1), (1, 1, 1, 1, 1)]

    def test_validation(self):
        with pytest.raises(DomainError):
            Partition((1, 2))
        with pytest.raises(DomainError):
            Partition((0,))

    @given(st.integers(0, 14))
    def test_count_matches_enumeration(self, n):
        assert partition_count(n) == len(partitions(n))


class TestPermStatistics:
    def test_examples(self):
        s = perm_statistics((2, 4, 1, 3))
        assert (s.des, s.maj, s.inv, s.lrmin) == (1, 2, 3, 2)
        assert s.is_updown and not s.is_downup
        s = perm_statistics((3, 2, 1))
        assert (s.des, s.maj, s.inv, s.lrmin) == (2, 3, 3, 3)
        s = perm_statistics((1, 2, 3))
        assert (s.des, s.maj, s.inv, s.lrmin) == (0, 0, 0, 1)
        assert not s.is_updown and not s.is_downup

    def test_rejects_non_permutations(self):
        with pytest.raises(DomainError):
            perm_statistics((1, 1))
        with pytest.raises(DomainError):
            perm_statistics((0, 1))

    @given(perms)
    def test_alternating_exclusive(self, sigma):
        assert not (is_updown(sigma) and is_downup(sigma))

    @given(perms)
    def test_maj_at_most_des_times_n(self, sigma):
        s = perm_statistics(sigma)
        assert s.des <= s.inv
        assert s.maj <= s.des * (len(sigma) - 1)

    def test_short_permutations_alternate_vacuously(self):
        assert is_updown(()) and is_downup(())
        assert is_updown((1,)) and is_downup((1,))


class TestPolynomials:
    def test_eulerian(self):
        assert eulerian_polynomial(1) == ONE
        assert eulerian_polynomial(2) == 1 + X
        assert eulerian_polynomial(3) == 1 + 4 * X + X**2

    @given(st.integers(0, 6))
    def test_eulerian_counts_all_permutations(self, n):
        assert eulerian_polynomial(n).substitute(x=1) == factorial(n)

    def test_words(self):
        assert word_statistics_polynomial(0, 3) == ONE
        assert word_statistics_polynomial(1, 2) == 1 + Q
        assert word_statistics_polynomial(2, 2) == 1 + Q + X * Q + Q**2

    @given(st.integers(0, 5), st.integers(1, 4))
    def test_words_count_all(self, n, k):
        assert word_statistics_polynomial(n, k).substitute(x=1, q=1) == k**n


class TestDerangements:
    def test_cycle_word_examples(self):
        assert derangement_cycle_word((2, 1)) == (1, 2)
        assert derangement_cycle_word((3, 1, 2)) == (1, 3, 2)
        assert derangement_cycle_word((2, 3, 1)) == (3, 1, 2)

    def test_fixed_point_rejected(self):
        with pytest.raises(DomainError):
            derangement_cycle_word((1, 3, 2))

    def test_small_values(self):
        assert q_derangement(0) == ONE
        assert q_derangement(1).is_zero()
        assert q_derangement(2) == ONE
        assert q_derangement(3) == Q + Q**2

    @pytest.mark.parametrize("n", range(2, 8))
    def test_recursions(self, n):
        lhs = q_derangement(n + 1)
        assert lhs == Q * q_int(n) * q_derangement(n) + q_int(n) * q_derangement(n - 1)
        assert lhs == q_int(n + 1) * q_derangement(n) + (-1) ** (n + 1)

    @pytest.mark.parametrize("n", range(0, 8))
    def test_classical_specialization(self, n):
        value = q_derangement(n).substitute(q=1)
        value = 0 if value.is_zero() else value.as_fraction()
        assert value == derangement_number(n)
        assert derangement_number(n) == sum(1 for _ in derangements(n))

    @given(st.integers(2, 6))
    def test_cycle_word_is_bijective(self, n):
        words = {derangement_cycle_word(s) for s in derangements(n)}
        assert len(words) == derangement_number(n)


class TestBudget:
    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("REMMELKIT_MAX_N", "6")
        assert enumeration_cap() == 6
        monkeypatch.setenv("REMMELKIT_MAX_N", "junk")
        with pytest.raises(DomainError):
            enumeration_cap()

    def test_default(self, monkeypatch):
        monkeypatch.delenv("REMMELKIT_MAX_N", raising=False)
        assert enumeration_cap() == 10
