import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from remmelkit.combinatorics import Partition, partitions
from remmelkit.errors import DomainError
from remmelkit.symfunc import (
    MonomialExpansion,
    SpecialRimHookTabloid,
    SymFunc,
    brick_tabloid_count,
    enumerate_srht,
    expand_in_vars,
    expand_symfunc,
    h_to_e,
    inverse_kostka,
    kostka,
)

P = Partition

small_partitions = st.integers(0, 6).map(lambda n: partitions(n)).flatmap(st.sampled_from)


class TestKostka:
    def test_examples(self):
        assert kostka(P((2, 1)), P((2, 1))) == 1
        assert kostka(P((2,)), P((1, 1))) == 1
        assert kostka(P((2, 1)), P((1, 1, 1))) == 2

    def test_size_mismatch(self):
        with pytest.raises(DomainError):
            kostka(P((2,)), P((1,)))

    @given(small_partitions)
    def test_diagonal_is_one(self, lam):
        assert kostka(lam, lam) == 1

    def test_dominance_vanishing(self):
        # content (2,1) cannot fill the strictly-increasing column of (1,1,1)
        assert kostka(P((1, 1, 1)), P((2, 1))) == 0


class TestInverseKostka:
    def test_examples(self):
        assert inverse_kostka(P((3,)), P((3,))) == 1
        assert inverse_kostka(P((2,)), P((1, 1))) == -1

    def test_single_row_content(self):
        for n in range(1, 7):
            assert inverse_kostka(P((n,)), P((n,))) == 1

    def test_figure_shape_has_two_tabloids(self):
        shape, content = P((5, 5, 4, 3, 1)), P((6, 6, 4, 2))
        tabloids = [t for t in enumerate_srht(shape) if t.content() == content]
        assert len(tabloids) == 2
        assert all(t.sign() == -1 for t in tabloids)
        assert inverse_kostka(content, shape) == -2

    @pytest.mark.parametrize("n", range(0, 8))
    def test_matrix_inversion(self, n):
        ps = partitions(n)
        inverse = [[inverse_kostka(mu, lam) for lam in ps] for mu in ps]
        forward = [[kostka(lam, nu) for nu in ps] for lam in ps]
        for i in range(len(ps)):
            for j in range(len(ps)):
                value = sum(inverse[i][k] * forward[k][j] for k in range(len(ps)))
                assert value == (1 if i == j else 0)


class TestTabloidStructure:
    @given(small_partitions)
    def test_hooks_tile_the_diagram(self, shape):
        # cells are (row, column) with row 1 at the bottom holding the largest part
        diagram = {
            (row, col)
            for row in range(1, shape.length + 1)
            for col in range(1, shape.parts[row - 1] + 1)
        }
        for tabloid in enumerate_srht(shape):
            cells = [cell for hook in tabloid.hooks for cell in hook]
            assert len(cells) == len(set(cells)) == shape.n
            assert set(cells) == diagram

    @given(small_partitions)
    def test_hooks_are_connected_paths(self, shape):
        for tabloid in enumerate_srht(shape):
            for hook, steps in zip(tabloid.hooks, tabloid.vertical_steps):
                drops = 0
                for (r1, c1), (r2, c2) in zip(hook, hook[1:]):
                    assert (r2, c2) in ((r1, c1 + 1), (r1 - 1, c1))
                    drops += r2 == r1 - 1
                assert drops == steps

    @given(small_partitions)
    def test_signed_enumeration_matches_inverse_kostka(self, shape):
        by_content = {}
        for tabloid in enumerate_srht(shape):
            key = tabloid.content()
            by_content[key] = by_content.get(key, 0) + tabloid.sign()
        for mu in partitions(shape.n):
            assert inverse_kostka(mu, shape) == by_content.get(mu, 0)


class TestBrickTabloids:
    def test_worked_example(self):
        assert brick_tabloid_count(P((4, 2, 2, 1, 1)), P((5, 3, 2))) == 4

    def test_trivial(self):
        assert brick_tabloid_count(P((3,)), P((3,))) == 1
        assert brick_tabloid_count(P((1, 1)), P((2,))) == 1
        assert brick_tabloid_count(P(()), P(())) == 1

    def test_single_row_counts_orderings(self):
        # bricks in one row are ordered, so (2,1,1) in a 4-row has 3 layouts
        assert brick_tabloid_count(P((2, 1, 1)), P((4,))) == 3


class TestExpansions:
    def test_examples(self):
        assert expand_in_vars("e", P((2,)), 2).terms == {(1, 1): Fraction(1)}
        assert expand_in_vars("h", P((2,)), 2).terms == {
            (2, 0): 1,
            (1, 1): 1,
            (0, 2): 1,
        }
        assert expand_in_vars("s", P((1, 1)), 2).terms == {(1, 1): Fraction(1)}

    def test_monomial_basis(self):
        m21 = expand_in_vars("m", P((2, 1)), 3)
        assert len(m21.terms) == 6
        assert m21.terms[(2, 1, 0)] == 1

    @given(small_partitions, st.randoms(use_true_random=False))
    def test_expansions_are_symmetric(self, lam, rng):
        m = max(lam.n, 2)
        basis = rng.choice(["e", "h", "m", "s"])
        expansion = expand_in_vars(basis, lam, m)
        i, j = rng.sample(range(1, m + 1), 2)
        assert expansion.swap_variables(i, j).terms == expansion.terms

    @pytest.mark.parametrize("n", range(0, 6))
    def test_schur_is_kostka_sum_of_monomials(self, n):
        m = max(n, 1)
        for lam in partitions(n):
            direct = expand_in_vars("s", lam, m)
            routed = MonomialExpansion(m, {})
            for mu in partitions(n):
                routed = routed + expand_in_vars("m", mu, m) * kostka(lam, mu)
            assert direct.terms == routed.terms


class TestHToE:
    def test_examples(self):
        assert h_to_e(P((1,))).coeffs == {P((1,)): Fraction(1)}
        assert h_to_e(P((2,))).coeffs == {P((1, 1)): 1, P((2,)): -1}
        assert h_to_e(P((1, 1))).coeffs == {P((1, 1)): Fraction(1)}

    @pytest.mark.parametrize("n", range(0, 7))
    def test_oracle_equality(self, n):
        m = max(n, 1)
        for mu in partitions(n):
            assert (
                expand_in_vars("h", mu, m).terms
                == expand_symfunc(h_to_e(mu), m).terms
            )

    def test_symfunc_validation(self):
        with pytest.raises(DomainError):
            SymFunc(3, "e", {P((2,)): Fraction(1)})
        with pytest.raises(DomainError):
            SymFunc(2, "w", {})
