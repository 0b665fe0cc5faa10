import pytest
from hypothesis import given, strategies as st

from remmelkit.bijection import (
    PartitionFamily,
    SignedPair,
    avoiders,
    check_sum_condition,
    cross_map,
    family_from_json,
    gm_map,
    is_toggle_fixed,
    signed_pairs,
    sum_condition_witness,
    toggle_involution,
)
from remmelkit.combinatorics import Partition, partitions
from remmelkit.errors import DomainError

P = Partition
EVEN = PartitionFamily("even_parts")
REPEATED = PartitionFamily("repeated")


class TestFamilies:
    def test_generated_multisets(self):
        assert EVEN.multiset(3) == (6,)
        assert REPEATED.multiset(2) == (2, 2)
        assert PartitionFamily("multiples", m=3).multiset(2) == (6,)

    def test_explicit(self):
        fam = PartitionFamily("explicit", sets=((2,), (4,), (6,)))
        assert fam.multiset(2) == (4,)
        assert fam.active_indices(5) == [1, 2]

    def test_json_dsl(self):
        assert family_from_json('{"kind": "even_parts"}') == EVEN
        assert family_from_json('{"kind": "multiples", "m": 3}').multiset(1) == (3,)
        fam = family_from_json('{"kind": "explicit", "sets": [[2], [4]]}')
        assert fam.sets == ((2,), (4,))
        with pytest.raises(DomainError):
            family_from_json('{"m": 3}')

    def test_active_truncation(self):
        assert EVEN.active_indices(10) == [1, 2, 3, 4, 5]
        assert REPEATED.active_indices(5) == [1, 2]


class TestSumCondition:
    def test_euler_pair(self):
        assert check_sum_condition(EVEN, REPEATED, 10)

    def test_identical_families(self):
        fam = PartitionFamily("multiples", m=3)
        assert check_sum_condition(fam, fam, 12)

    def test_singleton_failure(self):
        a = PartitionFamily("explicit", sets=((1,),))
        b = PartitionFamily("explicit", sets=((2,),))
        assert not check_sum_condition(a, b, 2)
        assert sum_condition_witness(a, b, 2) == (1,)

    def test_overlap_failure_beyond_singletons(self):
        # each index matches alone, but overlapping supports break the pair {1, 2}
        a = PartitionFamily("explicit", sets=((3,), (6,)))
        b = PartitionFamily("explicit", sets=((1, 2), (2, 4)))
        assert sum_condition_witness(a, b, 9) == (1, 2)

    def test_active_cap(self):
        with pytest.raises(DomainError):
            check_sum_condition(EVEN, REPEATED, 100, max_active=10)
        assert check_sum_condition(EVEN, REPEATED, 100, max_active=None)


class TestAvoiders:
    def test_examples(self):
        assert [p.parts for p in avoiders(EVEN, 5)] == [(5,), (3, 1, 1), (1, 1, 1, 1, 1)]
        assert [p.parts for p in avoiders(REPEATED, 5)] == [(5,), (4, 1), (3, 2)]
        assert avoiders(EVEN, 0) == [P(())]

    @given(st.integers(0, 25))
    def test_euler_pair_counts_agree(self, n):
        assert len(avoiders(EVEN, n)) == len(avoiders(REPEATED, n))


class TestInvolutions:
    @pytest.mark.parametrize("n", range(0, 11))
    def test_toggle_laws(self, n):
        for family in (EVEN, REPEATED):
            for pair in signed_pairs(family, n):
                image = toggle_involution(family, n, pair)
                assert toggle_involution(family, n, image) == pair
                if is_toggle_fixed(family, n, pair):
                    assert pair.indices == frozenset()
                    assert image == pair
                else:
                    assert image.sign == -pair.sign

    @pytest.mark.parametrize("n", range(0, 11))
    def test_cross_map_laws(self, n):
        for pair in signed_pairs(EVEN, n):
            forward = cross_map(EVEN, REPEATED, n, pair)
            assert forward.sign == pair.sign
            assert cross_map(REPEATED, EVEN, n, forward) == pair

    @pytest.mark.parametrize("n", range(0, 11))
    def test_cross_map_is_onto_b_side(self, n):
        images = {cross_map(EVEN, REPEATED, n, p) for p in signed_pairs(EVEN, n)}
        assert images == set(signed_pairs(REPEATED, n))


class TestChase:
    def test_worked_chase(self):
        assert gm_map(EVEN, REPEATED, 3, P((1, 1, 1))) == P((2, 1))
        assert gm_map(EVEN, REPEATED, 3, P((3,))) == P((3,))
        assert gm_map(EVEN, REPEATED, 0, P(())) == P(())

    @pytest.mark.parametrize("n", range(0, 15))
    def test_bijectivity(self, n):
        sources = avoiders(EVEN, n)
        images = [gm_map(EVEN, REPEATED, n, lam) for lam in sources]
        assert len(set(images)) == len(sources)
        assert set(images) == set(avoiders(REPEATED, n))

    def test_preconditions(self):
        with pytest.raises(DomainError):
            gm_map(EVEN, REPEATED, 4, P((2, 2)))  # not an avoider
        with pytest.raises(DomainError):
            gm_map(EVEN, REPEATED, 3, P((2, 1, 1)))  # wrong size
        a = PartitionFamily("explicit", sets=((1,),))
        b = PartitionFamily("explicit", sets=((2,),))
        with pytest.raises(DomainError):
            gm_map(a, b, 3, P((3,)))  # sum condition fails

    def test_multiples_pair(self):
        # forbidding multiples of 2 vs doubled parts is the classic pair;
        # multiples of 3 against triples works the same way
        triples = PartitionFamily(
            "explicit", sets=tuple((i, i, i) for i in range(1, 13))
        )
        m3 = PartitionFamily("multiples", m=3)
        for n in range(0, 13):
            assert check_sum_condition(m3, triples, n)
            sources = avoiders(m3, n)
            images = [gm_map(m3, triples, n, lam) for lam in sources]
            assert len(set(images)) == len(sources)
            assert set(images) == set(avoiders(triples, n))
