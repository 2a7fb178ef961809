"""Tests for the configuration-space models E(m, k).

Rank tables for small (m, k) are pinned; the four-point planar model is
checked against its known degreewise ranks through degree 14.  Structural
properties: d squared vanishes, the relation ideal is d-stable, and point
relabeling never changes a rank.
"""

import random

import pytest

from cpstrata.dga import (
    check_d_squared,
    check_ideal_stability,
    cohomology_ranks,
    differential,
)
from cpstrata.gradedalg import GPolynomial
from cpstrata.kriz import (
    KrizParams,
    diagonal_pullback,
    g_name,
    kriz_model,
    kriz_parse,
    kriz_table,
    point_pairs,
    relabeled_model,
)


class TestParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            KrizParams(0, 2)
        with pytest.raises(ValueError):
            KrizParams(2, 0)
        with pytest.raises(ValueError):
            KrizParams(1, 10)

    def test_table_shape(self):
        table = kriz_table(KrizParams(2, 3))
        assert table.names == ("x1", "x2", "x3", "G12", "G13", "G23")
        assert table.degrees == (2, 2, 2, 3, 3, 3)
        assert table.nilpotence == (3, 3, 3, None, None, None)

    def test_odd_connecting_degree(self):
        # degree 2m-1: odd for every m, so G generators square to zero
        for m in (1, 2, 3):
            table = kriz_table(KrizParams(m, 2))
            assert table.degrees[-1] == 2 * m - 1
            assert table.max_exponent(table.index("G12")) == 1

    def test_pair_enumeration(self):
        assert point_pairs(4) == [
            (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        ]


class TestDiagonalPullback:
    def test_plane(self):
        table = kriz_table(KrizParams(2, 2))
        assert diagonal_pullback(2, 1, 2, table) == GPolynomial.parse(
            table, "x1^2 + x1*x2 + x2^2"
        )

    def test_line(self):
        table = kriz_table(KrizParams(1, 2))
        assert diagonal_pullback(1, 1, 2, table) == GPolynomial.parse(
            table, "x1 + x2"
        )

    def test_threefold(self):
        table = kriz_table(KrizParams(3, 2))
        assert diagonal_pullback(3, 1, 2, table) == GPolynomial.parse(
            table, "x1^3 + x1^2*x2 + x1*x2^2 + x2^3"
        )

    def test_symmetric_in_the_two_points(self):
        table = kriz_table(KrizParams(2, 3))
        assert diagonal_pullback(2, 1, 3, table) == diagonal_pullback(2, 3, 1, table)

    def test_repeated_point_rejected(self):
        with pytest.raises(ValueError):
            diagonal_pullback(2, 1, 1)
        with pytest.raises(ValueError):
            g_name(2, 2)


class TestParsing:
    def test_reversed_indices_normalize(self):
        table = kriz_table(KrizParams(2, 3))
        assert kriz_parse(table, "G21") == GPolynomial.generator(table, "G12")
        assert kriz_parse(table, "x1*G31") == GPolynomial.parse(table, "x1*G13")

    def test_reversed_product_keeps_koszul_sign(self):
        table = kriz_table(KrizParams(2, 3))
        assert kriz_parse(table, "G31*G21") == -GPolynomial.parse(
            table, "G12*G13"
        )


class TestSmallModels:
    def test_two_points_in_the_plane(self):
        rep = cohomology_ranks(kriz_model(KrizParams(2, 2)))
        assert rep.rank_list(6) == [1, 0, 2, 0, 2, 0, 1]
        assert rep.check_top_vanishing()

    def test_three_points_on_the_line(self):
        rep = cohomology_ranks(kriz_model(KrizParams(1, 3)))
        assert rep.rank_list() == [1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]
        assert sum(rep.ranks.values()) == 2

    def test_three_points_in_the_plane(self):
        rep = cohomology_ranks(kriz_model(KrizParams(2, 3)))
        assert rep.rank_list(9) == [1, 0, 3, 0, 3, 0, 1, 1, 0, 1]

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_one_point_is_projective_space(self, m):
        rep = cohomology_ranks(kriz_model(KrizParams(m, 1)))
        expected = [1 if q % 2 == 0 and q <= 2 * m else 0 for q in range(11)]
        assert rep.rank_list() == expected

    def test_default_caps(self):
        assert kriz_model(KrizParams(2, 3)).degree_cap == 10
        assert kriz_model(KrizParams(2, 4)).degree_cap == 14
        assert kriz_model(KrizParams(2, 4), degree_cap=8).degree_cap == 8


class TestFourPointModel:
    def test_rank_table_through_fourteen(self):
        rep = cohomology_ranks(kriz_model(KrizParams(2, 4)))
        table = {0: 1, 2: 4, 4: 4, 5: 2, 7: 6, 9: 4, 10: 2, 11: 1, 12: 2}
        assert rep.rank_list() == [table.get(q, 0) for q in range(15)]
        assert rep.check_top_vanishing()

    def test_euler_characteristics_follow_falling_factorials(self):
        # chi of k distinct points in a space of Euler characteristic 3
        # is 3*(3-1)*...*(3-k+1): 3, 6, 6, 0 for k=1..4
        for k, chi in [(1, 3), (2, 6), (3, 6), (4, 0)]:
            rep = cohomology_ranks(kriz_model(KrizParams(2, k), degree_cap=14))
            assert rep.euler_characteristic() == chi, f"k={k}"


class TestStructure:
    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_d_squared_and_stability(self, m, k):
        D = kriz_model(KrizParams(m, k), degree_cap=10)
        assert check_d_squared(D)
        assert check_ideal_stability(D)

    def test_connecting_relation_maps_to_zero(self):
        D = kriz_model(KrizParams(2, 2))
        r = kriz_parse(D.table, "x1*G12 - x2*G12")
        assert differential(D, r).is_zero  # x1^3 - x2^3 dies by nilpotence

    def test_arnold_relation_in_ideal_after_d(self):
        D = kriz_model(KrizParams(2, 3))
        arnold = kriz_parse(D.table, "G12*G23 + G23*G31 + G31*G12")
        assert D.algebra.ideal_member(arnold)
        d_arnold = differential(D, arnold)
        assert d_arnold.is_zero or D.algebra.ideal_member(d_arnold)


class TestRelabeling:
    def test_all_three_point_permutations(self):
        base = cohomology_ranks(kriz_model(KrizParams(2, 3))).rank_list()
        import itertools

        for perm in itertools.permutations([1, 2, 3]):
            rep = cohomology_ranks(relabeled_model(KrizParams(2, 3), perm))
            assert rep.rank_list() == base, f"perm {perm}"

    def test_four_point_permutations(self):
        base = cohomology_ranks(kriz_model(KrizParams(2, 4), degree_cap=10))
        rng = random.Random(11)
        perms = [[2, 1, 3, 4], [4, 3, 2, 1]]
        perms.append(rng.sample(range(1, 5), 4))
        for perm in perms:
            rep = cohomology_ranks(
                relabeled_model(KrizParams(2, 4), perm, degree_cap=10)
            )
            assert rep.rank_list() == base.rank_list(), f"perm {perm}"

    def test_identity_relabeling_reproduces_relations(self):
        p = KrizParams(2, 3)
        assert (
            relabeled_model(p, [1, 2, 3]).algebra.relations
            == kriz_model(p).algebra.relations
        )

    def test_bad_permutation_rejected(self):
        with pytest.raises(ValueError):
            relabeled_model(KrizParams(2, 3), [1, 1, 2])
