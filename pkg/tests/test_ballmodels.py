"""Chamberwise models of ball embedding spaces against their frozen answers."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpstrata.ballmodels import (
    SUPPORTED,
    AbIsoReport,
    CircleWeights,
    ab_isomorphism_check,
    ab_presentation,
    bstab_presentation,
    canonical_chamber,
    four_ball_stabilizer_presentation,
    free_weight_count,
    iemb_model,
    iemb_presentation,
    weight_independence_check,
)
from cpstrata.dga import cohomology_ranks, differential, verify_presentation
from cpstrata.gradedalg import GPolynomial
from cpstrata.kriz import KrizParams, kriz_model


def P(table, text):
    return GPolynomial.parse(table, text)


# Rank tables for the embedding spaces, degrees 0..9, everything above
# the listed window vanishing through the cap.
RANK_ROWS = {
    (1, "C_unique"): [1, 0, 1, 0, 1, 0, 0, 0, 0, 0],
    (2, "C_unique"): [1, 0, 2, 0, 2, 0, 1, 0, 0, 0],
    (3, "big"): [1, 0, 2, 0, 2, 0, 1, 0, 0, 0],
    (3, "small"): [1, 0, 3, 0, 3, 0, 1, 1, 0, 1],
    (4, "C_0"): [1, 0, 0, 1, 0, 1, 0, 0, 1, 0],
    (4, "C_1"): [1, 0, 1, 0, 0, 1, 0, 1, 0, 0],
    (4, "C_2"): [1, 0, 2, 0, 1, 1, 0, 2, 0, 1],
    (4, "C_3"): [1, 0, 3, 0, 2, 1, 0, 3, 0, 2],
    (4, "C_4"): [1, 0, 4, 0, 3, 1, 0, 4, 0, 3],
}

CONF3_DIMS = [1, 0, 3, 0, 3, 0, 1, 1, 0, 1]


class TestCircleWeights:
    @pytest.mark.parametrize(
        "pair, m, n",
        [((1, 1), 3, 2), ((1, 0), 1, 0), ((0, 1), 1, 0), ((2, -1), 3, -2),
         ((3, 5), 49, 120), ((-1, -1), 3, -2)],
    )
    def test_derived_quantities(self, pair, m, n):
        w = CircleWeights([pair])
        assert w.m == (m,)
        assert w.n == (n,)

    def test_zero_pair_rejected(self):
        with pytest.raises(ValueError):
            CircleWeights([(1, 1), (0, 0)])

    def test_m_positive_for_any_nonzero_pair(self):
        for a in range(-6, 7):
            for b in range(-6, 7):
                if (a, b) != (0, 0):
                    assert CircleWeights([(a, b)]).m[0] > 0

    def test_container_protocol(self):
        w = CircleWeights([(1, 0), (2, 3)])
        assert len(w) == 2
        assert list(w) == [(1, 0), (2, 3)]
        assert w == CircleWeights([(1, 0), (2, 3)])
        assert w != CircleWeights([(1, 0), (3, 2)])
        assert hash(w) == hash(CircleWeights([(1, 0), (2, 3)]))


class TestChamberBookkeeping:
    def test_supported_pairs(self):
        assert len(SUPPORTED) == 10
        assert (4, "C_5") in SUPPORTED

    @pytest.mark.parametrize(
        "n, raw, want",
        [(4, "C2", "C_2"), (4, "C_0", "C_0"), (1, "unique", "C_unique"),
         (2, "C_unique", "C_unique"), (3, "big", "big"), (3, "small", "small")],
    )
    def test_label_normalization(self, n, raw, want):
        assert canonical_chamber(n, raw) == want

    @pytest.mark.parametrize(
        "n, chamber",
        [(5, "C_1"), (3, "C_0"), (4, "big"), (1, "small"), (4, "C_6")],
    )
    def test_unsupported_pairs_rejected(self, n, chamber):
        with pytest.raises(ValueError):
            canonical_chamber(n, chamber)

    def test_free_weight_counts(self):
        counts = {ch: free_weight_count(n, ch) for n, ch in SUPPORTED}
        assert counts["small"] == 1
        assert counts["big"] == 0
        assert [counts[f"C_{r}"] for r in range(6)] == [0, 1, 2, 3, 4, 0]


class TestModelShapes:
    def test_three_big_differential(self):
        D = iemb_model(3, "big")
        t = D.table
        assert D.generator_value("beta") == P(t, "T1^2 + T2^2 + T1*T2")
        assert D.generator_value("gamma") == P(t, "T1*T2^2 + T1^2*T2")
        assert D.algebra.relations == ()

    def test_two_balls_match_three_big(self):
        D2, D3 = iemb_model(2, "C_unique"), iemb_model(3, "big")
        assert D2.table.names == D3.table.names
        assert D2.values == {k: v for k, v in D3.values.items()}

    def test_three_small_third_circle(self):
        D = iemb_model(3, "small", [(2, 3)])  # m = 19, n = 30
        t = D.table
        assert t.names == ("T1", "T2", "T3", "beta", "gamma")
        assert D.generator_value("beta") == P(t, "T1^2 + T2^2 + T1*T2 + 19*T3^2")
        assert D.generator_value("gamma") == P(
            t, "T1*T2^2 + T1^2*T2 + 30*T3^3"
        )
        rels = set(D.algebra.relations)
        assert rels == {P(t, "T1*T3"), P(t, "T2*T3")}

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_four_ball_wedge_chambers_default_weights(self, r):
        D = iemb_model(4, f"C_{r}")
        t = D.table
        dbeta = sum((3 * P(t, f"T{i}^2") for i in range(1, r + 1)),
                    GPolynomial.zero(t))
        dgamma = sum((2 * P(t, f"T{i}^3") for i in range(1, r + 1)),
                     GPolynomial.zero(t))
        assert D.generator_value("beta") == dbeta
        assert D.generator_value("gamma") == dgamma
        assert len(D.algebra.relations) == r * (r - 1) // 2

    def test_chamber_zero_has_closed_fiber_classes(self):
        D = iemb_model(4, "C_0")
        assert D.table.names == ("beta", "gamma")
        assert D.values == {}

    def test_weight_without_gamma_term(self):
        D = iemb_model(4, "C_1", [(1, 0)])
        assert "gamma" not in D.values
        assert D.generator_value("beta") == P(D.table, "T1^2")

    def test_one_ball_uses_rank_two_base(self):
        D = iemb_model(1, "C_unique")
        assert D.table.names == ("e1", "e2", "beta", "gamma")
        assert D.table.degrees == (2, 4, 3, 5)
        assert D.generator_value("beta") == P(D.table, "e1^2 - e2")
        assert D.generator_value("gamma") == P(D.table, "e1*e2")

    def test_small_chamber_redirects_to_configuration_model(self):
        D = iemb_model(4, "C_5")
        K = kriz_model(KrizParams(2, 4))
        assert D.table.names == K.table.names
        assert D.degree_cap == K.degree_cap == 14
        assert D.values == K.values

    def test_weight_count_mismatch_rejected(self):
        with pytest.raises(ValueError):
            iemb_model(4, "C_2", [(1, 1)])
        with pytest.raises(ValueError):
            iemb_model(3, "big", [(1, 1)])
        with pytest.raises(ValueError):
            iemb_model(4, "C_5", [(1, 1)])

    def test_leibniz_on_a_weighted_model(self):
        D = iemb_model(4, "C_2", [(2, 1), (1, 3)])
        t = D.table
        p = P(t, "T1*beta")
        q = P(t, "T2 + gamma")
        left = differential(D, p * q)
        right = differential(D, p) * q - p * differential(D, q)
        assert left == right  # p has odd degree 5


class TestFrozenRankTables:
    @pytest.mark.parametrize("n, chamber", sorted(RANK_ROWS))
    def test_rank_table(self, n, chamber):
        report = cohomology_ranks(iemb_model(n, chamber))
        assert report.rank_list(9) == RANK_ROWS[(n, chamber)]
        assert all(r == 0 for r in report.rank_list()[10:])
        assert report.check_top_vanishing()

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_euler_characteristic_vanishes_on_wedge_chambers(self, r):
        assert cohomology_ranks(iemb_model(4, f"C_{r}")).euler_characteristic() == 0

    def test_degree_two_rank_counts_circles(self):
        for r in range(5):
            report = cohomology_ranks(iemb_model(4, f"C_{r}"))
            assert report.ranks[2] == r
        assert cohomology_ranks(iemb_model(4, "C_5")).ranks[2] == 4

    def test_small_three_ball_space_matches_configuration_model(self):
        ours = cohomology_ranks(iemb_model(3, "small")).rank_list(10)
        conf = cohomology_ranks(kriz_model(KrizParams(2, 3))).rank_list(10)
        assert ours == conf == CONF3_DIMS + [0]


class TestPresentations:
    @pytest.mark.parametrize("n, chamber", sorted(RANK_ROWS))
    def test_presentation_verifies_with_default_weights(self, n, chamber):
        D = iemb_model(n, chamber)
        pres, gen_map = iemb_presentation(n, chamber)
        report = verify_presentation(D, pres, gen_map)
        assert report, report.first_failure

    @pytest.mark.parametrize(
        "n, chamber, w",
        [(3, "small", [(2, -1)]), (3, "small", [(3, 5)]),
         (4, "C_1", [(5, 2)]), (4, "C_2", [(1, 0), (2, 1)]),
         (4, "C_3", [(1, 0), (1, 1), (2, 1)])],
    )
    def test_presentation_verifies_with_other_weights(self, n, chamber, w):
        D = iemb_model(n, chamber, w)
        pres, gen_map = iemb_presentation(n, chamber, w)
        report = verify_presentation(D, pres, gen_map)
        assert report, report.first_failure

    def test_no_presentation_for_small_four_balls(self):
        with pytest.raises(ValueError):
            iemb_presentation(4, "C_5")

    def test_weighted_relation_keeps_integer_coefficients(self):
        pres, _ = iemb_presentation(4, "C_2", [(1, 1), (2, -1)])
        t = pres.table
        assert pres.relations[0] == P(t, "3*T1^2 + 3*T2^2")
        assert P(t, "T1*T2") in pres.relations

    def test_small_three_ball_presentation_dimensions(self):
        pres, _ = iemb_presentation(3, "small")
        dims = [pres.quotient_dimension(q) for q in range(13)]
        assert dims == CONF3_DIMS + [0, 0, 0]

    def test_eta_image_is_closed_before_quotient(self):
        D = iemb_model(4, "C_2", [(1, 1), (1, 0)])
        _, gen_map = iemb_presentation(4, "C_2", [(1, 1), (1, 0)])
        image = differential(D, gen_map["eta"])
        # closed in the quotient: the residue is an ideal member
        assert D.algebra.ideal_member(image)


class TestBstabPresentation:
    def test_four_small_balls_dimension_table(self):
        ring = four_ball_stabilizer_presentation()
        dims = [ring.quotient_dimension(q) for q in range(15)]
        assert dims == [1, 0, 4, 0, 5, 2, 5, 2, 5, 2, 5, 2, 5, 2, 5]
        assert bstab_presentation(4, "C_5") is not ring  # fresh instance
        assert [
            bstab_presentation(4, "C_5").quotient_dimension(q) for q in range(8)
        ] == dims[:8]

    def test_trivial_stabilizer(self):
        ring = bstab_presentation(4, "C_0")
        assert ring.table.names == ()
        assert [ring.quotient_dimension(q) for q in range(7)] == [1, 0, 0, 0, 0, 0, 0]

    def test_torus_cases_are_free(self):
        for pair in ((2, "C_unique"), (3, "big")):
            ring = bstab_presentation(*pair)
            assert ring.relations == ()
            dims = [ring.quotient_dimension(q) for q in range(0, 9, 2)]
            assert dims == [1, 2, 3, 4, 5]

    def test_one_ball_base(self):
        ring = bstab_presentation(1, "C_unique")
        assert ring.table.degrees == (2, 4)
        dims = [ring.quotient_dimension(q) for q in range(0, 13, 2)]
        assert dims == [1, 1, 2, 2, 3, 3, 4]

    def test_wedge_of_circles(self):
        ring = bstab_presentation(4, "C_3")
        t = ring.table
        assert ring.ideal_member(P(t, "T1*T3"))
        assert not ring.ideal_member(P(t, "T2^2"))
        assert [ring.quotient_dimension(q) for q in (0, 2, 4, 6)] == [1, 3, 3, 3]

    def test_small_three_ball_base(self):
        ring = bstab_presentation(3, "small")
        assert [ring.quotient_dimension(q) for q in (0, 2, 4, 6)] == [1, 3, 4, 5]

    def test_base_relations_match_model_relations(self):
        ring = bstab_presentation(4, "C_2")
        model = iemb_model(4, "C_2")
        assert {r.to_text() for r in ring.relations} == {
            r.to_text() for r in model.algebra.relations
        }


class TestWeightIndependence:
    def test_small_three_balls_sweep(self):
        sets = [[(1, 0)], [(1, 1)], [(2, -1)], [(3, 5)]]
        assert weight_independence_check(3, "small", sets) is True

    def test_one_circle_chamber_sweep(self):
        sets = [[(1, 0)], [(1, 1)], [(5, 2)]]
        assert weight_independence_check(4, "C_1", sets) is True
        for w in sets:
            ranks = cohomology_ranks(iemb_model(4, "C_1", w)).rank_list(7)
            assert ranks == [1, 0, 1, 0, 0, 1, 0, 1]

    def test_two_circle_chamber_sweep(self):
        sets = [[(1, 1), (1, 1)], [(1, 0), (0, 1)], [(2, 1), (1, -3)]]
        assert weight_independence_check(4, "C_2", sets) is True

    def test_needs_two_sets(self):
        with pytest.raises(ValueError):
            weight_independence_check(4, "C_1", [[(1, 1)]])

    @given(
        a=st.integers(min_value=-4, max_value=4),
        b=st.integers(min_value=-4, max_value=4),
    )
    @settings(max_examples=25, deadline=None)
    def test_any_single_weight_gives_the_frozen_row(self, a, b):
        if (a, b) == (0, 0):
            return
        ranks = cohomology_ranks(iemb_model(4, "C_1", [(a, b)])).rank_list(9)
        assert ranks == RANK_ROWS[(4, "C_1")]


class TestAbIsomorphism:
    def test_source_ring_dimensions(self):
        ring = ab_presentation()
        assert len(ring.relations) == 7
        dims = [ring.quotient_dimension(q) for q in range(10)]
        assert dims == CONF3_DIMS

    def test_check_passes(self):
        report = ab_isomorphism_check()
        assert isinstance(report, AbIsoReport)
        assert bool(report) is True
        assert report.failures == ()
        assert list(report.source_dims[:10]) == CONF3_DIMS
        assert report.source_dims == report.target_dims

    def test_quadratic_relation_image(self):
        report = ab_isomorphism_check()
        target, _ = iemb_presentation(3, "small", [(1, 1)])
        images = dict(report.images)
        key = "alpha1^2 + alpha1*alpha2 + alpha2^2"
        assert key in images
        got = P(target.table, images[key])
        want = P(
            target.table,
            "T1^2 + T2^2 + T1*T2 + 3*T3^2 + 3*T1*T3 + 3*T2*T3",
        )
        assert got == want
        assert target.ideal_member(got)

    def test_zeta_relation_image(self):
        report = ab_isomorphism_check()
        target, _ = iemb_presentation(3, "small", [(1, 1)])
        images = dict(report.images)
        key = "alpha1*zeta - alpha2*zeta"
        got = P(target.table, images[key])
        want = P(target.table, "T1*eta - T2*eta")
        assert got == want
        assert target.ideal_member(got)

    def test_all_seven_images_are_ideal_members(self):
        report = ab_isomorphism_check()
        target, _ = iemb_presentation(3, "small", [(1, 1)])
        assert len(report.images) == 7
        for _, image_text in report.images:
            assert target.ideal_member(P(target.table, image_text))
