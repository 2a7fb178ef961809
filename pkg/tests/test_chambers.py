import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpstrata.chambers import (
    AdmissibilityError,
    LinearConstraintSystem,
    UnsupportedLabelError,
    chamber_label,
    chamber_signature,
    enumerate_chambers,
    feasible,
    is_admissible,
    simplest_in_open,
    witness,
)
from cpstrata.lattice import Capacities, area, enumerate_exceptional

F = Fraction


def caps(text):
    return Capacities.parse(text)


@pytest.fixture(scope="module")
def chambers5():
    return enumerate_chambers(5)


class TestFeasibility:
    def test_strict_contradiction(self):
        sys = LinearConstraintSystem(1, [((1,), 0, "<"), ((1,), 0, ">")])
        assert not feasible(sys)
        assert witness(sys) is None

    def test_closed_point(self):
        sys = LinearConstraintSystem(1, [((1,), 0, "<="), ((1,), 0, ">=")])
        assert feasible(sys)
        assert witness(sys) == (F(0),)

    def test_open_triangle(self):
        sys = LinearConstraintSystem(
            2, [((1, 1), 1, "<"), ((1, 0), F(2, 5), ">"), ((0, 1), F(2, 5), ">")]
        )
        assert feasible(sys)
        x, y = witness(sys)
        assert x + y < 1 and x > F(2, 5) and y > F(2, 5)

    def test_strict_beats_closed_on_merge(self):
        # same hyperplane appearing both ways must stay strict
        sys = LinearConstraintSystem(1, [((1,), 1, "<="), ((2,), 2, "<"), ((1,), 1, ">=")])
        assert not feasible(sys)

    def test_negative_region(self):
        sys = LinearConstraintSystem(2, [((1, 0), -3, "<="), ((0, 1), -4, "<")])
        pt = witness(sys)
        assert pt[0] <= -3 and pt[1] < -4

    def test_empty_system(self):
        assert feasible(LinearConstraintSystem(3))
        assert witness(LinearConstraintSystem(3)) == (F(0), F(0), F(0))

    def test_equality_chain_with_offset(self):
        # x = y, y = z, z >= 7/3, x < 3
        sys = LinearConstraintSystem(
            3,
            [
                ((1, -1, 0), 0, "<="),
                ((1, -1, 0), 0, ">="),
                ((0, 1, -1), 0, "<="),
                ((0, 1, -1), 0, ">="),
                ((0, 0, 1), F(7, 3), ">="),
                ((1, 0, 0), 3, "<"),
            ],
        )
        pt = witness(sys)
        assert pt is not None
        assert pt[0] == pt[1] == pt[2]
        assert F(7, 3) <= pt[0] < 3

    def test_random_systems_match_brute_grid(self):
        # compare the exact decision against a dense rational grid scan
        rng = random.Random(11)
        grid = [F(i, 4) for i in range(-8, 9)]
        for _ in range(40):
            rows = []
            for _ in range(rng.randint(1, 4)):
                coeffs = (rng.randint(-2, 2), rng.randint(-2, 2))
                rel = rng.choice(["<", "<=", ">", ">="])
                rows.append((coeffs, F(rng.randint(-3, 3)), rel))
            sys = LinearConstraintSystem(2, rows)
            got = feasible(sys)
            if not got:
                # no grid point may satisfy the system either
                def ok(x, y):
                    for (a, b), rhs, rel in sys.constraints:
                        lhs = a * x + b * y
                        if rel == "<" and not lhs < rhs:
                            return False
                        if rel == "<=" and not lhs <= rhs:
                            return False
                        if rel == ">" and not lhs > rhs:
                            return False
                        if rel == ">=" and not lhs >= rhs:
                            return False
                    return True

                assert not any(ok(x, y) for x in grid for y in grid)
            else:
                pt = witness(sys)
                assert pt is not None  # witness agrees with the decision


class TestSimplestInOpen:
    def test_examples(self):
        assert simplest_in_open(F(1, 3), F(1, 2)) == F(2, 5)
        assert simplest_in_open(F(0), F(1)) == F(1, 2)
        assert simplest_in_open(F(2, 5), F(3, 5)) == F(1, 2)
        assert simplest_in_open(F(5, 3), F(7, 4)) == F(12, 7)
        assert simplest_in_open(F(-3), F(-2)) == F(-5, 2)
        assert simplest_in_open(F(-1, 2), F(1, 3)) == F(0)
        assert simplest_in_open(F(3, 2), F(4)) == F(2)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            simplest_in_open(F(1, 2), F(1, 2))

    @given(
        st.fractions(min_value=-5, max_value=5, max_denominator=40),
        st.fractions(min_value=-5, max_value=5, max_denominator=40),
    )
    @settings(max_examples=150, deadline=None)
    def test_minimal_denominator(self, a, b):
        if a == b:
            return
        a, b = min(a, b), max(a, b)
        r = simplest_in_open(a, b)
        assert a < r < b
        for q in range(1, r.denominator):
            lo = a * q
            p = lo.numerator // lo.denominator + 1
            while F(p, q) < b:
                assert not a < F(p, q) < b
                p += 1


class TestAdmissibility:
    def test_volume_violation(self):
        verdict = is_admissible(caps("1"))
        assert not verdict
        assert verdict.violator == "volume"

    def test_exceptional_violation_names_class(self):
        verdict = is_admissible(caps("1/2,1/2,1/2,1/2,1/2"))
        assert not verdict
        assert verdict.violator.to_text() == "L - E4 - E5"

    def test_tie_counts_as_violation(self):
        assert not is_admissible(caps("1/2,1/2"))
        assert is_admissible(caps("1/2,49/100"))

    def test_small_equal_capacities(self):
        for n in range(1, 9):
            assert is_admissible(Capacities((F(1, 100),) * n))

    def test_signature_raises_on_inadmissible(self):
        with pytest.raises(AdmissibilityError) as e:
            chamber_signature(caps("2/3,2/3"))
        assert e.value.violator.to_text() == "L - E1 - E2"


class TestClassification:
    def test_table_example(self):
        assert chamber_label(caps("2/5,2/5,3/10,1/5")) == "C_2"
        assert chamber_signature(caps("2/5,2/5,3/10,1/5")).bit_string() == "TTFFF"

    def test_three_ball_split(self):
        assert chamber_label(caps("1/3,1/3,1/3")) == "big"
        assert chamber_label(caps("1/4,1/4,1/4")) == "small"
        assert chamber_label(caps("1/3,1/3,1/3,1/3")) == "C_0"

    def test_unique_for_one_and_two(self):
        assert chamber_label(caps("1/2")) == "C_unique"
        assert chamber_label(caps("1/2,1/3")) == "C_unique"

    def test_no_labels_past_four(self):
        c = Capacities((F(1, 10),) * 5)
        with pytest.raises(UnsupportedLabelError):
            chamber_label(c)
        assert len(chamber_signature(c).bits) == 16

    def test_unsorted_input_is_sorted_first(self):
        assert chamber_label(caps("1/5,3/10,2/5,2/5")) == "C_2"

    def test_label_permutation_invariance(self):
        records = enumerate_chambers(4)
        for rec in records:
            vals = rec.witness.values
            for perm in itertools.permutations(vals):
                assert chamber_label(Capacities(perm)) == rec.label

    def test_equal_capacity_families(self):
        # equal capacities c: small iff 3c < 1, C_5 iff 4c needs every area positive
        assert chamber_label(Capacities((F(24, 100),) * 4)) == "C_5"
        assert chamber_label(Capacities((F(2, 5),) * 4)) == "C_0"


class TestEnumeration:
    def test_counts_small(self):
        assert len(enumerate_chambers(1)) == 1
        assert len(enumerate_chambers(2)) == 1
        assert len(enumerate_chambers(3)) == 2
        assert len(enumerate_chambers(4)) == 6

    def test_count_five(self, chambers5):
        assert len(chambers5) == 33

    def test_inclusive_counts_pinned(self):
        # regression pins: the relaxed boundary creates no extra sign patterns
        assert len(enumerate_chambers(3, "inclusive")) == 2
        assert len(enumerate_chambers(4, "inclusive")) == 6

    def test_inclusive_count_five_pinned(self):
        assert len(enumerate_chambers(5, "inclusive")) == 33

    def test_four_ball_labels_cover_table(self):
        records = enumerate_chambers(4)
        assert [r.label for r in records] == [f"C_{k}" for k in (5, 4, 3, 2, 1, 0)]
        for rec in records:
            assert rec.signature.true_count() == int(rec.label.split("_")[1])

    def test_four_ball_true_bits_form_prefix(self):
        for rec in enumerate_chambers(4):
            bits = rec.signature.bits
            assert list(bits) == sorted(bits, reverse=True)

    def test_round_trip(self, chambers5):
        for n, records in ((3, enumerate_chambers(3)), (4, enumerate_chambers(4)), (5, chambers5)):
            assert len({r.signature.bits for r in records}) == len(records)
            for rec in records:
                assert chamber_signature(rec.witness).bits == rec.signature.bits

    def test_witnesses_admissible_and_sorted(self, chambers5):
        for rec in chambers5:
            vals = rec.witness.values
            assert is_admissible(rec.witness)
            assert list(vals) == sorted(vals, reverse=True)

    def test_witness_denominators_stay_small(self, chambers5):
        worst = max(x.denominator for rec in chambers5 for x in rec.witness.values)
        assert worst <= 16

    def test_scaling_never_loses_true_bits(self, chambers5):
        for rec in list(enumerate_chambers(4)) + list(chambers5):
            before = rec.signature.true_count()
            for t in (F(1, 2), F(3, 4), F(9, 10)):
                scaled = Capacities(tuple(t * v for v in rec.witness.values))
                assert chamber_signature(scaled).true_count() >= before

    def test_segment_monotone_chamber_index(self):
        records = {r.label: r for r in enumerate_chambers(4)}
        a, b = records["C_5"].witness.values, records["C_0"].witness.values
        counts = []
        for i in range(21):
            s = F(i, 20)
            mid = Capacities(tuple((1 - s) * x + s * y for x, y in zip(a, b)))
            counts.append(chamber_signature(mid).true_count())
        assert counts[0] == 5 and counts[-1] == 0
        assert all(c1 >= c2 for c1, c2 in zip(counts, counts[1:]))

    def test_record_json_shape(self, chambers5):
        rec = chambers5[0]
        blob = rec.to_json_dict()
        assert len(blob["signature"]) == 16
        assert blob["bits"] == rec.signature.bit_string()
        assert all(set(entry) == {"class", "positive"} for entry in blob["signature"])
        assert blob["label"] is None

    def test_wall_areas_match_bits(self, chambers5):
        for rec in chambers5[:5]:
            for wall, bit in rec.signature.items():
                assert (area(rec.witness, wall) > 0) == bit


class TestWitnessQuality:
    def test_expected_flag_witness(self):
        # the all-positive chamber of n=4 should get a readable witness
        rec = enumerate_chambers(4)[0]
        assert all(x.denominator <= 20 for x in rec.witness.values)

    def test_exceptional_positivity_of_all_witnesses(self):
        for rec in enumerate_chambers(4):
            for u in enumerate_exceptional(4):
                assert area(rec.witness, u) > 0
