"""Verifier and primitive-type behaviour."""

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from diskmerge.core import (Assignment, Disk, DisjointnessMode, FormatError,
                            Instance, Point, aggregate_radius, cardinality,
                            format_rational, neighbor_sequence,
                            parse_rational, prefix_aggregate_radius,
                            verify_proper, verify_uproper)

MAX = DisjointnessMode.MAX
SUM = DisjointnessMode.SUM


def mk(*rows):
    return Instance([Disk(i + 1, Point(F(x), F(y)), F(r))
                     for i, (x, y, r) in enumerate(rows)])


rationals = st.fractions(max_denominator=1000)


class TestRationals:
    @given(rationals)
    def test_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q

    def test_parse_forms(self):
        assert parse_rational("3") == 3
        assert parse_rational("-1/2") == F(-1, 2)
        assert parse_rational(5) == 5
        assert parse_rational(F(2, 4)) == F(1, 2)

    def test_format_lowest_terms(self):
        assert format_rational(F(2, 4)) == "1/2"
        assert format_rational(F(3, 1)) == "3"
        assert format_rational(F(-6, 4)) == "-3/2"

    @pytest.mark.parametrize("bad", ["", "1/0", "a", "1.5", 1.5, None])
    def test_parse_rejects(self, bad):
        with pytest.raises(FormatError):
            parse_rational(bad)


class TestInstance:
    def test_ids_must_be_consecutive(self):
        with pytest.raises(FormatError):
            Instance([Disk(2, Point(F(0), F(0)), F(1))])

    def test_duplicate_ids_rejected(self):
        with pytest.raises(FormatError):
            Instance([Disk(1, Point(F(0), F(0)), F(1)),
                      Disk(1, Point(F(1), F(0)), F(1))])

    def test_non_positive_radius_rejected(self):
        with pytest.raises(FormatError):
            mk((0, 0, 0))

    def test_empty_instance_allowed(self):
        assert mk().n == 0

    def test_neighbor_sequence_orders_by_distance_then_id(self):
        inst = mk((0, 0, 1), (3, 0, 1), (-3, 0, 1), (1, 0, 1))
        assert neighbor_sequence(inst, 1) == (4, 2, 3)

    def test_prefix_aggregate_strictly_increasing(self):
        inst = mk((0, 0, 2), (1, 0, 1), (2, 0, F(1, 2)))
        vals = [prefix_aggregate_radius(inst, 1, j) for j in range(3)]
        assert vals == sorted(set(vals))
        assert vals[0] == 2 and vals[-1] == F(7, 2)


class TestAssignment:
    def test_rejects_non_idempotent(self):
        inst = mk((0, 0, 1), (1, 0, 1), (5, 0, 1))
        # 1 -> 2 but 2 -> 3: a merge chain, not an assignment
        report = verify_proper(inst, Assignment((2, 3, 3)))
        assert not report.ok
        assert any("idempotent" in v for v in report.violations)

    def test_selected_and_merged(self):
        a = Assignment((1, 1, 3))
        assert a.selected() == (1, 3)
        assert a.merged_into(1) == (2,)
        assert cardinality(a) == 2


class TestVerifyProper:
    def test_accepts_chain_merge(self):
        # each merge becomes reachable only after the previous one
        inst = mk((0, 0, 2), (F(3, 2), 0, 1), (F(5, 2), 0, 1))
        report = verify_proper(inst, Assignment((1, 1, 1)))
        assert report.ok and report.cardinality == 1

    def test_rejects_out_of_reach(self):
        inst = mk((0, 0, 1), (5, 0, 1))
        report = verify_proper(inst, Assignment((1, 1)))
        assert not report.ok

    def test_reach_is_strict(self):
        # second centre exactly on the boundary: not merged
        inst = mk((0, 0, 1), (1, 0, 1))
        assert not verify_proper(inst, Assignment((1, 1))).ok
        assert verify_uproper(inst, Assignment((1, 1))).ok

    def test_rejects_skipped_prefix(self):
        # disk 3 is closer to 1 than disk 2, so merging 2 alone is invalid
        inst = mk((0, 0, 2), (F(3, 2), 0, 1), (1, 0, 1), (9, 0, 8))
        assert not verify_proper(inst, Assignment((1, 1, 4, 4))).ok
        assert verify_proper(inst, Assignment((1, 4, 1, 4))).ok

    def test_aggregate_disjointness_max(self):
        # disk 1 grows to radius 3 by absorbing disk 2; disk 3 at
        # distance 5/2 is then inside the aggregate
        inst = mk((0, 0, 2), (1, 0, 1), (F(5, 2), 0, F(1, 4)))
        report = verify_proper(inst, Assignment((1, 1, 3)), MAX)
        assert not report.ok
        assert any("centre-disjoint" in v for v in report.violations)

    def test_disjointness_boundary_contact_allowed(self):
        inst = mk((0, 0, 2), (1, 0, 1), (3, 0, F(1, 4)))
        assert verify_proper(inst, Assignment((1, 1, 3)), MAX).ok

    def test_sum_mode_is_stricter(self):
        inst = mk((0, 0, 2), (3, 0, 2))
        assert verify_proper(inst, Assignment((1, 2)), MAX).ok
        assert not verify_proper(inst, Assignment((1, 2)), SUM).ok

    def test_shape_mismatch(self):
        inst = mk((0, 0, 1))
        assert not verify_proper(inst, Assignment((1, 2))).ok


class TestVerifyUproper:
    def test_allows_arbitrary_merge_sets(self):
        # merging the far disk while skipping the nearer one is fine
        inst = mk((0, 0, 2), (1, 0, 1), (F(-3, 2), 0, 1), (3, 0, 2))
        a = Assignment((1, 4, 1, 4))
        assert not verify_proper(inst, a).ok
        assert verify_uproper(inst, a).ok

    def test_distance_order_still_constrains_reach(self):
        # the far disk is reachable only through the near one's radius
        inst = mk((0, 0, 1), (F(3, 2), 0, 1), (F(1, 2), 0, 1))
        assert verify_uproper(inst, Assignment((1, 1, 1))).ok
        assert not verify_uproper(inst, Assignment((1, 1, 3))).ok

    def test_aggregate_disjointness_applies(self):
        inst = mk((0, 0, 2), (1, 0, 1), (F(5, 2), 0, F(1, 4)))
        assert not verify_uproper(inst, Assignment((1, 1, 3)), MAX).ok


class TestAggregateRadius:
    def test_sums_merged_radii(self):
        inst = mk((0, 0, 2), (1, 0, 1), (F(5, 2), 0, F(1, 2)))
        a = Assignment((1, 1, 1))
        assert aggregate_radius(inst, a, 1) == F(7, 2)
