from fractions import Fraction

import pytest

from nodalmoduli.curves import Polarization
from nodalmoduli.feasibility import (
    feasible_interval,
    feasible_interval_all_k,
    in_region,
    in_region_all_k,
    necessary_conditions,
    region_scan,
    violated_conditions,
)
from nodalmoduli.gluing import GluingDatum
from nodalmoduli.rationals import RationalInterval
from oracles import grid_feasible

HALF = Polarization(Fraction(1, 2), Fraction(1, 2))


class TestNecessaryConditions:
    def test_chi_zero_balanced(self):
        assert necessary_conditions(GluingDatum(2, 2, 1, 1), HALF)

    def test_violated_upper(self):
        u = GluingDatum(2, 1, 2, 1)
        assert not necessary_conditions(u, HALF)
        assert "chi*w2 + r - k <= chi2" in violated_conditions(u, HALF)

    def test_satisfied_positive_chi(self):
        assert necessary_conditions(GluingDatum(2, 1, 2, 3), HALF)


class TestFeasibleInterval:
    def test_chi_zero_full_interval(self):
        report = feasible_interval(2, 2, 1, 1)
        assert report.feasible
        assert report.w1_interval == RationalInterval.open(0, 1)
        assert report.chi == 0

    def test_positive_chi_closed_interval(self):
        report = feasible_interval(2, 1, 2, 3)
        assert report.feasible
        assert report.w1_interval == RationalInterval.closed(
            Fraction(1, 3), Fraction(2, 3)
        )
        assert report.sample == HALF

    def test_infeasible_boundary(self):
        # chi = 1 > 0 but chi2 = 1 = r - k is not strictly above r - k.
        report = feasible_interval(2, 1, 2, 1)
        assert not report.feasible
        assert report.w1_interval.is_empty
        assert report.sample is None

    def test_negative_chi(self):
        report = feasible_interval(2, 2, 0, 1)
        assert report.feasible
        assert report.w1_interval == RationalInterval.open(0, 1)

    @pytest.mark.parametrize("k", [0, 3])
    def test_k_out_of_range(self, k):
        with pytest.raises(ValueError):
            feasible_interval(2, k, 1, 1)

    def test_r_out_of_range(self):
        with pytest.raises(ValueError):
            feasible_interval(1, 1, 1, 1)

    def test_report_json_keys(self):
        got = feasible_interval(2, 1, 2, 3).to_json()
        assert got["feasible"] is True
        assert got["w1_interval"] == {
            "lower": "1/3",
            "upper": "2/3",
            "lower_open": False,
            "upper_open": False,
        }
        assert got["sample"] == {"w1": "1/2", "w2": "1/2"}
        assert got["chi"] == 3


class TestInRegion:
    def test_positive_chi_member(self):
        assert in_region(3, 1, 1, 3)

    def test_negative_chi_member(self):
        assert in_region(3, 1, 0, 2)

    def test_negative_chi_nonmember(self):
        assert not in_region(3, 1, 5, -4)

    def test_all_k_examples(self):
        assert in_region_all_k(2, 1, 2)
        assert in_region_all_k(2, 2, 2)
        assert in_region_all_k(2, 0, 0)

    def test_all_k_sample_valid_for_every_k(self):
        for chi1 in range(-6, 7):
            for chi2 in range(-6, 7):
                for r in (2, 3, 4):
                    report = feasible_interval_all_k(r, chi1, chi2)
                    assert report.feasible == in_region(r, 1, chi1, chi2)
                    if report.feasible:
                        for k in range(1, r + 1):
                            u = GluingDatum(r, k, chi1, chi2)
                            assert necessary_conditions(u, report.sample)

    def test_monotone_in_k(self):
        for r in (2, 3, 4):
            for k in range(1, r):
                for chi1 in range(-8, 9):
                    for chi2 in range(-8, 9):
                        if in_region(r, k, chi1, chi2):
                            assert in_region(r, k + 1, chi1, chi2)


class TestGridOracle:
    def test_matches_oracle_small_box(self):
        for r in (2, 3):
            for k in range(1, r + 1):
                for chi1 in range(-5, 6):
                    for chi2 in range(-5, 6):
                        assert in_region(r, k, chi1, chi2) == grid_feasible(
                            r, k, chi1, chi2
                        ), (r, k, chi1, chi2)

    def test_sample_passes_conditions(self):
        for r in (2, 3):
            for k in range(1, r + 1):
                for chi1 in range(-5, 6):
                    for chi2 in range(-5, 6):
                        report = feasible_interval(r, k, chi1, chi2)
                        if report.feasible:
                            u = GluingDatum(r, k, chi1, chi2)
                            assert necessary_conditions(u, report.sample)


def _mirrored(interval: RationalInterval) -> RationalInterval:
    """Image of an interval under w -> 1 - w."""
    if interval.is_empty:
        return RationalInterval.empty()
    lower = None if interval.upper is None else 1 - interval.upper
    upper = None if interval.lower is None else 1 - interval.lower
    return RationalInterval(lower, upper, interval.upper_open, interval.lower_open)


class TestIntervalSymmetry:
    def test_full_rank_mirror(self):
        # Swapping the components mirrors the weight interval, for k = r only.
        for r in (2, 3):
            for chi1 in range(-6, 7):
                for chi2 in range(-6, 7):
                    direct = feasible_interval(r, r, chi1, chi2).w1_interval
                    swapped = feasible_interval(r, r, chi2, chi1).w1_interval
                    assert direct == _mirrored(swapped), (r, chi1, chi2)


class TestRegionScan:
    def test_feasible_rows(self):
        rows = region_scan(2, 1, (1, 1), (2, 3))
        assert [(chi1, chi2, ok) for chi1, chi2, ok, _ in rows] == [
            (1, 2, True),
            (1, 3, True),
        ]

    def test_chi_zero_path(self):
        rows = region_scan(2, 1, (0, 0), (2, 2))
        assert len(rows) == 1
        chi1, chi2, ok, interval = rows[0]
        assert ok and interval == RationalInterval.open(0, 1)

    def test_empty_range(self):
        assert region_scan(2, 1, (3, 2), (0, 5)) == []

    def test_row_order_is_chi1_major_ascending(self):
        rows = region_scan(2, 1, (-1, 1), (4, 5))
        assert [(a, b) for a, b, _, _ in rows] == [
            (-1, 4), (-1, 5), (0, 4), (0, 5), (1, 4), (1, 5),
        ]

    def test_cell_cap(self):
        with pytest.raises(ValueError):
            region_scan(2, 1, (0, 99), (0, 99), max_cells=100)
