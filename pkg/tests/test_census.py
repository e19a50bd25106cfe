"""Tests for the census table."""

from bicell.bicellular import BicellularInstance
from bicell.census import build_census, census_row
from bicell.combinat import Partition
from bicell.schemas import Method


def test_census_row() -> None:
    """Test one row with its genus counts and checks."""
    row = census_row(BicellularInstance(5, 2, Partition((5,))))
    assert row.n == 5
    assert row.p == 2
    assert row.mu == "(5)"
    assert row.poly == "(1/4)x^4+(3/4)x^2"
    assert row.genus_counts == "0:6;1:18"
    assert row.imag_axis is True
    assert row.log_concave is True
    assert row.method is Method.CLOSED
    assert row.ms is None


def test_census_row_timings() -> None:
    """Test that wall time is only recorded on request."""
    row = census_row(BicellularInstance(6, 2, Partition((3, 3))), timings=True)
    assert row.ms is not None
    assert row.ms >= 0


def test_build_census_order() -> None:
    """Test one row per closed-form instance ordered by n, p, then mu."""
    rows = build_census(4)
    assert [(row.n, row.p, row.mu) for row in rows] == [
        (2, 1, "(2)"),
        (3, 1, "(3)"),
        (4, 1, "(4)"),
        (4, 1, "(2,2)"),
        (4, 2, "(4)"),
    ]
    assert [row.poly for row in rows[:2]] == ["x", "x^2"]


def test_build_census_parallel_matches_serial() -> None:
    """Test that worker processes do not change the rows."""
    assert build_census(6, threads=2) == build_census(6)
