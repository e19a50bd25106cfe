"""Tests for partition parsing."""

import pytest
from bicell.combinat import Partition
from bicell.parsing import PartitionParseError, parse_partition


def test_parse_comma_separated() -> None:
    """Test plain comma-separated parts."""
    assert parse_partition("3,2,1") == Partition((3, 2, 1))
    assert parse_partition("5") == Partition((5,))
    assert parse_partition(" 4 , 4 ") == Partition((4, 4))


def test_parse_sorts_parts() -> None:
    """Test that parts in any order are sorted non-increasing."""
    assert parse_partition("1,3,2") == Partition((3, 2, 1))


def test_parse_exponent_notation() -> None:
    """Test i^m as m parts equal to i."""
    assert parse_partition("2^3,1") == Partition((2, 2, 2, 1))
    assert parse_partition("1^2, 3") == Partition((3, 1, 1))
    assert parse_partition("3^1") == Partition((3,))


def test_parse_brackets() -> None:
    """Test that surrounding brackets or parentheses are accepted."""
    assert parse_partition("[1^2, 3]") == Partition((3, 1, 1))
    assert parse_partition("(3,3)") == Partition((3, 3))


def test_parse_unbalanced_brackets() -> None:
    """Test that brackets must open and close as a matching pair."""
    for text in ("(3,2]", "[3,2)", "(3,2", "3,2]", "(", "]"):
        with pytest.raises(PartitionParseError, match="Unbalanced"):
            parse_partition(text)


def test_parse_checks_total() -> None:
    """Test the sum check against n."""
    assert parse_partition("3,2", 5) == Partition((3, 2))
    with pytest.raises(PartitionParseError, match="expected 6"):
        parse_partition("3,2", 6)


def test_parse_empty() -> None:
    """Test that empty input is rejected."""
    with pytest.raises(PartitionParseError, match="empty"):
        parse_partition("")
    with pytest.raises(PartitionParseError, match="empty"):
        parse_partition("   ")


def test_parse_malformed() -> None:
    """Test that malformed terms are rejected without repair."""
    with pytest.raises(PartitionParseError, match="Malformed"):
        parse_partition("a")
    with pytest.raises(PartitionParseError, match="Malformed"):
        parse_partition("3,,2")
    with pytest.raises(PartitionParseError, match="Malformed"):
        parse_partition("-1,3")
    with pytest.raises(PartitionParseError, match="Malformed"):
        parse_partition("2.5")


def test_parse_zero_part() -> None:
    """Test that zero parts are rejected."""
    with pytest.raises(PartitionParseError, match="positive"):
        parse_partition("0,3")


def test_parse_error_is_value_error() -> None:
    """Test that callers catching ValueError also see parse errors."""
    with pytest.raises(ValueError):
        parse_partition("x")
