"""Tests for the order-preserving process map."""

from bicell.parallel import chunk_size, ordered_map


def test_ordered_map_serial() -> None:
    """Test in-process mapping."""
    assert ordered_map(abs, [-1, 2, -3]) == [1, 2, 3]
    assert ordered_map(abs, []) == []


def test_ordered_map_processes_keep_order() -> None:
    """Test that results come back in input order from worker processes."""
    items = list(range(-20, 20))
    assert ordered_map(abs, items, threads=3) == [abs(i) for i in items]


def test_chunk_size() -> None:
    """Test that large maps are batched and small ones are not."""
    assert chunk_size(40, 3) == 3
    assert chunk_size(5, 4) == 1
    assert chunk_size(100_000, 4) == 6250
