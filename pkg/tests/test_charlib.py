"""Tests for symmetric-group characters and the two-cycle closed forms."""

from math import factorial

import pytest
from bicell.charlib import (
    CharacterRegimeError,
    cell_stats,
    chi_face_type,
    chi_wdd_closed,
    dimension,
    face_type_support,
    mn_character,
)
from bicell.combinat import Partition, class_size, partitions_of


def P(*parts: int) -> Partition:
    return Partition.from_parts(parts)


def test_cell_stats() -> None:
    """Test hook lengths and contents of (2,2)."""
    stats = cell_stats(P(2, 2))
    assert stats.hooks == (3, 2, 2, 1)
    assert stats.contents == (0, 1, -1, 0)


def test_dimension_examples() -> None:
    """Test the hook length formula."""
    assert dimension(P(2, 1)) == 2
    assert dimension(P(5)) == 1
    assert dimension(P(2, 2)) == 2
    assert dimension(P(3, 2)) == 5


def test_dimension_squares_sum_to_factorial() -> None:
    """Test sum of (f^lambda)^2 = n!."""
    for n in range(1, 11):
        assert sum(dimension(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_dimension_is_character_at_identity() -> None:
    """Test f^lambda = chi^lambda(1^n)."""
    for n in range(1, 8):
        identity = Partition((1,) * n)
        for lam in partitions_of(n):
            assert mn_character(lam, identity) == dimension(lam)


def test_mn_character_examples() -> None:
    """Test known character values."""
    for mu in partitions_of(5):
        assert mn_character(P(5), mu) == 1
    for n in range(1, 8):
        assert mn_character(Partition((1,) * n), P(n)) == (-1) ** (n - 1)
    assert mn_character(P(2, 1), P(3)) == -1
    assert mn_character(P(3, 2), P(5)) == 0
    assert mn_character(P(4), P(2, 2)) == 1
    assert mn_character(P(1, 1, 1), P(3)) == 1


def test_mn_character_size_mismatch() -> None:
    """Test that partitions of different sizes are rejected."""
    with pytest.raises(ValueError, match="same size"):
        mn_character(P(2, 1), P(2))


def test_character_table_orthogonality() -> None:
    """Test sum over classes of |C_mu| chi^lambda chi^lambda' = n! [lambda = lambda']."""
    for n in range(1, 9):
        shapes = partitions_of(n)
        for lam in shapes:
            for other in shapes:
                total = sum(
                    class_size(mu) * mn_character(lam, mu) * mn_character(other, mu)
                    for mu in shapes
                )
                assert total == (factorial(n) if lam == other else 0)


def test_conjugate_symmetry() -> None:
    """Test chi^{lambda'}(mu) = sign(mu) chi^lambda(mu)."""
    for n in range(1, 9):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert mn_character(lam.conjugate(), mu) == mu.sign() * mn_character(lam, mu)


def test_chi_face_type_examples() -> None:
    """Test single-row, family-two and vanishing shapes."""
    assert chi_face_type(P(8), 3, 8) == 1
    assert chi_face_type(P(4, 4), 3, 8) == -1
    assert chi_face_type(P(3, 2, 2, 1), 3, 8) == 0


def test_chi_face_type_matches_mn() -> None:
    """Test the closed form against the recursion on every shape up to n = 12."""
    for n in range(4, 13):
        for p in range(1, (n - 2) // 2 + 1):
            face = P(p, n - p)
            for lam in partitions_of(n):
                assert chi_face_type(lam, p, n) == mn_character(lam, face), (lam, p, n)


def test_face_type_support_families() -> None:
    """Test the nonzero shapes for [2,4] and their families."""
    support = face_type_support(2, 6)
    assert {lam.parts: match.family for lam, match in support.items()} == {
        (6,): 1,
        (5, 1): 1,
        (2, 1, 1, 1, 1): 1,
        (1, 1, 1, 1, 1, 1): 1,
        (3, 3): 2,
        (2, 2, 2): 2,
        (4, 2): 3,
        (2, 2, 1, 1): 4,
    }


def test_face_type_support_closed_under_transpose() -> None:
    """Test that transposing a supported shape keeps it supported with sign (-1)^n."""
    for n in range(4, 13):
        for p in range(1, (n - 2) // 2 + 1):
            support = face_type_support(p, n)
            for lam, match in support.items():
                assert support[lam.conjugate()].value == (-1) ** n * match.value


def test_chi_face_type_out_of_regime() -> None:
    """Test that n < 2p+2 is rejected with a pointer to the recursion."""
    with pytest.raises(CharacterRegimeError, match="mn_character"):
        chi_face_type(P(5), 2, 5)
    with pytest.raises(CharacterRegimeError):
        chi_face_type(P(3), 0, 3)


def test_chi_wdd_closed_examples() -> None:
    """Test closed-form values on classes with all cycles longer than p."""
    assert chi_wdd_closed(P(7), P(4, 3), 2) == 1
    assert chi_wdd_closed(Partition((1,) * 7), P(4, 3), 2) == (-1) ** (7 - 2)
    assert chi_wdd_closed(P(4, 3), P(4, 3), 2) == 1
    assert chi_wdd_closed(P(4, 2, 2), P(5, 3), 2) == 1


def test_chi_wdd_closed_matches_mn() -> None:
    """Test the closed form on every supported shape and class up to n = 12."""
    for n in range(4, 13):
        for p in range(1, (n - 2) // 2 + 1):
            classes = [mu for mu in partitions_of(n) if mu.min_part >= p + 1]
            for lam, match in face_type_support(p, n).items():
                for mu in classes:
                    value = chi_wdd_closed(lam, mu, p)
                    assert value == mn_character(lam, mu), (lam, mu, p)
                    if match.family in (3, 4):
                        assert value == 0


def test_chi_wdd_closed_errors() -> None:
    """Test rejection of short cycles and shapes outside the support."""
    with pytest.raises(CharacterRegimeError, match="min"):
        chi_wdd_closed(P(6), P(3, 2, 1), 2)
    with pytest.raises(CharacterRegimeError, match="zero character"):
        chi_wdd_closed(P(3, 2, 1), P(6), 2)
