"""Tests for partitions, permutations, exact polynomials and series."""

from fractions import Fraction
from math import factorial

import pytest
from bicell.combinat import (
    Partition,
    Permutation,
    RatPoly,
    YSeries,
    binomial,
    binomial_poly,
    class_size,
    one_plus_y_power,
    partitions_of,
    stirling_first_unsigned,
    z_of,
)
from hypothesis import given, settings
from hypothesis import strategies as st

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys = st.lists(fractions, max_size=5).map(lambda cs: RatPoly(tuple(cs)))


def _count_partitions(n: int, smallest: int = 1) -> int:
    if n == 0:
        return 1
    return sum(_count_partitions(n - k, k) for k in range(smallest, n + 1))


def test_partitions_of_four() -> None:
    """Test reverse-lexicographic listing of the partitions of 4."""
    assert [p.parts for p in partitions_of(4)] == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]


def test_partitions_of_small() -> None:
    """Test the degenerate sizes 0 and 1."""
    assert partitions_of(0) == [Partition(())]
    assert partitions_of(1) == [Partition((1,))]


def test_partitions_of_counts() -> None:
    """Test partition counts against an independent recurrence."""
    assert len(partitions_of(6)) == 11
    for n in range(13):
        parts = partitions_of(n)
        assert len(parts) == _count_partitions(n)
        assert len(set(parts)) == len(parts)
        assert all(p.n == n for p in parts)


def test_partitions_of_negative() -> None:
    """Test that negative sizes are rejected."""
    with pytest.raises(ValueError, match="negative"):
        partitions_of(-1)


def test_partition_validation() -> None:
    """Test that parts must be positive and non-increasing."""
    with pytest.raises(ValueError, match="positive"):
        Partition((2, 0))
    with pytest.raises(ValueError, match="non-increasing"):
        Partition((1, 2))
    assert Partition.from_parts([1, 3, 2]).parts == (3, 2, 1)


def test_partition_multiplicities_round_trip() -> None:
    """Test conversion between parts and multiplicity form."""
    lam = Partition((3, 2, 2, 1, 1, 1))
    assert lam.multiplicities() == {1: 3, 2: 2, 3: 1}
    assert Partition.from_multiplicities(lam.multiplicities()) == lam
    assert lam.n == 10
    assert lam.length == 6
    assert lam.min_part == 1
    assert lam.max_part == 3


def test_partition_conjugate_and_sign() -> None:
    """Test transposition of Young diagrams and the sign of a cycle-type."""
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    assert Partition((4, 3)).conjugate() == Partition((2, 2, 2, 1))
    for lam in partitions_of(7):
        assert lam.conjugate().conjugate() == lam
    assert Partition((3,)).sign() == 1
    assert Partition((2, 1)).sign() == -1
    assert str(Partition((3, 2, 1))) == "(3,2,1)"


def test_z_of_examples() -> None:
    """Test centralizer orders."""
    assert z_of(Partition((2, 1, 1))) == 4
    assert z_of(Partition((5,))) == 5
    assert z_of(Partition((1,) * 5)) == 120


def test_class_size_examples() -> None:
    """Test conjugacy class sizes."""
    assert class_size(Partition((2, 1, 1))) == 6
    assert class_size(Partition((3,))) == 2
    assert class_size(Partition((2, 2))) == 3


def test_class_sizes_sum_to_factorial() -> None:
    """Test that class sizes partition S_n and z * |C| = n!."""
    for n in range(1, 13):
        assert sum(class_size(lam) for lam in partitions_of(n)) == factorial(n)
        for lam in partitions_of(n):
            assert z_of(lam) * class_size(lam) == factorial(n)


def test_stirling_examples() -> None:
    """Test signless Stirling numbers of the first kind."""
    assert [stirling_first_unsigned(3, k) for k in (1, 2, 3)] == [2, 3, 1]
    assert stirling_first_unsigned(4, 2) == 11
    assert stirling_first_unsigned(6, 6) == 1
    assert stirling_first_unsigned(4, 0) == 0
    assert stirling_first_unsigned(3, 5) == 0
    for n in range(1, 13):
        assert sum(stirling_first_unsigned(n, k) for k in range(1, n + 1)) == factorial(n)


def test_generalized_binomial() -> None:
    """Test binomials with negative top argument."""
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0
    assert binomial(-1, 3) == -1
    assert binomial(-2, 2) == 3
    assert binomial(4, -1) == 0


def test_binomial_poly_examples() -> None:
    """Test C(x+shift, p) as a polynomial."""
    assert binomial_poly(0, 1) == RatPoly.x()
    assert binomial_poly(1, 2) == RatPoly((0, Fraction(1, 2), Fraction(1, 2)))
    assert binomial_poly(-1, 3) == RatPoly((-1, Fraction(11, 6), -1, Fraction(1, 6)))
    assert binomial_poly(7, 0) == RatPoly.constant(1)
    assert binomial_poly(2, 3)(5) == 35


def test_one_plus_y_power_examples() -> None:
    """Test (1+y)^(x+shift) truncated in y."""
    series = one_plus_y_power(0, 2)
    assert series.coeffs == (RatPoly.constant(1), RatPoly.x(), binomial_poly(0, 2))
    assert one_plus_y_power(-1, 1).coeffs == (RatPoly.constant(1), RatPoly((-1, 1)))
    assert one_plus_y_power(0, 3).at_x(3) == (1, 3, 3, 1)


def test_ratpoly_normalization_and_terms() -> None:
    """Test trailing zeros are stripped and the sparse view skips zeros."""
    poly = RatPoly((0, 0, Fraction(3, 4), 0, Fraction(1, 4), 0, 0))
    assert poly.degree == 4
    assert poly.terms() == [(2, Fraction(3, 4)), (4, Fraction(1, 4))]
    assert poly.support() == [2, 4]
    assert RatPoly((0, 0)).is_zero()
    assert RatPoly().degree == -1


def test_ratpoly_str() -> None:
    """Test the compact text form."""
    poly = RatPoly.from_terms({4: Fraction(1, 4), 2: Fraction(3, 4)})
    assert str(poly) == "(1/4)x^4+(3/4)x^2"
    assert str(RatPoly.monomial(2)) == "x^2"
    assert str(RatPoly((1, -1))) == "-x+1"
    assert str(RatPoly()) == "0"
    assert str(RatPoly.from_terms({3: 2, 0: Fraction(-1, 3)})) == "2x^3-(1/3)"


def test_permutation_cycles() -> None:
    """Test cycle extraction and cycle-type."""
    sigma = Permutation.from_cycles(5, [(1, 2), (3, 4, 5)])
    assert sigma.images == (2, 1, 4, 5, 3)
    assert sigma.cycles() == [(1, 2), (3, 4, 5)]
    assert sigma.cycle_type() == Partition((3, 2))
    assert sigma.num_cycles() == 2
    assert Permutation.identity(4).num_cycles() == 4
    assert str(sigma) == "(1 2)(3 4 5)"


def test_permutation_composition_applies_right_factor_first() -> None:
    """Test (a * b)(i) = a(b(i))."""
    a = Permutation.from_cycles(3, [(1, 2)])
    b = Permutation.from_cycles(3, [(2, 3)])
    product = a * b
    assert product(2) == a(b(2)) == 3
    assert product(3) == a(b(3)) == 1
    assert product.cycles() == [(1, 2, 3)]
    assert (a * a.inverse()) == Permutation.identity(3)


def test_permutation_validation() -> None:
    """Test that non-bijections and overlapping cycles are rejected."""
    with pytest.raises(ValueError, match="Not a permutation"):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError, match="disjoint"):
        Permutation.from_cycles(3, [(1, 2), (2, 3)])
    with pytest.raises(ValueError, match="compose"):
        Permutation.identity(2) * Permutation.identity(3)


def test_yseries_truncates() -> None:
    """Test that products drop terms above the truncation degree."""
    a = YSeries.from_constants([1, 1], 2)
    cube = a * a * a
    assert cube.at_x(0) == (1, 3, 3)
    assert cube.coefficient(3) == RatPoly()


def test_ratpoly_times_yseries() -> None:
    """Test that a polynomial on the left scales every coefficient of a series."""
    series = YSeries.from_constants([1, 2], 1)
    product = RatPoly.x() * series
    assert product == YSeries(1, (RatPoly.x(), RatPoly.monomial(1, 2)))
    assert product == series * RatPoly.x()
    with pytest.raises(TypeError):
        _ = RatPoly.x() * 1.5


@given(polys, polys)
def test_ratpoly_add_sub_inverse(a: RatPoly, b: RatPoly) -> None:
    """Test (a + b) - b = a exactly."""
    assert (a + b) - b == a


@given(polys, fractions.filter(lambda f: f != 0))
def test_ratpoly_scale_inverse(a: RatPoly, c: Fraction) -> None:
    """Test (a * c) / c = a exactly."""
    assert (a * c) / c == a


@given(polys, polys, fractions)
def test_ratpoly_product_evaluates(a: RatPoly, b: RatPoly, x: Fraction) -> None:
    """Test that evaluation is a ring homomorphism."""
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@settings(max_examples=50)
@given(
    st.integers(min_value=0, max_value=4),
    st.lists(polys, min_size=1, max_size=5),
    st.lists(polys, min_size=1, max_size=5),
    fractions,
)
def test_yseries_product_matches_truncated_convolution(
    degree: int, left: list[RatPoly], right: list[RatPoly], x: Fraction
) -> None:
    """Test series multiplication against full multiplication then truncation."""
    a = YSeries(degree, tuple(left))
    b = YSeries(degree, tuple(right))
    values_a = a.at_x(x)
    values_b = b.at_x(x)
    full = [Fraction(0)] * (2 * degree + 1)
    for i, u in enumerate(values_a):
        for j, v in enumerate(values_b):
            full[i + j] += u * v
    assert (a * b).at_x(x) == tuple(full[: degree + 1])
    assert (a * b).at_x(x) == (b * a).at_x(x)
