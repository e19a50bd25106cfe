# -*- coding: utf-8 -*-
"""Exact combinatorial building blocks: partitions, permutations, polynomials, series."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb, factorial

# Exact rationals are the standard library's Fraction: lowest terms, denominator > 0.
Rational = Fraction

Scalar = int | Fraction


@dataclass(frozen=True)
class Partition:
    """Integer partition stored as a non-increasing tuple of positive parts.

    Doubles as a cycle-type and as a Young diagram.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate that parts are positive and non-increasing."""
        parts = tuple(int(part) for part in self.parts)
        if any(part < 1 for part in parts):
            raise ValueError(f"Partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"Partition parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Build a partition from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_multiplicities(cls, multiplicities: Mapping[int, int]) -> Partition:
        """Build a partition from the multiplicity form {i: m_i}."""
        parts: list[int] = []
        for size, count in multiplicities.items():
            if count < 0:
                raise ValueError(f"Negative multiplicity {count} for part {size}")
            parts.extend([size] * count)
        return cls.from_parts(parts)

    @cached_property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of parts, written l(lambda)."""
        return len(self.parts)

    @property
    def min_part(self) -> int:
        return self.parts[-1] if self.parts else 0

    @property
    def max_part(self) -> int:
        return self.parts[0] if self.parts else 0

    def multiplicities(self) -> dict[int, int]:
        """Return {i: m_i} for the parts that occur, in increasing part size."""
        counts: dict[int, int] = {}
        for part in reversed(self.parts):
            counts[part] = counts.get(part, 0) + 1
        return counts

    def conjugate(self) -> Partition:
        """Transpose of the Young diagram."""
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for part in self.parts if part > col) for col in range(self.parts[0]))
        )

    def sign(self) -> int:
        """Sign of any permutation of this cycle-type, (-1)^(n - l)."""
        return -1 if (self.n - self.length) % 2 else 1

    def cells(self) -> Iterator[tuple[int, int]]:
        """Yield the cells (i, j) of the Young diagram, 1-based, row by row."""
        for i, part in enumerate(self.parts, start=1):
            for j in range(1, part + 1):
                yield i, j

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(part) for part in self.parts) + ")"


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..n} in one-line form: images[i-1] is the image of i.

    Products compose right to left, so (a * b)(i) = a(b(i)).
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(image) for image in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"Not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> Permutation:
        """Build a permutation of [n] from disjoint cycles; omitted points are fixed."""
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            points = list(cycle)
            if seen.intersection(points) or len(set(points)) != len(points):
                raise ValueError(f"Cycles are not disjoint: {points}")
            seen.update(points)
            for index, point in enumerate(points):
                images[point - 1] = points[(index + 1) % len(points)]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.n != self.n:
            raise ValueError(f"Cannot compose permutations of sizes {self.n} and {other.n}")
        return Permutation(tuple(self.images[image - 1] for image in other.images))

    def inverse(self) -> Permutation:
        inverse = [0] * self.n
        for point, image in enumerate(self.images, start=1):
            inverse[image - 1] = point
        return Permutation(tuple(inverse))

    def conjugate_by(self, tau: Permutation) -> Permutation:
        """Return tau * self * tau^-1, which has the same cycle-type."""
        return tau * self * tau.inverse()

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its minimum, ordered by that minimum."""
        seen = [False] * (self.n + 1)
        cycles: list[tuple[int, ...]] = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cycle = []
            point = start
            while not seen[point]:
                seen[point] = True
                cycle.append(point)
                point = self.images[point - 1]
            cycles.append(tuple(cycle))
        return cycles

    def cycle_type(self) -> Partition:
        return Partition.from_parts(len(cycle) for cycle in self.cycles())

    def num_cycles(self) -> int:
        """kappa(sigma), the number of disjoint cycles."""
        return len(self.cycles())

    def __str__(self) -> str:
        return "".join("(" + " ".join(str(p) for p in cycle) + ")" for cycle in self.cycles())


@dataclass(frozen=True)
class RatPoly:
    """Univariate polynomial in x with exact rational coefficients.

    ``coeffs[d]`` is the coefficient of x^d; trailing zeros are stripped so the
    zero polynomial is the empty tuple and the leading coefficient is never 0.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def constant(cls, value: Scalar) -> RatPoly:
        return cls((Fraction(value),))

    @classmethod
    def x(cls) -> RatPoly:
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, degree: int, value: Scalar = 1) -> RatPoly:
        return cls((Fraction(0),) * degree + (Fraction(value),))

    @classmethod
    def from_terms(cls, terms: Mapping[int, Scalar]) -> RatPoly:
        """Build from a sparse {degree: coefficient} mapping."""
        if not terms:
            return cls()
        if min(terms) < 0:
            raise ValueError("Polynomial degrees must be nonnegative")
        coeffs = [Fraction(0)] * (max(terms) + 1)
        for degree, value in terms.items():
            coeffs[degree] += Fraction(value)
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return Fraction(0)

    def terms(self) -> list[tuple[int, Fraction]]:
        """Nonzero (degree, coefficient) pairs in increasing degree."""
        return [(degree, c) for degree, c in enumerate(self.coeffs) if c != 0]

    def support(self) -> list[int]:
        return [degree for degree, _ in self.terms()]

    def __call__(self, value: Scalar) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> RatPoly:
        return RatPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: RatPoly | Scalar) -> RatPoly:
        other = _as_poly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(tuple(self.coefficient(d) + other.coefficient(d) for d in range(size)))

    __radd__ = __add__

    def __sub__(self, other: RatPoly | Scalar) -> RatPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: Scalar) -> RatPoly:
        return _as_poly(other) - self

    def __mul__(self, other: RatPoly | Scalar) -> RatPoly:
        if not isinstance(other, RatPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            scale = Fraction(other)
            return RatPoly(tuple(c * scale for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return RatPoly(tuple(product))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> RatPoly:
        divisor = Fraction(other)
        if divisor == 0:
            raise ZeroDivisionError("Polynomial division by zero")
        return RatPoly(tuple(c / divisor for c in self.coeffs))

    def __str__(self) -> str:
        """Compact form, highest degree first, e.g. ``(1/4)x^4+(3/4)x^2``."""
        if not self.coeffs:
            return "0"
        pieces: list[str] = []
        for degree, c in reversed(self.terms()):
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if magnitude.denominator == 1:
                number = str(magnitude.numerator)
            else:
                number = f"({magnitude.numerator}/{magnitude.denominator})"
            if degree == 0:
                body = number
            else:
                power = "x" if degree == 1 else f"x^{degree}"
                body = power if magnitude == 1 else number + power
            pieces.append(sign + body)
        text = "".join(pieces)
        return text[1:] if text.startswith("+") else text


def _as_poly(value: RatPoly | Scalar) -> RatPoly:
    return value if isinstance(value, RatPoly) else RatPoly.constant(value)


@dataclass(frozen=True)
class YSeries:
    """Power series in y truncated at y^degree, with RatPoly (in x) coefficients."""

    degree: int
    coeffs: tuple[RatPoly, ...] = ()

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError(f"Truncation degree must be nonnegative, got {self.degree}")
        coeffs = list(self.coeffs[: self.degree + 1])
        coeffs.extend(RatPoly() for _ in range(self.degree + 1 - len(coeffs)))
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_constants(cls, values: Iterable[Scalar], degree: int) -> YSeries:
        return cls(degree, tuple(RatPoly.constant(v) for v in values))

    @classmethod
    def one(cls, degree: int) -> YSeries:
        return cls(degree, (RatPoly.constant(1),))

    def coefficient(self, k: int) -> RatPoly:
        """[y^k] of the series; zero beyond the truncation degree."""
        if 0 <= k <= self.degree:
            return self.coeffs[k]
        return RatPoly()

    def at_x(self, value: Scalar) -> tuple[Fraction, ...]:
        """Evaluate every coefficient at x = value."""
        return tuple(c(value) for c in self.coeffs)

    def __add__(self, other: YSeries) -> YSeries:
        degree = min(self.degree, other.degree)
        return YSeries(degree, tuple(self.coeffs[k] + other.coeffs[k] for k in range(degree + 1)))

    def __mul__(self, other: YSeries | RatPoly | Scalar) -> YSeries:
        if not isinstance(other, YSeries):
            return YSeries(self.degree, tuple(c * other for c in self.coeffs))
        degree = min(self.degree, other.degree)
        product = [RatPoly() for _ in range(degree + 1)]
        for i in range(degree + 1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            for j in range(degree + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    product[i + j] = product[i + j] + a * b
        return YSeries(degree, tuple(product))

    __rmul__ = __mul__


@lru_cache(maxsize=None)
def _partition_tuples(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    result: list[tuple[int, ...]] = []
    for first in range(min(n, max_part), 0, -1):
        result.extend((first,) + rest for rest in _partition_tuples(n - first, first))
    return tuple(result)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, starting from (n).

    Args:
        n: Nonnegative integer.

    Returns:
        List of partitions; for n = 0 the single empty partition.

    Raises:
        ValueError: If n is negative.
    """
    if n < 0:
        raise ValueError(f"Cannot partition a negative integer: {n}")
    return [Partition(parts) for parts in _partition_tuples(n, n)]


def z_of(lam: Partition) -> int:
    """z_lambda = prod i^{m_i} m_i!, the centralizer order of the class."""
    z = 1
    for size, count in lam.multiplicities().items():
        z *= size**count * factorial(count)
    return z


def class_size(lam: Partition) -> int:
    """Number of permutations of [n] with cycle-type lambda, n!/z_lambda."""
    return factorial(lam.n) // z_of(lam)


@lru_cache(maxsize=None)
def stirling_first_unsigned(n: int, k: int) -> int:
    """Signless Stirling number of the first kind: permutations of [n] with k cycles."""
    if n < 0 or k < 0:
        raise ValueError(f"Stirling arguments must be nonnegative: ({n}, {k})")
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return stirling_first_unsigned(n - 1, k - 1) + (n - 1) * stirling_first_unsigned(n - 1, k)


def binomial(top: int, k: int) -> int:
    """Generalized binomial C(top, k) for any integer top; 0 when k < 0."""
    if k < 0:
        return 0
    if top >= 0:
        return comb(top, k)
    falling = 1
    for i in range(k):
        falling *= top - i
    return falling // factorial(k)


@lru_cache(maxsize=None)
def binomial_poly(shift: int, p: int) -> RatPoly:
    """C(x + shift, p) as a polynomial in x, via the falling factorial.

    Args:
        shift: Any integer offset of the top argument.
        p: Nonnegative bottom argument.

    Returns:
        (x+shift)(x+shift-1)...(x+shift-p+1)/p!, the constant 1 when p = 0.
    """
    if p < 0:
        raise ValueError(f"Binomial bottom argument must be nonnegative, got {p}")
    result = RatPoly.constant(1)
    for i in range(p):
        result = result * RatPoly((Fraction(shift - i), Fraction(1)))
    return result / factorial(p)


def one_plus_y_power(exponent_shift: int, degree: int) -> YSeries:
    """(1+y)^(x + exponent_shift) truncated at y^degree.

    The coefficient of y^k is the polynomial C(x + exponent_shift, k).
    """
    return YSeries(degree, tuple(binomial_poly(exponent_shift, k) for k in range(degree + 1)))
