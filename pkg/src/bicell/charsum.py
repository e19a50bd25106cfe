# -*- coding: utf-8 -*-
"""Counting factorizations through character sums.

For classes C_1..C_t of S_n, the number of tuples (s_1..s_t) with s_i in C_i
whose product has exactly m cycles is

    xi_{n,m} = prod|C_i| * sum_k c(m+k, m) (-1)^k / (m+k)! * W_{n,m+k}

where W_{n,r} = sum_lambda (c_{lambda,r} / (f^lambda)^(t-1)) prod_i chi^lambda(C_i)
and c_{lambda,r} counts fillings of lambda that use every value 1..r.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from bicell.charlib import (
    cell_stats,
    chi_wdd_closed,
    dimension,
    face_type_support,
    mn_character,
)
from bicell.combinat import (
    Partition,
    RatPoly,
    binomial,
    class_size,
    partitions_of,
    stirling_first_unsigned,
)

logger = logging.getLogger(__name__)


class IntegralityError(RuntimeError):
    """A tuple count failed to come out as a nonnegative integer."""


@dataclass(frozen=True)
class ClassList:
    """Conjugacy classes C_1..C_t of S_n, given by their cycle-types."""

    n: int
    classes: tuple[Partition, ...]

    def __post_init__(self) -> None:
        classes = tuple(self.classes)
        if not classes:
            raise ValueError("A class list needs at least one class")
        for cycle_type in classes:
            if cycle_type.n != self.n:
                raise ValueError(f"Class {cycle_type} is not a partition of {self.n}")
        object.__setattr__(self, "classes", classes)

    @property
    def t(self) -> int:
        return len(self.classes)

    def total_size(self) -> int:
        """prod |C_i|, the number of tuples over all products."""
        return prod(class_size(cycle_type) for cycle_type in self.classes)


def m_factor(lam: Partition, m: int) -> Fraction:
    """prod over cells of (m + c(u)) / h(u): semistandard fillings with entries <= m."""
    stats = cell_stats(lam)
    return Fraction(prod(m + c for c in stats.contents), prod(stats.hooks))


def c_factor(lam: Partition, m: int) -> Fraction:
    """Fillings using every value 1..m, by inclusion-exclusion on m_factor."""
    return sum(
        (binomial(m, d) * (-1) ** d * m_factor(lam, m - d) for d in range(m + 1)),
        Fraction(0),
    )


def cf_ratio(lam: Partition, r: int) -> Fraction:
    """c_factor(lam, r) / f^lambda, evaluated without dividing by the dimension."""
    contents = cell_stats(lam).contents
    total = sum(
        (-1) ** d * binomial(r, d) * prod(r - d + c for c in contents) for d in range(r + 1)
    )
    return Fraction(total, factorial(lam.n))


def cf_ratio_hook(j: int, n: int, r: int) -> Fraction:
    """cf_ratio for the hook [1^j, n-j]."""
    if not 0 <= j <= n - 1:
        raise ValueError(f"Hook leg j={j} out of range for n={n}")
    return Fraction(
        sum((-1) ** d * binomial(r, d) * binomial(r - d + n - j - 1, n) for d in range(r + 1))
    )


def cf_ratio_family2(j: int, k: int, p: int, n: int, r: int) -> Fraction:
    """cf_ratio for [1^j, 2^k, p-k+1, n-j-k-p-1].

    Raises:
        ValueError: Unless 0 <= k <= p-1 and 0 <= j <= n-2p-2.
    """
    if not 0 <= k <= p - 1:
        raise ValueError(f"Need 0 <= k <= p-1, got k={k}, p={p}")
    if not 0 <= j <= n - 2 * p - 2:
        raise ValueError(f"Need 0 <= j <= n-2p-2, got j={j}, n={n}, p={p}")
    total = sum(
        (-1) ** d
        * binomial(r, d)
        * binomial(r - d + p - k - 1, p)
        * binomial(r - d + n - j - k - p - 2, n - p)
        for d in range(r + 1)
    )
    return Fraction(factorial(p) * factorial(n - p) * total, factorial(n))


def _face_fast_path(cl: ClassList) -> tuple[int, int, Partition] | None:
    """Return (p, face index, other class) when the closed character forms apply."""
    if cl.t != 2:
        return None
    for index, face in enumerate(cl.classes):
        other = cl.classes[1 - index]
        if face.length != 2:
            continue
        p = face.min_part
        if cl.n >= 2 * p + 2 and other.min_part >= p + 1:
            return p, index, other
    return None


def _nonzero_characters(cl: ClassList) -> Iterator[tuple[Partition, tuple[int, ...]]]:
    """Yield (lambda, characters on each class) for every lambda with no zero factor."""
    fast = _face_fast_path(cl)
    if fast is not None:
        p, face_index, other = fast
        for lam, match in face_type_support(p, cl.n).items():
            if match.family in (3, 4):
                continue
            value = chi_wdd_closed(lam, other, p)
            if value == 0:
                continue
            pair = [0, 0]
            pair[face_index] = match.value
            pair[1 - face_index] = value
            yield lam, (pair[0], pair[1])
        return

    pruned = 0
    for lam in partitions_of(cl.n):
        values: list[int] = []
        for cycle_type in cl.classes:
            value = mn_character(lam, cycle_type)
            if value == 0:
                break
            values.append(value)
        else:
            yield lam, tuple(values)
            continue
        pruned += 1
    logger.debug("Character sum over %s pruned %d partitions", cl.classes, pruned)


@lru_cache(maxsize=None)
def _character_terms(cl: ClassList) -> tuple[tuple[Partition, int, int], ...]:
    """(lambda, f^lambda, prod chi) for the surviving terms of the W sum."""
    return tuple(
        (lam, dimension(lam), prod(values)) for lam, values in _nonzero_characters(cl)
    )


@lru_cache(maxsize=None)
def w_number(cl: ClassList, r: int) -> Fraction:
    """W_{n,r} = sum_lambda cf_ratio(lambda, r) * (f^lambda)^(2-t) * prod_i chi^lambda(C_i)."""
    if r < 0:
        raise ValueError(f"W-number needs r >= 0, got {r}")
    total = Fraction(0)
    for lam, dim, chi in _character_terms(cl):
        ratio = cf_ratio(lam, r)
        if ratio == 0:
            continue
        weight = Fraction(dim) ** (2 - cl.t)
        total += ratio * weight * chi
    return total


def _cycle_density(cl: ClassList, m: int) -> Fraction:
    return sum(
        (
            Fraction(stirling_first_unsigned(m + k, m) * (-1) ** k, factorial(m + k))
            * w_number(cl, m + k)
            for k in range(cl.n - m + 1)
        ),
        Fraction(0),
    )


def xi(cl: ClassList, m: int) -> int:
    """Number of tuples (s_1..s_t), s_i in C_i, whose product has exactly m cycles.

    Args:
        cl: The classes C_1..C_t.
        m: Cycle count, 1 <= m <= n.

    Returns:
        The tuple count.

    Raises:
        ValueError: If m is out of range.
        IntegralityError: If the exact sum is not a nonnegative integer.
    """
    if not 1 <= m <= cl.n:
        raise ValueError(f"Cycle count m={m} outside 1..{cl.n}")
    value = cl.total_size() * _cycle_density(cl, m)
    if value.denominator != 1 or value < 0:
        raise IntegralityError(f"xi for {cl.classes} at m={m} came out as {value}")
    return value.numerator


def poly_charsum(n: int, face_type: Partition, mu: Partition) -> RatPoly:
    """Cycle distribution of alpha*gamma, alpha uniform in C_mu, gamma fixed in C_face.

    The coefficient of x^m is xi_{n,m}(C_mu, C_face) / (|C_mu| |C_face|).
    """
    cl = ClassList(n, (mu, face_type))
    denominator = cl.total_size()
    terms = {m: Fraction(xi(cl, m), denominator) for m in range(1, n + 1)}
    return RatPoly.from_terms({m: c for m, c in terms.items() if c != 0})
