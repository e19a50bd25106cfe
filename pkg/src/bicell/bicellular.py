# -*- coding: utf-8 -*-
"""Closed-form genus distributions of two-face maps.

A bicellular instance fixes n edges, faces of lengths p and n-p, and the
white-vertex degree partition mu. Whenever every white vertex has degree at
least p+1, the cycle distribution polynomial has the closed form

    P(x) = (p!(n-p)!/n!) [y^{n-p}] V_mu(y) sum_{i<p} C(x+i, p) (1+y)^{x+i-p}

with V_mu(y) = prod_i ((1+y)^{mu_i} - 1). Outside that regime use
:func:`bicell.charsum.poly_charsum`.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from bicell.charsum import poly_charsum
from bicell.combinat import (
    Partition,
    RatPoly,
    YSeries,
    binomial,
    binomial_poly,
    class_size,
    one_plus_y_power,
    partitions_of,
)

logger = logging.getLogger(__name__)


class ClosedFormRegimeError(ValueError):
    """The closed form was requested for an instance with min(mu) <= p."""


class GenusParityError(RuntimeError):
    """A polynomial term does not correspond to a nonnegative integral genus count."""


@dataclass(frozen=True)
class BicellularInstance:
    """Two faces of lengths p <= n-p and white-vertex degrees mu.

    ``p`` is canonicalized to min(p, n-p) since [p, n-p] and [n-p, p] are the
    same class.
    """

    n: int
    p: int
    mu: Partition

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"A two-face instance needs n >= 2, got {self.n}")
        if not 1 <= self.p <= self.n - 1:
            raise ValueError(f"Face length p={self.p} must lie in 1..{self.n - 1}")
        if self.mu.n != self.n:
            raise ValueError(f"mu={self.mu} is not a partition of n={self.n}")
        object.__setattr__(self, "p", min(self.p, self.n - self.p))

    @property
    def q(self) -> int:
        """The larger face length n - p."""
        return self.n - self.p

    @property
    def closed_form_valid(self) -> bool:
        return self.mu.min_part >= self.p + 1

    @property
    def face_type(self) -> Partition:
        return Partition.from_parts([self.p, self.q])

    @property
    def class_size(self) -> int:
        return class_size(self.mu)

    def __str__(self) -> str:
        return f"(n={self.n}, p={self.p}, mu={self.mu})"


@dataclass(frozen=True)
class GenusDistribution:
    """Number of alpha in C_mu producing each genus against a fixed gamma."""

    counts: dict[int, int] = field(default_factory=dict)
    class_size: int = 0
    connected: bool = False

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def _require_closed_form(inst: BicellularInstance) -> None:
    if not inst.closed_form_valid:
        raise ClosedFormRegimeError(
            f"Closed form needs min(mu) >= p+1 for {inst}; use poly_charsum instead"
        )


def v_mu(mu: Partition, degree: int) -> YSeries:
    """V_mu(y) = prod_i ((1+y)^{mu_i} - 1), truncated at y^degree."""
    result = YSeries.one(degree)
    for part in mu:
        factor = [0] + [binomial(part, k) for k in range(1, degree + 1)]
        result = result * YSeries.from_constants(factor, degree)
    return result


def w_number_bicellular(inst: BicellularInstance, r: int) -> Fraction:
    """W_{n,r} for the classes (mu, [p, n-p]) in closed form.

    Raises:
        ClosedFormRegimeError: If min(mu) <= p.
    """
    _require_closed_form(inst)
    n, p, q = inst.n, inst.p, inst.q
    v = [int(c.coefficient(0)) for c in v_mu(inst.mu, q).coeffs]
    total = 0
    for k in range(p):
        for d in range(r + 1):
            outer = (-1) ** d * binomial(r, d) * binomial(r - d + p - k - 1, p)
            if outer == 0:
                continue
            inner = sum(v[a] * binomial(r - d - k - 1, q - a) for a in range(q + 1))
            total += outer * inner
    return Fraction(factorial(p) * factorial(q) * total, factorial(n))


def poly_closed(inst: BicellularInstance) -> RatPoly:
    """Genus distribution polynomial by coefficient extraction in y.

    Args:
        inst: Instance with min(mu) >= p+1.

    Returns:
        P(x) = (1/|C_mu|) sum over alpha in C_mu of x^{kappa(alpha gamma)}.

    Raises:
        ClosedFormRegimeError: If min(mu) <= p.
    """
    _require_closed_form(inst)
    n, p, q = inst.n, inst.p, inst.q
    series = YSeries(q)
    for i in range(p):
        series = series + one_plus_y_power(i - p, q) * binomial_poly(i, p)
    extracted = (v_mu(inst.mu, q) * series).coefficient(q)
    poly = extracted * Fraction(factorial(p) * factorial(q), factorial(n))
    logger.debug("Closed form for %s: %s", inst, poly)
    return poly


def poly_connected(inst: BicellularInstance) -> RatPoly:
    """Distribution over connected maps only; every map is connected when min(mu) >= p+1."""
    return poly_closed(inst)


def poly_regular(p: int, k: int, d: int) -> RatPoly:
    """Connected distribution for face-type [p, dk-p] and d white vertices of degree k.

    Raises:
        ValueError: If k <= p, p < 1 or d < 1.
    """
    if p < 1 or d < 1:
        raise ValueError(f"Need p >= 1 and d >= 1, got p={p}, d={d}")
    if k <= p:
        raise ValueError(f"Regular degree k={k} must exceed p={p}")
    n = d * k
    total = RatPoly()
    for i in range(p):
        for j in range(d + 1):
            term = binomial_poly(i, p) * binomial_poly(i - p + j * k, n - p)
            total = total + term * ((-1) ** (d - j) * binomial(d, j))
    return total / binomial(n, p)


def euler_genus(n: int, faces: int, white: int, black: int) -> int:
    """Genus g from white + black - n + faces = 2 - 2g.

    Raises:
        ValueError: If the cycle counts give a negative or half-integral genus.
    """
    twice = n + 2 - faces - white - black
    if twice < 0 or twice % 2:
        raise ValueError(
            f"No genus for n={n}, faces={faces}, white={white}, black={black}: 2g={twice}"
        )
    return twice // 2


def genus_distribution(
    inst: BicellularInstance, poly: RatPoly, connected: bool = False
) -> GenusDistribution:
    """Turn a cycle distribution polynomial into genus counts out of |C_mu|.

    Raises:
        GenusParityError: If a term sits at an impossible degree or has a
            non-integral count.
    """
    size = inst.class_size
    counts: dict[int, int] = {}
    for m, coefficient in poly.terms():
        try:
            genus = euler_genus(inst.n, 2, inst.mu.length, m)
        except ValueError as e:
            raise GenusParityError(f"Degree {m} of {poly} is impossible for {inst}") from e
        count = coefficient * size
        if count.denominator != 1 or count < 0:
            raise GenusParityError(f"Genus {genus} count {count} is not a nonnegative integer")
        counts[genus] = count.numerator
    if not connected and sum(counts.values()) != size:
        raise GenusParityError(f"Genus counts {counts} do not sum to |C_mu|={size}")
    return GenusDistribution(
        counts=dict(sorted(counts.items())), class_size=size, connected=connected
    )


def poly_unicellular(mu: Partition) -> RatPoly:
    """Cycle distribution of alpha * (n-cycle) for alpha uniform in C_mu."""
    return poly_charsum(mu.n, Partition((mu.n,)), mu)


def harer_zagier(n: int) -> dict[int, int]:
    """Gluings of a 2n-gon into a genus-g surface, {g: count}, by the three-term recurrence.

    (n+1) e_g(n) = 2(2n-1) e_g(n-1) + (n-1)(2n-1)(2n-3) e_{g-1}(n-2), e_0(0) = 1.
    """
    if n < 0:
        raise ValueError(f"Polygon half-size must be nonnegative, got {n}")
    table: list[dict[int, int]] = [{0: 1}]
    for size in range(1, n + 1):
        row: dict[int, int] = {}
        for genus in range(size // 2 + 1):
            value = 2 * (2 * size - 1) * table[size - 1].get(genus, 0)
            if size >= 2 and genus >= 1:
                lower = table[size - 2].get(genus - 1, 0)
                value += (size - 1) * (2 * size - 1) * (2 * size - 3) * lower
            row[genus] = value // (size + 1)
        table.append(row)
    return {genus: count for genus, count in table[n].items() if count}


def valid_instances(max_n: int) -> Iterator[BicellularInstance]:
    """Every instance with min(mu) >= p+1 and n <= max_n, ordered by n, p, then mu."""
    for n in range(2, max_n + 1):
        for p in range(1, n // 2 + 1):
            for mu in partitions_of(n):
                if mu.min_part >= p + 1:
                    yield BicellularInstance(n, p, mu)
