# -*- coding: utf-8 -*-
"""Symmetric-group characters: hook lengths, Murnaghan-Nakayama, two-cycle closed forms.

The closed forms cover the characters that appear when one of the classes is
a face-type [p, n-p] with n >= 2p+2. Only four families of shapes carry a
nonzero value there; everything else vanishes. The general recursion in
:func:`mn_character` is the reference for all of them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial, prod

from bicell.combinat import Partition, binomial

logger = logging.getLogger(__name__)


class CharacterRegimeError(ValueError):
    """A closed-form character formula was called outside its range of validity."""


class CharacterConsistencyError(RuntimeError):
    """Two family descriptions of the same shape disagree on its character value."""


@dataclass(frozen=True)
class CellStats:
    """Hook length and content of every cell of a Young diagram, row by row."""

    hooks: tuple[int, ...]
    contents: tuple[int, ...]


@dataclass(frozen=True)
class FamilyMatch:
    """Where a shape sits among the nonzero families for the class [p, n-p].

    ``family`` is 1 for hooks [1^j, n-j], 2 for [1^j, 2^k, p-k+1, n-j-k-p-1],
    3 for [1^j, 2^k, p-k-j, n-k-p] and 4 for the transposes of family 3,
    [1^j, 2^k, n-p-k-j, p-k].
    """

    family: int
    j: int
    k: int
    value: int


@lru_cache(maxsize=None)
def cell_stats(lam: Partition) -> CellStats:
    """Compute hook lengths and contents c(u) = j - i for every cell of lambda."""
    columns = lam.conjugate().parts
    hooks: list[int] = []
    contents: list[int] = []
    for i, j in lam.cells():
        hooks.append(lam.parts[i - 1] - j + columns[j - 1] - i + 1)
        contents.append(j - i)
    return CellStats(hooks=tuple(hooks), contents=tuple(contents))


def dimension(lam: Partition) -> int:
    """Number of standard Young tableaux f^lambda = n!/prod h(u)."""
    return factorial(lam.n) // prod(cell_stats(lam).hooks)


def _beta_to_parts(beta: tuple[int, ...]) -> tuple[int, ...]:
    ordered = sorted(beta, reverse=True)
    size = len(ordered)
    parts = tuple(b - (size - 1 - i) for i, b in enumerate(ordered))
    return tuple(part for part in parts if part > 0)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    size = len(lam)
    beta = tuple(part + size - 1 - i for i, part in enumerate(lam))
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # Beads jumped over give the leg length of the removed rim hook.
        height = sum(1 for c in beta if target < c < b)
        moved = tuple(target if c == b else c for c in beta)
        value = _mn(_beta_to_parts(moved), rest)
        if value:
            total += -value if height % 2 else value
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """Evaluate chi^lambda(mu) with the Murnaghan-Nakayama rule.

    Rim hooks of length mu_1 are stripped with an abacus (beta-set) move and the
    remainder is evaluated recursively on mu without its largest part. Results
    are memoized on the (lambda, mu) parts tuples for the lifetime of the process.

    Args:
        lam: Irreducible character label, a partition of n.
        mu: Cycle-type of the class, a partition of n.

    Returns:
        The integer character value.

    Raises:
        ValueError: If lambda and mu partition different integers.
    """
    if lam.n != mu.n:
        raise ValueError(
            f"Character needs partitions of the same size: |{lam}|={lam.n}, |{mu}|={mu.n}"
        )
    return _mn(lam.parts, mu.parts)


def _check_regime(p: int, n: int) -> None:
    if p < 1 or n < 2 * p + 2:
        raise CharacterRegimeError(
            f"Closed-form characters need n >= 2p+2 and p >= 1 (got n={n}, p={p}); "
            "use mn_character instead"
        )


def _shape(ones: int, twos: int, *others: int) -> Partition | None:
    if ones < 0 or twos < 0 or any(part < 1 for part in others):
        return None
    return Partition.from_parts([1] * ones + [2] * twos + list(others))


@lru_cache(maxsize=None)
def face_type_support(p: int, n: int) -> dict[Partition, FamilyMatch]:
    """Every lambda with chi^lambda([p, n-p]) != 0, with its family and value.

    Raises:
        CharacterRegimeError: If n < 2p+2 or p < 1.
        CharacterConsistencyError: If a shape is reached twice with different values.
    """
    _check_regime(p, n)
    support: dict[Partition, FamilyMatch] = {}

    def add(lam: Partition | None, match: FamilyMatch) -> None:
        if lam is None:
            return
        known = support.get(lam)
        if known is not None and known.value != match.value:
            raise CharacterConsistencyError(
                f"Shape {lam} matched family {known.family} (value {known.value}) and "
                f"family {match.family} (value {match.value})"
            )
        support.setdefault(lam, match)

    for j in list(range(0, p)) + list(range(n - p, n)):
        value = (-1) ** j if j < p else (-1) ** (j + 1)
        add(_shape(j, 0, n - j), FamilyMatch(1, j, 0, value))
    for k in range(0, p):
        for j in range(0, n - 2 * p - 1):
            add(_shape(j, k, p - k + 1, n - j - k - p - 1), FamilyMatch(2, j, k, (-1) ** (j + 1)))
    for k in range(0, p - 1):
        for j in range(0, p - 1 - k):
            add(_shape(j, k, p - k - j, n - k - p), FamilyMatch(3, j, k, (-1) ** j))
    for k in range(0, p - 1):
        for j in range(n - 2 * p, n - p - 1 - k):
            add(_shape(j, k, n - p - k - j, p - k), FamilyMatch(4, j, k, (-1) ** j))

    logger.debug("Face type [%d,%d]: %d shapes with nonzero character", p, n - p, len(support))
    return support


def chi_face_type(lam: Partition, p: int, n: int) -> int:
    """chi^lambda([p, n-p]) by matching lambda against the nonzero families.

    Args:
        lam: Partition of n.
        p: Smaller face length, with n >= 2p+2.
        n: Total size.

    Returns:
        The family's sign, or 0 when lambda belongs to no family.

    Raises:
        CharacterRegimeError: If n < 2p+2 or p < 1.
    """
    _check_regime(p, n)
    if lam.n != n:
        raise ValueError(f"Partition {lam} does not partition {n}")
    match = face_type_support(p, n).get(lam)
    return match.value if match is not None else 0


def _family2_value(j: int, p: int, mu: Partition) -> int:
    multiplicities = mu.multiplicities()
    sizes = sorted(multiplicities)
    smallest = sizes[0]
    ranges = [
        range(multiplicities[size] if size == smallest else multiplicities[size] + 1)
        for size in sizes
    ]
    lower = j + p + 1 - smallest
    upper = j + p + 1
    total = 0
    for picks in product(*ranges):
        weight = sum(size * pick for size, pick in zip(sizes, picks, strict=True))
        if weight not in (lower, upper):
            continue
        count = 1
        for size, pick in zip(sizes, picks, strict=True):
            top = multiplicities[size] - 1 if size == smallest else multiplicities[size]
            count *= binomial(top, pick)
        moved = sum(picks)
        if weight == lower:
            total += count * (-1) ** (j - moved)
        if weight == upper:
            total += count * (-1) ** (j + 1 - moved)
    return total


def chi_wdd_closed(lam: Partition, mu: Partition, p: int) -> int:
    """chi^lambda(mu) for lambda in the [p, n-p] support, assuming min(mu) >= p+1.

    Hooks take a closed sign, family 2 is a finite sum over how the remaining
    rim hooks split between the two pieces left after removing the hook through
    cell (1,1), and families 3 and 4 vanish.

    Raises:
        CharacterRegimeError: If min(mu) <= p, n < 2p+2, or lambda is outside the support.
    """
    n = mu.n
    if lam.n != n:
        raise ValueError(f"Character needs partitions of the same size: {lam} and {mu}")
    if mu.min_part <= p:
        raise CharacterRegimeError(
            f"Closed form needs min(mu) >= p+1 (mu={mu}, p={p}); use mn_character instead"
        )
    match = face_type_support(p, n).get(lam)
    if match is None:
        raise CharacterRegimeError(
            f"{lam} has zero character on [{p},{n - p}]; no closed form applies"
        )
    if match.family == 1:
        if match.j < p:
            return (-1) ** match.j
        return (-1) ** (match.j + 1 - mu.length)
    if match.family == 2:
        return _family2_value(match.j, p, mu)
    return 0
