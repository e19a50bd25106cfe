# -*- coding: utf-8 -*-
"""Brute-force ground truth: stream a conjugacy class and histogram cycle counts.

Nothing here uses characters. A fixed gamma of the face type is multiplied by
every alpha of the white-vertex class, so the cost is |C_mu| products.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice, permutations
from math import perm

from bicell import config
from bicell.charsum import ClassList
from bicell.combinat import Partition, Permutation, RatPoly, class_size
from bicell.parallel import ordered_map

logger = logging.getLogger(__name__)

# Streams per worker process when the class is split.
SHARDS_PER_WORKER = 4


class OracleGuardError(RuntimeError):
    """The requested enumeration exceeds the configured guard."""

    def __init__(self, message: str, estimated_size: int) -> None:
        super().__init__(message)
        self.estimated_size = estimated_size


def _distinct_desc(lengths: tuple[int, ...]) -> list[int]:
    return sorted(set(lengths), reverse=True)


def _without(lengths: tuple[int, ...], length: int) -> tuple[int, ...]:
    index = lengths.index(length)
    return lengths[:index] + lengths[index + 1 :]


def _fill(
    images: list[int], remaining: list[int], lengths: tuple[int, ...]
) -> Iterator[tuple[int, ...]]:
    if not remaining:
        yield tuple(images)
        return
    start, rest = remaining[0], remaining[1:]
    for length in _distinct_desc(lengths):
        shorter = _without(lengths, length)
        for others in permutations(rest, length - 1):
            cycle = (start, *others)
            for index, point in enumerate(cycle):
                images[point] = cycle[(index + 1) % length]
            used = set(others)
            yield from _fill(images, [x for x in rest if x not in used], shorter)


def _first_cycles(n: int, lengths: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    rest = range(1, n)
    for length in _distinct_desc(lengths):
        for others in permutations(rest, length - 1):
            yield (0, *others)


@dataclass(frozen=True)
class ClassIterator:
    """All permutations of [n] with a given cycle-type, each exactly once.

    Every cycle starts at the smallest point not yet placed; the cycle length is
    tried longest first and the other points of the cycle in lexicographic order.
    Shard ``shard_index`` of ``shard_count`` keeps every shard_count-th choice of
    the cycle through point 0, starting at shard_index.
    Single consumer: each call to :meth:`iter_images` starts a fresh stream.
    """

    n: int
    cycle_type: Partition
    shard_index: int = 0
    shard_count: int = 1

    def __post_init__(self) -> None:
        if self.cycle_type.n != self.n:
            raise ValueError(f"{self.cycle_type} is not a partition of {self.n}")
        if not 0 <= self.shard_index < self.shard_count:
            raise ValueError(f"Shard {self.shard_index} of {self.shard_count} does not exist")

    @property
    def first_cycle_choices(self) -> int:
        """Number of ways to pick the cycle through point 0."""
        if self.n == 0:
            return 1
        lengths = _distinct_desc(self.cycle_type.parts)
        return sum(perm(self.n - 1, length - 1) for length in lengths)

    def iter_images(self) -> Iterator[tuple[int, ...]]:
        """Yield 0-based one-line images."""
        images = list(range(self.n))
        parts = self.cycle_type.parts
        if self.shard_count == 1:
            yield from _fill(images, list(range(self.n)), parts)
            return
        chosen = islice(_first_cycles(self.n, parts), self.shard_index, None, self.shard_count)
        for cycle in chosen:
            length = len(cycle)
            for index, point in enumerate(cycle):
                images[point] = cycle[(index + 1) % length]
            used = set(cycle)
            remaining = [x for x in range(self.n) if x not in used]
            yield from _fill(images, remaining, _without(parts, length))

    def shards(self, count: int) -> list[ClassIterator]:
        """Split the class into at most ``count`` disjoint streams by the cycle through 1."""
        if self.shard_count > 1:
            return [self]
        count = max(1, min(count, self.first_cycle_choices))
        if count == 1:
            return [self]
        return [ClassIterator(self.n, self.cycle_type, index, count) for index in range(count)]

    def __iter__(self) -> Iterator[Permutation]:
        for images in self.iter_images():
            yield Permutation(tuple(image + 1 for image in images))

    def __len__(self) -> int:
        return class_size(self.cycle_type)


def permutations_of_type(n: int, lam: Partition) -> ClassIterator:
    """Stream C_lambda inside S_n."""
    return ClassIterator(n, lam)


def canonical_gamma(p: int, n: int) -> Permutation:
    """(1 2 ... p)(p+1 ... n), or the n-cycle when p = n."""
    if not 1 <= p <= n:
        raise ValueError(f"Face length p={p} must lie in 1..{n}")
    if p == n:
        return Permutation.from_cycles(n, [range(1, n + 1)])
    return Permutation.from_cycles(n, [range(1, p + 1), range(p + 1, n + 1)])


def representative(face_type: Partition) -> Permutation:
    """Consecutive-block permutation of the given cycle-type, shortest cycle first."""
    cycles = []
    start = 1
    for length in reversed(face_type.parts):
        cycles.append(range(start, start + length))
        start += length
    return Permutation.from_cycles(face_type.n, cycles)


def _count_cycles(images: list[int]) -> int:
    seen = [False] * len(images)
    cycles = 0
    for start in range(len(images)):
        if seen[start]:
            continue
        cycles += 1
        point = start
        while not seen[point]:
            seen[point] = True
            point = images[point]
    return cycles


def _find(parent: list[int], point: int) -> int:
    while parent[point] != point:
        parent[point] = parent[parent[point]]
        point = parent[point]
    return point


def _transitive(alpha: tuple[int, ...], gamma: tuple[int, ...]) -> bool:
    parent = list(range(len(alpha)))
    components = len(alpha)
    for point in range(len(alpha)):
        for image in (alpha[point], gamma[point]):
            a, b = _find(parent, point), _find(parent, image)
            if a != b:
                parent[a] = b
                components -= 1
    return components <= 1


def is_transitive(alpha: Permutation, gamma: Permutation) -> bool:
    """True iff <alpha, gamma> acts transitively on [n]."""
    if alpha.n != gamma.n:
        raise ValueError(f"Permutations act on different sets: {alpha.n} and {gamma.n}")
    return _transitive(
        tuple(image - 1 for image in alpha.images), tuple(image - 1 for image in gamma.images)
    )


@dataclass(frozen=True)
class _HistogramTask:
    stream: ClassIterator
    gamma: tuple[int, ...]
    connected_only: bool


def _histogram(task: _HistogramTask) -> dict[int, int]:
    gamma = task.gamma
    counts: dict[int, int] = {}
    for alpha in task.stream.iter_images():
        if task.connected_only and not _transitive(alpha, gamma):
            continue
        m = _count_cycles([alpha[image] for image in gamma])
        counts[m] = counts.get(m, 0) + 1
    return counts


def _guard(n: int, lam: Partition, max_class_size: int | None, max_n: int | None) -> int:
    size = class_size(lam)
    limit = config.get_max_class_size() if max_class_size is None else max_class_size
    largest_n = config.get_oracle_max_n() if max_n is None else max_n
    if n > largest_n:
        raise OracleGuardError(
            f"Oracle limited to n <= {largest_n}, got n={n} (|C_{lam}| = {size})", size
        )
    if size > limit:
        raise OracleGuardError(f"|C_{lam}| = {size} exceeds the oracle guard {limit}", size)
    return size


def cycle_histogram(
    lam: Partition,
    gamma: Permutation,
    connected_only: bool = False,
    max_class_size: int | None = None,
    max_n: int | None = None,
    threads: int = 1,
) -> dict[int, int]:
    """Count alpha in C_lambda by the number of cycles of alpha * gamma.

    Args:
        lam: Cycle-type of alpha.
        gamma: Fixed right factor, applied first.
        connected_only: Only count alpha with <alpha, gamma> transitive.
        max_class_size: Guard on |C_lambda|; None reads the configuration.
        max_n: Guard on n; None reads the configuration.
        threads: Worker processes; the class is split into at most
            threads * SHARDS_PER_WORKER streams by the cycle through 1.

    Returns:
        {m: count}, sorted by m.

    Raises:
        OracleGuardError: If the guard is exceeded.
    """
    n = gamma.n
    size = _guard(n, lam, max_class_size, max_n)
    stream = ClassIterator(n, lam)
    image_tuple = tuple(image - 1 for image in gamma.images)
    streams = stream.shards(threads * SHARDS_PER_WORKER) if threads > 1 else [stream]
    logger.debug("Streaming %d permutations of type %s in %d shards", size, lam, len(streams))
    partials = ordered_map(
        _histogram,
        [_HistogramTask(part, image_tuple, connected_only) for part in streams],
        threads,
    )
    merged: dict[int, int] = {}
    for partial in partials:
        for m, count in partial.items():
            merged[m] = merged.get(m, 0) + count
    return dict(sorted(merged.items()))


def oracle_poly(
    n: int,
    face_type: Partition,
    mu: Partition,
    connected_only: bool = False,
    gamma: Permutation | None = None,
    max_class_size: int | None = None,
    max_n: int | None = None,
    threads: int = 1,
) -> RatPoly:
    """(1/|C_mu|) sum over alpha in C_mu of x^{kappa(alpha gamma)}, by enumeration.

    Raises:
        ValueError: If the partitions do not match n or gamma has the wrong type.
        OracleGuardError: If the guard is exceeded.
    """
    if face_type.n != n or mu.n != n:
        raise ValueError(f"Face type {face_type} and mu {mu} must both partition {n}")
    if gamma is None:
        gamma = representative(face_type)
    elif gamma.cycle_type() != face_type:
        raise ValueError(f"gamma {gamma} does not have cycle-type {face_type}")
    counts = cycle_histogram(mu, gamma, connected_only, max_class_size, max_n, threads)
    size = class_size(mu)
    return RatPoly.from_terms({m: Fraction(count, size) for m, count in counts.items()})


def oracle_xi(cl: ClassList, m: int, max_class_size: int | None = None) -> int:
    """Pairs (s1, s2) in C_1 x C_2 with kappa(s1 s2) = m, fixing s2 and scaling by |C_2|.

    Raises:
        ValueError: If the class list does not have exactly two classes.
        OracleGuardError: If |C_1| exceeds the guard.
    """
    if cl.t != 2:
        raise ValueError(f"The oracle counts pairs only, got {cl.t} classes")
    first, second = cl.classes
    counts = cycle_histogram(first, representative(second), max_class_size=max_class_size)
    return counts.get(m, 0) * class_size(second)
