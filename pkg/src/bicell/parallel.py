# -*- coding: utf-8 -*-
"""Order-preserving fan-out over worker processes."""

import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# Chunks handed to each worker over a whole map.
CHUNKS_PER_WORKER = 4


def chunk_size(items: int, workers: int) -> int:
    """Items per pickled batch so each worker sees about CHUNKS_PER_WORKER batches."""
    return max(1, items // (workers * CHUNKS_PER_WORKER))


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: int = 1) -> list[R]:
    """Apply fn to every item, returning results in input order.

    With one worker everything runs in-process; otherwise fn and the items must
    be picklable (module-level functions and frozen dataclasses are).

    Args:
        fn: Pure function to apply.
        items: Work items.
        threads: Number of worker processes.

    Returns:
        List of results, same order as items.
    """
    work = list(items)
    if threads <= 1 or len(work) <= 1:
        return [fn(item) for item in work]
    workers = min(threads, len(work))
    chunksize = chunk_size(len(work), workers)
    logger.debug(
        "Dispatching %d items to %d workers in chunks of %d", len(work), workers, chunksize
    )
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, work, chunksize=chunksize))
