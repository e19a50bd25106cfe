# -*- coding: utf-8 -*-
"""Partition parsing for the command line (no silent repair of bad input)."""

import re

from bicell.combinat import Partition

# "5", "3,2,1", "2^3,1", "[1^2, 3]", "(3, 3)"
_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")
_BRACKETS = {"(": ")", "[": "]"}


class PartitionParseError(ValueError):
    """Partition text could not be parsed."""


def parse_partition(text: str, n: int | None = None) -> Partition:
    """Parse a partition from comma-separated parts.

    Parts may be given in any order and are sorted non-increasing. A term
    ``i^m`` stands for m parts equal to i, so ``2^3,1`` is (2,2,2,1).

    Args:
        text: Partition text, e.g. "3,2" or "2^3,1".
        n: If given, the parts must sum to n.

    Returns:
        The parsed Partition.

    Raises:
        PartitionParseError: If a term is malformed, a part is not positive,
            or the parts do not sum to n.
    """
    if not text or not text.strip():
        raise PartitionParseError("Partition text is empty")

    inner = text.strip()
    opener, closer = inner[0], inner[-1]
    if opener in _BRACKETS or closer in _BRACKETS.values():
        if len(inner) < 2 or _BRACKETS.get(opener) != closer:
            raise PartitionParseError(f"Unbalanced brackets in {text!r}")
        inner = inner[1:-1]
    parts: list[int] = []
    for raw in inner.split(","):
        match = _TERM.match(raw)
        if not match:
            raise PartitionParseError(f"Malformed partition term {raw.strip()!r} in {text!r}")
        size = int(match.group(1))
        count = int(match.group(2)) if match.group(2) is not None else 1
        if size < 1:
            raise PartitionParseError(f"Parts must be positive integers, got {size} in {text!r}")
        parts.extend([size] * count)

    if not parts:
        raise PartitionParseError(f"Partition {text!r} has no parts")
    partition = Partition.from_parts(parts)
    if n is not None and partition.n != n:
        raise PartitionParseError(f"Partition {partition} sums to {partition.n}, expected {n}")
    return partition
