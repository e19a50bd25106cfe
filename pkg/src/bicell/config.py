# -*- coding: utf-8 -*-
"""Configuration management for the bicellular map engine."""

import os
from pathlib import Path

from dotenv import load_dotenv

DEFAULT_MAX_CLASS_SIZE = 50_000_000
DEFAULT_ORACLE_MAX_N = 11
DEFAULT_THREADS = 1


def load_config() -> None:
    """Load environment variables from .env file."""
    env_path = Path(__file__).parent.parent.parent / ".env"
    load_dotenv(env_path)


def _get_int(name: str, default: int, minimum: int) -> int:
    load_config()
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e
    if value < minimum:
        raise ValueError(f"{name} must be at least {minimum}, got {value}")
    return value


def get_max_class_size() -> int:
    """Get the oracle guard on conjugacy class size.

    Raises:
        ValueError: If BICELL_MAX_CLASS_SIZE is not a positive integer.

    Returns:
        Largest class the brute-force oracle will stream, default 5*10^7.
    """
    return _get_int("BICELL_MAX_CLASS_SIZE", DEFAULT_MAX_CLASS_SIZE, 1)


def get_oracle_max_n() -> int:
    """Get the largest n the brute-force oracle accepts (default 11)."""
    return _get_int("BICELL_ORACLE_MAX_N", DEFAULT_ORACLE_MAX_N, 1)


def get_threads() -> int:
    """Get the configured worker count; 0 means one per CPU."""
    return _get_int("BICELL_THREADS", DEFAULT_THREADS, 0)


def resolve_threads(threads: int | None) -> int:
    """Resolve a worker count, falling back to the environment and mapping 0 to the CPU count.

    Args:
        threads: Explicit count from the command line, or None.

    Returns:
        A positive number of workers.
    """
    value = get_threads() if threads is None else threads
    if value < 0:
        raise ValueError(f"Thread count must be nonnegative, got {value}")
    if value == 0:
        return os.cpu_count() or 1
    return value
