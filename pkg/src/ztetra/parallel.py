"""Thread-count resolution and deterministic work partitioning.

Heavy scans split their work across a thread pool and merge the partial
results with order-insensitive operations, so output is identical for
any worker count.  The ZTETRA_THREADS environment variable overrides
the machine-parallelism default.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

from .errors import RangeError

THREADS_ENV = "ZTETRA_THREADS"

T = TypeVar("T")
R = TypeVar("R")


def worker_count(override: int | None = None) -> int:
    """Number of worker threads to use.

    Order of precedence: explicit override, ZTETRA_THREADS, cpu count.
    """
    if override is None:
        raw = os.environ.get(THREADS_ENV)
        if raw is None:
            return os.cpu_count() or 1
        try:
            override = int(raw)
        except ValueError:
            raise RangeError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if override < 1:
        raise RangeError(f"thread count must be >= 1, got {override}")
    return override


def map_chunks(fn: Callable[[list[T]], R], items: Iterable[T], workers: int) -> list[R]:
    """Apply fn to round-robin chunks of items and collect the results.

    With one worker (or one item) this degenerates to a single direct
    call, which keeps small inputs free of pool overhead.
    """
    work = list(items)
    if not work:
        return []
    workers = min(workers, len(work))
    if workers == 1:
        return [fn(work)]
    chunks = [work[i::workers] for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, chunks))
