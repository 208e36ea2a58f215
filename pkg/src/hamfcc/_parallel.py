"""Ordered fan-out of independent work items over a process pool."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")


def default_workers() -> int:
    return os.cpu_count() or 1


def chunk_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def run_ordered(fn: Callable[..., T], jobs: Sequence[tuple], workers: int = 1) -> list[T]:
    """Apply ``fn`` to each argument tuple; results come back in job order."""
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, *zip(*jobs)))
