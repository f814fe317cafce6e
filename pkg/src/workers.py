"""
Process pool helpers for exhaustive sweeps.

Every sweep is expressed as a list of picklable tasks whose integer results are summed.
Integer addition is exact and associative, so results never depend on the number of jobs.
"""

import sys
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

from tqdm import tqdm

from src.constants import PARALLEL_CHUNKS_PER_JOB, SHOW_PROGRESS

T = TypeVar("T")


def split_range(total: int, jobs: int, min_chunk: int = 1) -> list[tuple[int, int]]:
    """
    Splits [0, total) into contiguous half-open intervals

    :param total: Size of the index space
    :param jobs: Number of workers that will consume the intervals
    :param min_chunk: Smallest interval worth shipping to a worker
    :return: List of (start, stop) pairs covering the range in order
    """
    if total <= 0:
        return []
    pieces = max(1, min(total // max(min_chunk, 1), max(jobs, 1) * PARALLEL_CHUNKS_PER_JOB))
    bounds = [total * i // pieces for i in range(pieces + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(pieces) if bounds[i] < bounds[i + 1]]


def _progress(iterable, total: int, desc: str):
    enabled = SHOW_PROGRESS and sys.stderr.isatty() and total > 1
    return tqdm(iterable, total=total, desc=desc, disable=not enabled, file=sys.stderr,
                leave=False)


def parallel_sum(func: Callable[[T], int], tasks: Sequence[T], jobs: int = 1,
                 desc: str = "sweep") -> int:
    """
    Sums func(task) over all tasks.

    :param func: Module level (picklable) function returning an int
    :param tasks: Task arguments
    :param jobs: Worker processes; 1 runs in-process
    :param desc: Progress bar label
    :return: Exact integer sum
    """
    if jobs <= 1 or len(tasks) <= 1:
        return sum(func(task) for task in _progress(tasks, len(tasks), desc))

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        results = executor.map(func, tasks)
        return sum(_progress(results, len(tasks), desc))
