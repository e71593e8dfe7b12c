"""Size-class sweeps over vertex subsets, optionally split across processes.

Masks of a fixed popcount are visited in increasing integer order, which is
colexicographic order of the underlying combinations. A class can therefore
be cut into contiguous rank ranges, each unranked to its first mask and
swept independently; the merge below reproduces the sequential answer
exactly, so results never depend on the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import Executor, ProcessPoolExecutor
from math import comb
from typing import TYPE_CHECKING, Optional

import numpy as np

from ._kernels import scan_size_class

if TYPE_CHECKING:
    from .graph import Graph

# below this many masks a class is swept in-process
PARALLEL_THRESHOLD = 200_000


def default_jobs() -> int:
    value = os.environ.get("TOUGHLAB_JOBS")
    if not value:
        return 1
    jobs = int(value)
    if jobs < 1:
        raise ValueError(f"TOUGHLAB_JOBS must be >= 1, got {value!r}")
    return jobs


def adjacency_array(adj: tuple[int, ...]) -> np.ndarray:
    return np.array(adj, dtype=np.uint64)


def unrank_colex(rank: int, size: int) -> int:
    """The ``rank``-th (0-based) ``size``-subset in colex order, as a bitmask."""
    mask = 0
    for i in range(size, 0, -1):
        c = i - 1
        while comb(c + 1, i) <= rank:
            c += 1
        mask |= 1 << c
        rank -= comb(c, i)
    return mask


def _scan_chunk(adj: tuple[int, ...], n: int, size: int, lo: int, hi: int, target: int) -> tuple[int, int]:
    start = unrank_colex(lo, size)
    c, mask = scan_size_class(
        adjacency_array(adj), np.uint64((1 << n) - 1), np.uint64(start), hi - lo, target
    )
    return int(c), int(mask)


class Sweeper:
    """Runs size-class sweeps for one graph, reusing a process pool if ``jobs > 1``."""

    def __init__(self, g: "Graph", jobs: int = 1):
        self.g = g
        self.jobs = max(1, jobs)
        self._adj = adjacency_array(g.adj)
        self._full = np.uint64(g.full)
        self._pool: Optional[Executor] = None

    def __enter__(self) -> "Sweeper":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None

    def scan(self, size: int, target: int) -> tuple[int, int]:
        """Sweep every ``size``-subset ``S`` of the vertices.

        Returns ``(c, S)``: if some ``S`` leaves at least ``target`` components,
        the first such ``S`` and its count; otherwise the largest count seen and
        the first ``S`` attaining it.
        """
        n = self.g.n
        total = comb(n, size)
        if total == 0:
            return -1, 0
        if self.jobs == 1 or total < PARALLEL_THRESHOLD:
            c, mask = scan_size_class(
                self._adj, self._full, np.uint64(unrank_colex(0, size)), total, target
            )
            return int(c), int(mask)
        if self._pool is None:
            self._pool = ProcessPoolExecutor(max_workers=self.jobs)
        pieces = self.jobs * 4
        bounds = [total * i // pieces for i in range(pieces + 1)]
        futures = [
            self._pool.submit(_scan_chunk, self.g.adj, n, size, lo, hi, target)
            for lo, hi in zip(bounds, bounds[1:])
            if hi > lo
        ]
        results = [f.result() for f in futures]
        return merge_chunks(results, target)


def merge_chunks(results: list[tuple[int, int]], target: int) -> tuple[int, int]:
    """Combine per-chunk answers (given in chunk order) into the sequential answer."""
    for c, mask in results:
        if c >= target:
            return c, mask
    best_c, best_mask = -1, 0
    for c, mask in results:
        if c > best_c:
            best_c, best_mask = c, mask
    return best_c, best_mask


def find_cut(g: "Graph", size: int, min_components: int = 2, jobs: int = 1) -> Optional[int]:
    """First ``size``-subset whose removal leaves at least ``min_components`` pieces."""
    with Sweeper(g, jobs) as sw:
        c, mask = sw.scan(size, min_components)
    return mask if c >= min_components else None
