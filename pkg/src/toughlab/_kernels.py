"""Compiled inner loops over 64-bit adjacency rows.

Everything here is uint64 on purpose: numba promotes mixed int64/uint64
arithmetic to float64, which would silently break the bit tricks.
"""

from __future__ import annotations

import numpy as np
from numba import njit

ONE = np.uint64(1)
ZERO = np.uint64(0)

_DEBRUIJN = np.uint64(0x03F79D71B4CB0A89)
_DEBRUIJN_INDEX = np.array(
    [
        0, 1, 48, 2, 57, 49, 28, 3, 61, 58, 50, 42, 38, 29, 17, 4,
        62, 55, 59, 36, 53, 51, 43, 22, 45, 39, 33, 30, 24, 18, 12, 5,
        63, 47, 56, 27, 60, 41, 37, 16, 54, 35, 52, 21, 44, 32, 23, 11,
        46, 26, 40, 15, 34, 20, 31, 10, 25, 14, 19, 9, 13, 8, 7, 6,
    ],
    dtype=np.int64,
)


@njit(cache=True, inline="always")
def _lowbit_index(low):
    # low must have exactly one bit set
    return _DEBRUIJN_INDEX[(low * _DEBRUIJN) >> np.uint64(58)]


@njit(cache=True)
def count_components(adj, alive):
    """Number of connected components of the subgraph induced by ``alive``."""
    count = 0
    rest = alive
    while rest != ZERO:
        seed = rest & (~rest + ONE)
        comp = seed
        frontier = seed
        while frontier != ZERO:
            reach = ZERO
            f = frontier
            while f != ZERO:
                low = f & (~f + ONE)
                reach |= adj[_lowbit_index(low)]
                f ^= low
            frontier = reach & rest & ~comp
            comp |= frontier
        rest &= ~comp
        count += 1
    return count


@njit(cache=True)
def _next_combination(x):
    # Gosper's hack: next larger integer with the same popcount
    c = x & (~x + ONE)
    r = x + c
    return (((r ^ x) >> np.uint64(2)) // c) | r


@njit(cache=True)
def scan_size_class(adj, full, start, count, target):
    """Sweep ``count`` masks of equal popcount in increasing order from ``start``.

    Returns ``(best_c, best_mask)`` where ``best_c`` is the largest component
    count of ``full & ~mask`` seen and ``best_mask`` the first mask reaching it.
    Stops at the first mask with component count ``>= target``.
    """
    x = start
    best_c = -1
    best_mask = ZERO
    for i in range(count):
        c = count_components(adj, full & ~x)
        if c > best_c:
            best_c = c
            best_mask = x
            if c >= target:
                break
        if i + 1 < count:
            x = _next_combination(x)
    return best_c, best_mask
