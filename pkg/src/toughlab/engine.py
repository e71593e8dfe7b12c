"""Exact toughness, the t-tough predicate and minimal toughness.

The engine sweeps candidate cuts by size. Every component of ``G - S`` holds
a vertex of an independent set, so ``c(G - S) <= min(alpha(G), n - |S|)``;
once ``|S| / min(alpha, n - |S|)`` reaches the best ratio found, no larger
cut can do strictly better and the sweep stops. Ties go to the smaller cut,
then to the smaller bitmask.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .graph import (
    Edge,
    Graph,
    GraphError,
    VertexSet,
    components,
    delete_edge,
    independence_number,
    popcount,
)
from .ratio import INFINITY, Ratio, is_finite, less_than
from .sweep import Sweeper, default_jobs

ORACLE_MAX_ORDER = 20


@dataclass(frozen=True)
class ToughnessResult:
    value: Ratio
    witness: Optional[VertexSet]
    witness_components: int

    @property
    def is_infinite(self) -> bool:
        return self.value is INFINITY


@dataclass(frozen=True)
class TToughResult:
    tough: bool
    violating_cut: Optional[VertexSet] = None
    components: int = 0

    def __bool__(self) -> bool:
        return self.tough


@dataclass(frozen=True)
class EdgeVerdict:
    edge: Edge
    tau_dropped: bool
    witness: Optional[VertexSet]
    components: int
    canonical: bool = False


@dataclass(frozen=True)
class MinimalityReport:
    tau: Ratio
    per_edge: list[EdgeVerdict] = field(default_factory=list)
    witness: Optional[VertexSet] = None
    witness_components: int = 0

    @property
    def minimally_tough(self) -> bool:
        return is_finite(self.tau) and all(v.tau_dropped for v in self.per_edge)


def _resolve_jobs(jobs: Optional[int]) -> int:
    return default_jobs() if jobs is None else jobs


def toughness(g: Graph, jobs: Optional[int] = None) -> ToughnessResult:
    """Exact toughness with a tie-broken optimal witness cut."""
    if g.is_complete():
        return ToughnessResult(INFINITY, None, 0)
    c0 = components(g)
    if c0 >= 2:
        return ToughnessResult(Fraction(0), 0, c0)

    alpha = independence_number(g)
    best: Optional[Fraction] = None
    best_mask, best_c = 0, 0
    with Sweeper(g, _resolve_jobs(jobs)) as sw:
        for size in range(1, g.n - 1):
            ceiling = min(alpha, g.n - size)
            # the bound size/ceiling only grows with size
            if ceiling < 2 or (best is not None and Fraction(size, ceiling) >= best):
                break
            c, mask = sw.scan(size, ceiling)
            if c >= 2 and (best is None or Fraction(size, c) < best):
                best, best_mask, best_c = Fraction(size, c), mask, c
    assert best is not None, "connected noncomplete graph must have a cut"
    return ToughnessResult(best, best_mask, best_c)


def is_t_tough(g: Graph, t: Ratio, jobs: Optional[int] = None) -> TToughResult:
    """Whether ``t * c(G - X) <= |X|`` for every cut ``X``.

    On failure returns the first violating cut in (size, bitmask) order.
    """
    if not is_finite(t):
        raise ValueError("t must be finite")
    t = Fraction(t)
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    if t == 0 or g.is_complete():
        return TToughResult(True)
    c0 = components(g)
    if c0 >= 2:
        return TToughResult(False, 0, c0)

    alpha = independence_number(g)
    with Sweeper(g, _resolve_jobs(jobs)) as sw:
        for size in range(1, g.n - 1):
            # smallest component count with size < t * c
            needed = max(2, size * t.denominator // t.numerator + 1)
            if needed > min(alpha, g.n - size):
                break
            c, mask = sw.scan(size, needed)
            if c >= needed:
                return TToughResult(False, mask, c)
    return TToughResult(True)


def tau_drops_below(
    g: Graph,
    edge: Edge,
    t: Ratio,
    hint: Optional[VertexSet] = None,
    jobs: Optional[int] = None,
) -> EdgeVerdict:
    """Decide ``tau(G - e) < t``, returning a certifying cut when it holds.

    A ``hint`` cut is checked first; the general search runs only if it
    fails to certify.
    """
    u, v = edge
    if not is_finite(t):
        raise ValueError("t must be finite")
    h = delete_edge(g, u, v)
    if hint is not None:
        c = components(h, hint)
        if c >= 2 and less_than(popcount(hint), c, t):
            return EdgeVerdict((u, v), True, hint, c, canonical=True)
    res = is_t_tough(h, t, jobs=jobs)
    if res.tough:
        return EdgeVerdict((u, v), False, None, 0)
    return EdgeVerdict((u, v), True, res.violating_cut, res.components)


def is_minimally_tough(
    g: Graph,
    witness_hint: Optional[Callable[[Edge], Optional[VertexSet]]] = None,
    jobs: Optional[int] = None,
) -> MinimalityReport:
    """Check ``tau(G - e) < tau(G)`` for every edge, one edge at a time.

    ``witness_hint`` maps an edge to a candidate cut (e.g. a family's
    canonical witness) tried before the general search.
    """
    if g.n < 2:
        raise GraphError("minimal toughness needs at least 2 vertices")
    base = toughness(g, jobs=jobs)
    if base.is_infinite:
        return MinimalityReport(INFINITY)
    verdicts = []
    for e in g.edges():
        hint = witness_hint(e) if witness_hint is not None else None
        verdicts.append(tau_drops_below(g, e, base.value, hint=hint, jobs=jobs))
    return MinimalityReport(base.value, verdicts, base.witness, base.witness_components)


# --- independent oracle -------------------------------------------------------


def _bfs_components(neighbours: list[list[int]], alive: list[bool]) -> int:
    seen = [not a for a in alive]
    count = 0
    for start in range(len(alive)):
        if seen[start]:
            continue
        count += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in neighbours[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return count


def toughness_oracle(g: Graph) -> ToughnessResult:
    """Unpruned enumeration of all ``2^n`` vertex subsets.

    Shares no code with the engine: adjacency lists and breadth-first search
    instead of bitset sweeps. Same tie-break as :func:`toughness`.
    """
    n = g.n
    if n > ORACLE_MAX_ORDER:
        raise GraphError(f"oracle is capped at n <= {ORACLE_MAX_ORDER}, got {n}")
    neighbours = [[u for u in range(n) if g.adj[v] >> u & 1] for v in range(n)]
    best_key = None
    best = ToughnessResult(INFINITY, None, 0)
    for mask in range(1 << n):
        alive = [not (mask >> v & 1) for v in range(n)]
        c = _bfs_components(neighbours, alive)
        if c < 2:
            continue
        size = n - sum(alive)
        key = (Fraction(size, c), size, mask)
        if best_key is None or key < best_key:
            best_key = key
            best = ToughnessResult(key[0], mask, c)
    return best
