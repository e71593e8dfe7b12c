"""Bitset graphs on at most 64 vertices and their elementary invariants.

Vertices are 0-based internally; vertex ``i`` is the 1-based label
``v_{i+1}``. A vertex set is a plain ``int`` bitmask.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

MAX_ORDER = 64

VertexSet = int
Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph data or a precondition violation on a graph operation."""


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        if v < 0:
            raise GraphError(f"negative vertex index {v}")
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the neighbour bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = self.full
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, combinations(range(n), 2))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> Iterator[Edge]:
        """Edges ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in members(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def is_complete(self) -> bool:
        full = self.full
        return all(row | (1 << v) == full for v, row in enumerate(self.adj))

    def check_subset(self, mask: VertexSet) -> None:
        if mask < 0 or mask & ~self.full:
            raise GraphError(f"vertex set {mask:#x} has bits outside 0..{self.n - 1}")


class CirculantSpec(NamedTuple):
    n: int
    distances: tuple[int, ...]


def circulant_spec(n: int, distances: Iterable[int]) -> CirculantSpec:
    if not 3 <= n <= MAX_ORDER:
        raise GraphError(f"circulant order must be in 3..{MAX_ORDER}, got {n}")
    ds = tuple(sorted(set(distances)))
    if not ds:
        raise GraphError("circulant needs at least one distance")
    for d in ds:
        if not 1 <= d <= n // 2:
            raise GraphError(f"distance {d} out of range 1..{n // 2} for n={n}")
    return CirculantSpec(n, ds)


def circulant(n: int | CirculantSpec, distances: Iterable[int] | None = None) -> Graph:
    """Circulant graph: vertex ``i`` joined to ``i ± d (mod n)`` for each distance ``d``.

    Accepts either a :class:`CirculantSpec` or ``(n, distances)``.
    A distance of exactly ``n/2`` contributes one neighbour, not two.
    """
    spec = n if isinstance(n, CirculantSpec) else circulant_spec(n, distances or ())
    order = spec.n
    adj = [0] * order
    for i in range(order):
        for d in spec.distances:
            adj[i] |= 1 << ((i + d) % order) | 1 << ((i - d) % order)
    return Graph(order, tuple(adj))


def components(g: Graph, removed: VertexSet = 0) -> int:
    """Number of connected components of ``g - removed``; 0 when everything is removed."""
    g.check_subset(removed)
    adj = g.adj
    rest = g.full & ~removed
    count = 0
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= adj[low.bit_length() - 1]
                f ^= low
            frontier = reach & rest & ~comp
            comp |= frontier
        rest &= ~comp
        count += 1
    return count


def is_connected(g: Graph) -> bool:
    return components(g) == 1


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not present")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def rotate_set(mask: VertexSet, shift: int, n: int) -> VertexSet:
    """Apply ``i -> i + shift (mod n)`` to every member of ``mask``."""
    shift %= n
    full = (1 << n) - 1
    return ((mask << shift) | (mask >> (n - shift))) & full


class DegreeProfile(NamedTuple):
    min_degree: int
    max_degree: int
    is_regular: bool


def degree_profile(g: Graph) -> DegreeProfile:
    degrees = [g.degree(v) for v in range(g.n)]
    lo, hi = min(degrees), max(degrees)
    return DegreeProfile(lo, hi, lo == hi)


def independence_number(g: Graph) -> int:
    """Exact maximum independent set size by bitset branch and bound."""
    return popcount(maximum_independent_set(g))


def maximum_independent_set(g: Graph) -> VertexSet:
    adj = g.adj
    best = 0
    best_size = 0

    def expand(chosen: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        # vertices of degree <= 1 inside cand are always safe to take
        while True:
            forced = 0
            c = cand
            while c:
                low = c & -c
                v = low.bit_length() - 1
                if popcount(adj[v] & cand) <= 1:
                    forced = low
                    break
                c ^= low
            if not forced:
                break
            v = forced.bit_length() - 1
            chosen |= forced
            size += 1
            cand &= ~(forced | adj[v])
        if not cand:
            if size > best_size:
                best, best_size = chosen, size
            return
        if size + popcount(cand) <= best_size:
            return
        # branch on a vertex of maximum degree within cand
        pivot, pivot_deg = -1, -1
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            d = popcount(adj[v] & cand)
            if d > pivot_deg:
                pivot, pivot_deg = v, d
            c ^= low
        bit = 1 << pivot
        expand(chosen | bit, size + 1, cand & ~(bit | adj[pivot]))
        expand(chosen, size, cand & ~bit)

    expand(0, 0, g.full)
    return best


def vertex_connectivity(g: Graph) -> int:
    """Exact connectivity: smallest separator size, ``n - 1`` for complete graphs.

    Searches separators by increasing size up to the minimum degree, which
    bounds the connectivity of every noncomplete graph.
    """
    if g.is_complete():
        return g.n - 1
    if not is_connected(g):
        return 0
    from .sweep import find_cut

    for size in range(1, degree_profile(g).min_degree + 1):
        if find_cut(g, size, min_components=2) is not None:
            return size
    raise AssertionError("noncomplete graph has a separator of size <= min degree")


def is_independent(g: Graph, mask: VertexSet) -> bool:
    return all(not (g.adj[v] & mask) for v in members(mask))
