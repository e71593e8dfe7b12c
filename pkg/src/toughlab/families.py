"""The two circulant counterexample families and their proof certificates.

* four-regular: cycle ``v_1 .. v_{2k+1}`` plus chords ``v_i v_{i+3}``, toughness ``(k+1)/(k-1)``;
* six-regular: cycle ``v_1 .. v_{3k+1}`` plus chords ``v_i v_{i+2}``, ``v_i v_{i+4}``,
  toughness ``2k/(k-1)``.

Cuts are generated from ``k`` with the 1-based labels used in the proofs and
stored as 0-based bitmasks. Edge witnesses are written for one representative
edge per distance class (the one at ``v_1``) and carried to any other edge of
that class by rotation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .graph import Edge, Graph, GraphError, VertexSet, circulant, rotate_set
from .ratio import ceil_ratio


class FamilyKind(enum.Enum):
    FOUR_REGULAR = "4reg"
    SIX_REGULAR = "6reg"

    @classmethod
    def parse(cls, text: str) -> "FamilyKind":
        aliases = {"4reg": cls.FOUR_REGULAR, "four_regular": cls.FOUR_REGULAR,
                   "6reg": cls.SIX_REGULAR, "six_regular": cls.SIX_REGULAR}
        try:
            return aliases[text.lower()]
        except KeyError:
            raise ValueError(f"unknown family kind {text!r}; expected 4reg or 6reg") from None


DISTANCES = {FamilyKind.FOUR_REGULAR: (1, 3), FamilyKind.SIX_REGULAR: (1, 2, 4)}
DEGREE = {FamilyKind.FOUR_REGULAR: 4, FamilyKind.SIX_REGULAR: 6}
MIN_K = 3
MAX_K = {FamilyKind.FOUR_REGULAR: 31, FamilyKind.SIX_REGULAR: 21}


class FamilyId(NamedTuple):
    kind: FamilyKind
    k: int

    @property
    def order(self) -> int:
        return 2 * self.k + 1 if self.kind is FamilyKind.FOUR_REGULAR else 3 * self.k + 1

    def validate(self) -> "FamilyId":
        if self.k < MIN_K:
            raise GraphError(f"family parameter must satisfy k >= {MIN_K}, got k={self.k}")
        if self.k > MAX_K[self.kind]:
            raise GraphError(
                f"k={self.k} exceeds the 64-vertex limit (k <= {MAX_K[self.kind]} for {self.kind.value})"
            )
        return self


def family_id(kind: FamilyKind | str, k: int) -> FamilyId:
    if isinstance(kind, str):
        kind = FamilyKind.parse(kind)
    return FamilyId(kind, k).validate()


@dataclass(frozen=True)
class WitnessCut:
    cut: VertexSet
    expected_size: int
    expected_components: int
    edge: Optional[Edge] = None  # None for the tight cut of the intact graph

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.expected_size, self.expected_components)


def _labels(*groups: Iterable[int]) -> VertexSet:
    # 1-based labels v_i -> bit i-1
    mask = 0
    for group in groups:
        for i in group:
            mask |= 1 << (i - 1)
    return mask


def four_regular_family(k: int) -> Graph:
    fid = family_id(FamilyKind.FOUR_REGULAR, k)
    return circulant(fid.order, DISTANCES[fid.kind])


def six_regular_family(k: int) -> Graph:
    fid = family_id(FamilyKind.SIX_REGULAR, k)
    return circulant(fid.order, DISTANCES[fid.kind])


def family_graph(fid: FamilyId) -> Graph:
    fid.validate()
    return circulant(fid.order, DISTANCES[fid.kind])


def expected_toughness(fid: FamilyId) -> Fraction:
    k = fid.validate().k
    if fid.kind is FamilyKind.FOUR_REGULAR:
        return Fraction(k + 1, k - 1)
    return Fraction(2 * k, k - 1)


def tight_cut(fid: FamilyId) -> WitnessCut:
    """The cut attaining the toughness of the intact family graph."""
    k = fid.validate().k
    if fid.kind is FamilyKind.FOUR_REGULAR:
        cut = _labels(2 * i + 1 for i in range(0, k + 1))
        return WitnessCut(cut, k + 1, k - 1)
    cut = _labels((1, 3), *((3 * t - 1, 3 * t) for t in range(2, k + 1)))
    return WitnessCut(cut, 2 * k, k - 1)


def _representative_witnesses(fid: FamilyId) -> dict[int, tuple[VertexSet, int, int]]:
    """distance -> (cut, size, components) for the class representative ``v_1 v_{1+d}``."""
    k = fid.k
    if fid.kind is FamilyKind.FOUR_REGULAR:
        return {
            1: (_labels(2 * i + 1 for i in range(1, k + 1)), k, k - 1),
            3: (_labels([2], (2 * i + 1 for i in range(2, k + 1))), k, k - 1),
        }
    n = 3 * k + 1
    return {
        1: (_labels((3, n - 2, n), *((3 * t - 1, 3 * t) for t in range(2, k))), 2 * k - 1, k - 1),
        2: (_labels((2, n - 3, n - 1, n), *((3 * t - 2, 3 * t - 1) for t in range(2, k))), 2 * k, k),
        4: (_labels((2, 3, n), *((3 * t - 2, 3 * t) for t in range(2, k + 1))), 2 * k + 1, k),
    }


def edge_class(fid: FamilyId, edge: Edge) -> tuple[int, int]:
    """``(distance, lower endpoint)`` of an edge, the lower endpoint ``a`` being
    the one with ``a + distance = other (mod n)``."""
    n = fid.order
    u, v = edge
    if not (0 <= u < n and 0 <= v < n) or u == v:
        raise GraphError(f"edge {edge} not in the order-{n} family graph")
    forward = (v - u) % n
    if forward in DISTANCES[fid.kind]:
        return forward, u
    backward = (u - v) % n
    if backward in DISTANCES[fid.kind]:
        return backward, v
    raise GraphError(f"edge {edge} has distance {min(forward, backward)}, not one of {DISTANCES[fid.kind]}")


def edge_witness(fid: FamilyId, edge: Edge) -> WitnessCut:
    """Canonical cut showing toughness drops once ``edge`` is deleted."""
    fid.validate()
    distance, lower = edge_class(fid, edge)
    cut, size, comps = _representative_witnesses(fid)[distance]
    u, v = edge
    return WitnessCut(rotate_set(cut, lower, fid.order), size, comps, (min(u, v), max(u, v)))


def canonical_hints(fid: FamilyId):
    """Edge -> canonical cut, suitable as ``witness_hint`` for the engine."""
    def hint(edge: Edge) -> Optional[VertexSet]:
        return edge_witness(fid, edge).cut
    return hint


class KriesellGap(NamedTuple):
    degree: int
    ceil_2t: int
    violates: bool


def kriesell_gap(fid: FamilyId) -> KriesellGap:
    """Compare the regular degree with ceil(2t) for the family's toughness t."""
    degree = DEGREE[fid.kind]
    ceil_2t = ceil_ratio(2 * expected_toughness(fid))
    return KriesellGap(degree, ceil_2t, ceil_2t < degree)
