"""Exact graph toughness and machine-checked minimally t-tough circulant families."""

from .families import (
    FamilyId,
    FamilyKind,
    WitnessCut,
    edge_witness,
    expected_toughness,
    family_graph,
    family_id,
    four_regular_family,
    kriesell_gap,
    six_regular_family,
    tight_cut,
)
from .graph import (
    CirculantSpec,
    Graph,
    GraphError,
    circulant,
    components,
    degree_profile,
    delete_edge,
    independence_number,
    members,
    vertex_connectivity,
    vertex_set,
)
from .io import read_graph, read_graph6, read_edgelist, write_graph, write_graph6, write_edgelist
from .ratio import INFINITY, Ratio, format_ratio, parse_ratio
from .engine import (
    MinimalityReport,
    ToughnessResult,
    is_minimally_tough,
    is_t_tough,
    tau_drops_below,
    toughness,
    toughness_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "CirculantSpec",
    "FamilyId",
    "FamilyKind",
    "Graph",
    "GraphError",
    "INFINITY",
    "MinimalityReport",
    "Ratio",
    "ToughnessResult",
    "WitnessCut",
    "circulant",
    "components",
    "degree_profile",
    "delete_edge",
    "edge_witness",
    "expected_toughness",
    "family_graph",
    "family_id",
    "format_ratio",
    "four_regular_family",
    "independence_number",
    "is_minimally_tough",
    "is_t_tough",
    "kriesell_gap",
    "members",
    "parse_ratio",
    "read_edgelist",
    "read_graph",
    "read_graph6",
    "six_regular_family",
    "tau_drops_below",
    "tight_cut",
    "toughness",
    "toughness_oracle",
    "vertex_connectivity",
    "vertex_set",
    "write_edgelist",
    "write_graph",
    "write_graph6",
]
