"""Minimal-diameter k-(quasi-)regular graphs as filling patterns for
incomplete pairwise comparison matrices."""
from __future__ import annotations

from .canonical import CanonicalForm, are_isomorphic, canonical_form, canonical_labeling
from .catalog import CatalogEntry, lookup, verify_catalog
from .census import (
    CensusQuery,
    CensusResult,
    enumerate_degree_constrained,
    has_graph_with_diameter,
    min_diameter_census,
    moore_bound,
)
from .errors import (
    CatalogLookupError,
    ConnectivityError,
    DegreeError,
    FrontierError,
    Graph6Error,
    GraphError,
    ParityError,
    ReciprocityError,
    SizeError,
)
from .graph import (
    UNREACHABLE,
    Graph,
    add_edge,
    bfs_distances,
    completion_ratio,
    degree_sequence,
    diameter,
    graph_new,
    is_connected,
    is_k_quasi_regular,
    is_k_regular,
    required_edge_count,
)
from .graph6 import decode_graph6, encode_graph6
from .pcm import (
    FillingPattern,
    PcmMask,
    Recommendation,
    graph_from_mask,
    mask_from_pattern,
    pattern_from_graph,
    recommend,
)
from .search import SearchResult, stochastic_low_diameter_search
from .summary import summary_table
