"""Exact analysis of independent set games on small graphs."""

from .errors import (
    GraphParseError,
    InstanceTooLargeError,
    IsGamesError,
    IsolatedVertexError,
)
from .games import GameSpec, ValueTable, Variant, gamma, marginal, value_table
from .graph import (
    CanonKey,
    Coalition,
    Graph,
    canonical_form,
    components,
    edge_induced_subgraph,
    exclusive_vertices,
    induced_subgraph,
    is_star,
    parse_graph,
    pendant_edges,
    pendant_vertices,
)
from .independence import (
    AlphaCache,
    alpha,
    is_koenig_egervary,
    max_matching_size,
    min_edge_cover_size,
)
from .recognizers import (
    Verdict,
    relaxed_additive,
    relaxed_convex,
    strict_additive,
    strict_balanced,
    strict_convex,
)
from .oracle import Classification, Counterexample, check_pair, classify, classify_pairwise
from .solutions import CoreVerdict, core_check, marginal_vector, shapley
from .enumeration import CensusRow, census, enumerate_connected

__version__ = "0.1.0"
