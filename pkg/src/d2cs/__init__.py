"""Counting and enumeration of distance-2 clique sets (vertex sets whose induced subgraph has diameter <= 2)."""

from .enum_all import d2cs_filter, enum_all_d2cs, enum_cliques_min3
from .graph import (
    INFINITE,
    Graph,
    GraphError,
    bfs_distances,
    closed_neighborhood,
    diameter,
    graph_square,
    induced_subgraph,
    is_d2cs,
)
from .oracle import OracleLimitError, OracleResult, oracle_count, oracle_maximal, oracle_maximum
from .schordal import (
    EliminationOrdering,
    SeoViolation,
    ViolationKind,
    count_maximal_schordal,
    find_seo,
    maximal_d2cs_paper,
    maximal_d2cs_reference,
    verify_seo,
)

__version__ = "0.1.0"
