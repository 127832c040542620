"""Incidence-graph constructions with exact verification."""

from ._girthforge import (
    AffineLine,
    BipartiteGraph,
    BudgetExceeded,
    GirthforgeError,
    ParseError,
    PlanarArrangement,
    ProjectionFailed,
    TruncatedArrangement,
    build_truncated,
    degree_stats,
    embedding_prime,
    girth,
    girth_target,
    graphs_identical,
    has_cycle_of_length,
    incidences,
    int_nth_root,
    is_prime,
    is_valid_cycle,
    lines_distinct,
    lu_graph,
    next_prime,
    project,
    realize_lines,
    st_ratio,
    theoretical_exponent,
    verify_subgraph_embedding,
    wenger_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
