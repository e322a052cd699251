"""Decision-tree hardness reduction lab."""

from ._core import (
    Graph,
    GuardError,
    PreconditionError,
    build_tree,
    coreset,
    decide,
    dtsize_exact,
    dtsize_over_coreset,
    ell_ind,
    ell_isedge,
    hard_distribution,
    is_vertex_cover,
    min_partial_vertex_cover,
    min_vertex_cover,
    random_graph,
    verify_coreset_claims,
)

__all__ = [
    "Graph",
    "GuardError",
    "PreconditionError",
    "build_tree",
    "coreset",
    "decide",
    "dtsize_exact",
    "dtsize_over_coreset",
    "ell_ind",
    "ell_isedge",
    "hard_distribution",
    "is_vertex_cover",
    "min_partial_vertex_cover",
    "min_vertex_cover",
    "random_graph",
    "verify_coreset_claims",
]
