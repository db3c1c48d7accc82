"""Triangle listing on oriented graphs with exact operation counters."""

from ._core import (
    ALGORITHMS,
    Graph,
    OrientedGraph,
    ParseFailure,
    brute_force_triangles,
    cost_model,
    count_triangles,
    edge_polarity,
    list_triangles,
    load_edge_list,
    load_edge_list_text,
    orient,
    run,
    verify_equivalence,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "Graph",
    "OrientedGraph",
    "ParseFailure",
    "brute_force_triangles",
    "cost_model",
    "count_triangles",
    "edge_polarity",
    "list_triangles",
    "load_edge_list",
    "load_edge_list_text",
    "orient",
    "run",
    "verify_equivalence",
]
