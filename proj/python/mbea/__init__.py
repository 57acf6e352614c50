"""Backbone and mutual-determination evolution for minimum vertex cover."""

from ._mbea import (
    BudgetExceeded,
    ContractViolation,
    Graph,
    GraphFormatError,
    MbeaResult,
    ParameterError,
    RankAssignment,
    complete_graph,
    cover_from_rsg,
    cycle_graph,
    enumerate_min_covers,
    exact_min_cover,
    experiment,
    generate_er,
    leaf_removal_ranks,
    parse_edge_list,
    path_graph,
    run_mbea,
    summarize_space,
    write_edge_list,
)

__all__ = [
    "BudgetExceeded",
    "ContractViolation",
    "Graph",
    "GraphFormatError",
    "MbeaResult",
    "ParameterError",
    "RankAssignment",
    "complete_graph",
    "cover_from_rsg",
    "cycle_graph",
    "enumerate_min_covers",
    "exact_min_cover",
    "experiment",
    "generate_er",
    "leaf_removal_ranks",
    "parse_edge_list",
    "path_graph",
    "run_mbea",
    "summarize_space",
    "write_edge_list",
]
