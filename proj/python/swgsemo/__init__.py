"""GSEMO and sliding-window GSEMO for budget-constrained maximum coverage."""

from ._core import (
    CoverageInstance,
    Graph,
    ParseError,
    RunResult,
    brute_force_optimum,
    closed_neighborhoods,
    coverage_instance,
    effective_budget,
    mann_whitney_u,
    parse_edge_list,
    read_graph_file,
    recommended_tmax_general,
    recommended_tmax_uniform,
    run,
    run_experiment,
    summarize,
)

__all__ = [
    "CoverageInstance",
    "Graph",
    "ParseError",
    "RunResult",
    "brute_force_optimum",
    "closed_neighborhoods",
    "coverage_instance",
    "effective_budget",
    "mann_whitney_u",
    "parse_edge_list",
    "read_graph_file",
    "recommended_tmax_general",
    "recommended_tmax_uniform",
    "run",
    "run_experiment",
    "summarize",
]
