"""Isolation-aware maximal clique enumeration.

A maximal clique of size k is isolated at factor ell when strictly fewer
than ell * k edges connect it to the rest of the graph. This package
enumerates exactly those cliques with a pivoted backtracking search
whose sterile subtrees are discarded by provably sound bounds, and ships
brute-force oracles, synthetic graph generators, and a CLI around it.
"""

from . import oracle
from .enumeration import (
    CliqueReport,
    RunStats,
    SearchNode,
    child_ext_cp,
    enumerate_all_maximal,
    enumerate_isolated,
    from_scratch_ext_cp,
    select_pivot,
)
from .generators import (
    BAConfig,
    FeatureModelConfig,
    GeneratorConfigError,
    canonical_spec,
    generate,
    generate_ba,
    generate_feature_model,
    parse_generator_spec,
)
from .graph import (
    EdgeListParseError,
    Graph,
    LoadReport,
    canonical_edge_list,
    induced_degrees,
    intersect_with_neighbors,
    load_edge_list,
    load_edge_list_report,
    write_edge_list,
)
from .pruning import (
    CLI_STRATEGIES,
    STRATEGIES,
    BoundKind,
    IsolationParams,
    NodeView,
    PruneStrategy,
    evaluate_strategy,
    external_degree,
    get_strategy,
    is_l_isolated,
    prune_test,
    ub_degeneracy,
    ub_degree,
    ub_size,
    ub_softcore,
)

__version__ = "0.1.0"

__all__ = [
    "BAConfig",
    "BoundKind",
    "CLI_STRATEGIES",
    "CliqueReport",
    "EdgeListParseError",
    "FeatureModelConfig",
    "GeneratorConfigError",
    "Graph",
    "IsolationParams",
    "LoadReport",
    "NodeView",
    "PruneStrategy",
    "RunStats",
    "STRATEGIES",
    "SearchNode",
    "canonical_edge_list",
    "canonical_spec",
    "child_ext_cp",
    "enumerate_all_maximal",
    "enumerate_isolated",
    "evaluate_strategy",
    "external_degree",
    "from_scratch_ext_cp",
    "generate",
    "generate_ba",
    "generate_feature_model",
    "get_strategy",
    "induced_degrees",
    "intersect_with_neighbors",
    "is_l_isolated",
    "load_edge_list",
    "load_edge_list_report",
    "oracle",
    "parse_generator_spec",
    "prune_test",
    "select_pivot",
    "ub_degeneracy",
    "ub_degree",
    "ub_size",
    "ub_softcore",
    "write_edge_list",
]
