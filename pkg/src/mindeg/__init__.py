"""mindeg: exact minimum degree orderings for sparse symmetric patterns.

The package computes exact minimum degree elimination orderings with a
hypergraph-assisted engine, checks them against brute-force oracles, and
generates adversarial filler graphs that force any minimum-degree run
into quadratic fill.
"""

from .engine import (AttemptBounds, BucketQueue, EliminationResult, EpochArray,
                     HyperedgeStore, MinDegreeEngine, OrderingConfig, StepStats,
                     attempt_bounds, fast_minimum_degree)
from .errors import (ConfigError, InputError, MinDegError, ParseError,
                     StateError)
from .fillers import (CheckResult, CliqueUnionInstance, LabeledGraph,
                      bounded_filler, check_degree_bounded,
                      check_min_degree_property, clique_union,
                      clique_union_bruteforce, comb_filler, is_filler,
                      min_degree_filler)
from .graph import (Graph, complete_graph, degree, from_edge_list,
                    gnm_random_graph, gnp_random_graph, graph_union, grid_graph)
from .io import (RunStats, read_edge_list, read_matrix_market,
                 read_permutation, write_edge_list, write_permutation,
                 write_stats)
from .oracle import (FillSimulator, Orientation, VerifyResult,
                     fill_count_of_ordering, fill_degrees, fill_graph,
                     naive_minimum_degree, orient_bounded_outdegree,
                     verify_min_degree_ordering)

__version__ = "0.1.0"

__all__ = [
    "AttemptBounds", "BucketQueue", "CheckResult", "CliqueUnionInstance",
    "ConfigError", "EliminationResult", "EpochArray", "FillSimulator", "Graph",
    "HyperedgeStore", "InputError", "LabeledGraph", "MinDegError",
    "MinDegreeEngine", "OrderingConfig", "Orientation", "ParseError", "RunStats",
    "StateError", "StepStats", "VerifyResult", "attempt_bounds",
    "bounded_filler", "check_degree_bounded", "check_min_degree_property",
    "clique_union", "clique_union_bruteforce", "comb_filler", "complete_graph",
    "degree", "fast_minimum_degree", "fill_count_of_ordering", "fill_degrees",
    "fill_graph", "from_edge_list", "gnm_random_graph", "gnp_random_graph",
    "graph_union", "grid_graph", "is_filler", "min_degree_filler",
    "naive_minimum_degree", "orient_bounded_outdegree", "read_edge_list",
    "read_matrix_market", "read_permutation", "verify_min_degree_ordering",
    "write_edge_list", "write_permutation", "write_stats",
]
