"""Exact maximum k-plex search with colouring- and partition-based upper bounds."""
from .bounds import (
    BoundKind,
    BoundResult,
    Extraction,
    compute_bound,
    compute_disepub,
    compute_gcb,
    compute_gcbpub,
    compute_tisub,
    relax_coloring,
    relax_coloring_norules,
    select_partition,
    select_ub,
    try_color,
)
from .graph import (
    Graph,
    GraphParseError,
    degeneracy_order,
    induced_subgraph,
    parse_dimacs,
    parse_edgelist,
    parse_graph,
    read_graph,
)
from .kplex import SearchState, delta_slack, is_kplex
from .oracle import OracleResult, max_extension_bruteforce, max_kplex_bruteforce
from .solver import SolveReport, heuristic_lb, omega_upper_check, peel, solve

__version__ = "0.1.0"
