"""Synchronous amnesiac flooding on undirected graphs."""

from .auxgraph import (
    AuxGraph,
    build_aux_multi,
    build_aux_single,
    build_forward_subgraph,
    build_g_star,
    check_round_correspondence,
    flood_via_aux,
)
from .centers import (
    CenterReport,
    flood_k,
    greedy_k_center,
    k_radius,
    ni_k_radius,
    spanning_tree_preserving_k_radius,
    total_domination_number,
)
from .flood import (
    FloodTrace,
    RoundCapExceeded,
    flood_rounds,
    last_receipt_rounds,
    message_count,
    simulate,
)
from .graph import (
    Graph,
    GraphError,
    GraphFormatError,
    bfs,
    classify_edges,
    eccentricity,
    format_graph,
    is_bipartite,
    is_connected,
    parse_graph,
    radius_diameter,
)
from .reductions import (
    FloodingInstance,
    attach_gadget,
    decide_flooding,
    reduce_total_domination,
    validate_reduction,
)
from .verify import enumerate_connected, random_connected, run_suite

__version__ = "0.1.0"
