"""Exact average vertex/edge connectivity toolkit."""

from ._core import (
    MINIMUM_CONSTRUCTIVE_ORDER,
    MultiGraph,
    average_connectivity,
    bound,
    canonical_key,
    complete_bipartite,
    construct_optimal,
    cycle,
    cycle_bundle,
    cycle_power,
    find_optimal,
    from_edge_list,
    from_graph6,
    improve_until_fixed,
    is_ideally_connected,
    is_ideally_edge_connected,
    is_minimally_2_connected,
    is_minimally_2_edge_connected,
    is_minimally_k_connected,
    is_necklace,
    local_connectivity,
    report,
    search_ideally_connected,
    subdivide_all,
    to_edge_list,
    to_graph6,
    total_connectivity,
    __version__,
)

__all__ = [
    "MINIMUM_CONSTRUCTIVE_ORDER",
    "MultiGraph",
    "average_connectivity",
    "bound",
    "canonical_key",
    "complete_bipartite",
    "construct_optimal",
    "cycle",
    "cycle_bundle",
    "cycle_power",
    "find_optimal",
    "from_edge_list",
    "from_graph6",
    "improve_until_fixed",
    "is_ideally_connected",
    "is_ideally_edge_connected",
    "is_minimally_2_connected",
    "is_minimally_2_edge_connected",
    "is_minimally_k_connected",
    "is_necklace",
    "local_connectivity",
    "report",
    "search_ideally_connected",
    "subdivide_all",
    "to_edge_list",
    "to_graph6",
    "total_connectivity",
    "__version__",
]
