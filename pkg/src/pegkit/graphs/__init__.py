"""Graph representation, constructions, metrics and small-graph enumeration."""

from .core import (
    MAX_VERTICES,
    Graph,
    GraphError,
    bits_to_list,
    dumps_graph,
    graph_from_dict,
    graph_to_dict,
    iter_bits,
    loads_graph,
    to_mask,
)
from .families import (
    FAMILIES,
    cartesian_product,
    complement,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    dpm1_a,
    dpm1_b,
    empty,
    hoffman_singleton,
    hypercube,
    join,
    ld3_extremal,
    ld3_labels,
    make_family,
    path,
    spider,
    star,
)
from .iso import (
    automorphisms,
    canonical_form,
    canonical_graph,
    enumerate_graphs,
    graph_hash,
    is_isomorphic,
)
from .metrics import (
    INF,
    bfs_distances,
    components,
    contains_induced,
    diameter,
    distance_matrix,
    find_p4,
    girth,
    independence_number,
    is_connected,
    vertex_edge_diameter,
)

__all__ = [
    "MAX_VERTICES", "Graph", "GraphError", "bits_to_list", "dumps_graph",
    "graph_from_dict", "graph_to_dict", "iter_bits", "loads_graph", "to_mask",
    "FAMILIES", "cartesian_product", "complement", "complete",
    "complete_multipartite", "cycle", "disjoint_union", "dpm1_a", "dpm1_b",
    "empty", "hoffman_singleton", "hypercube", "join", "ld3_extremal",
    "ld3_labels", "make_family", "path", "spider", "star", "automorphisms",
    "canonical_form", "canonical_graph", "enumerate_graphs", "graph_hash",
    "is_isomorphic", "INF", "bfs_distances", "components", "contains_induced",
    "diameter", "distance_matrix", "find_p4", "girth", "independence_number",
    "is_connected", "vertex_edge_diameter",
]
