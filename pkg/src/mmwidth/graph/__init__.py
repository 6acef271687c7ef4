from __future__ import annotations

from mmwidth.graph._bits import (
    VertexSet,
    bits,
    from_bits,
    full_mask,
    low_bit,
    popcount,
    submasks,
)
from mmwidth.graph._graph import (
    MAX_VERTICES,
    Edge,
    Graph,
    add_edges,
    add_vertices,
    contract_edge,
    delete_edge,
    delete_vertex,
    induced_subgraph,
    relabel,
)
from mmwidth.graph._graph6 import (
    edge_list_decode,
    edge_list_encode,
    graph6_decode,
    graph6_encode,
)
from mmwidth.graph._iso import (
    ENUMERATION_LIMIT,
    automorphisms,
    canonical_form,
    canonical_graph6,
    canonical_relabel,
    enumerate_graphs,
    is_isomorphic,
)
from mmwidth.graph._named import (
    available_names,
    complete,
    cycle,
    grid,
    grid_coord,
    grid_index,
    named,
    path,
    register_named,
)
from mmwidth.graph._structure import (
    Block,
    blocks,
    components,
    is_connected,
    is_k_connected,
    to_networkx,
    two_cuts,
)

__all__ = [
    "ENUMERATION_LIMIT",
    "MAX_VERTICES",
    "Block",
    "Edge",
    "Graph",
    "VertexSet",
    "add_edges",
    "add_vertices",
    "automorphisms",
    "available_names",
    "bits",
    "blocks",
    "canonical_form",
    "canonical_graph6",
    "canonical_relabel",
    "complete",
    "components",
    "contract_edge",
    "cycle",
    "delete_edge",
    "delete_vertex",
    "edge_list_decode",
    "edge_list_encode",
    "enumerate_graphs",
    "from_bits",
    "full_mask",
    "graph6_decode",
    "graph6_encode",
    "grid",
    "grid_coord",
    "grid_index",
    "induced_subgraph",
    "is_connected",
    "is_isomorphic",
    "is_k_connected",
    "low_bit",
    "named",
    "path",
    "popcount",
    "register_named",
    "relabel",
    "submasks",
    "to_networkx",
    "two_cuts",
]
