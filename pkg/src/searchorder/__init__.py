"""Graph search orderings (GS, BFS, LBFS, MCS, MNS) that extend a given partial order."""

from .chordal_bipartite import build_layer_relations, normalize_layer_constraints, solve_psop_lbfs_cb_rooted
from .generic import solve_psop_gs_rooted, solve_psop_unrooted
from .graph import (
    BfsLayering,
    ClassCheck,
    Graph,
    GraphError,
    SplitPartition,
    bfs_layering,
    check_chordal_bipartite,
    find_split_partition,
    validate_graph,
)
from .oba import ObaInstance, check_oba, encode_partial_order_as_oba, solve_oba
from .oracle import brute_force_oba, brute_force_psop
from .order import CycleError, PartialOrder, build_partial_order, is_linear_extension
from .reductions import (
    RootedTree,
    end_vertex_order,
    extract_f_tree,
    extract_l_tree,
    f_tree_to_psop,
    l_tree_to_psop_bipartite,
)
from .search import (
    Search,
    SearchResult,
    check_lbfs_4point,
    compare_labels,
    enumerate_search_orderings,
    is_search_ordering,
    run_plus_search,
)
from .split import (
    NestedPropertyError,
    NotSplitError,
    build_lbfs_clique_relation,
    check_nested_property,
    compute_premature_set,
    nested_partial_order,
    solve_psop_lbfs_split,
    solve_psop_mcs_split,
)

__version__ = "0.1.0"
