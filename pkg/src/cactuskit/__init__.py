"""Exact solvers for two cactus graph problems.

Given a connected graph, ``spanning_tree_to_cactus`` augments a given
spanning tree with the most non-tree edges that keep the result a
cactus (polynomial time), and the ``edc_*`` family deletes the fewest
edges so the whole graph becomes a cactus (three exchangeable exact
methods that cross-check each other).  Everything is built on validated
graphs with dense edge ids, a block decomposition, and a general-graph
maximum matching kernel.
"""

from .bench import BenchRecord, run_bench, write_csv
from .edge_deletion import (
    BASE_CAP,
    EdcResult,
    SubsetEntry,
    SubsetTable,
    TreeEnumStats,
    base_case_value,
    count_spanning_trees,
    edc_brute_force,
    edc_subset_dp,
    edc_tree_enum,
    enumerate_spanning_trees,
    find_cut_cactus,
    find_max_cactus,
    new_subset_table,
)
from .errors import (
    CactusKitError,
    CrossCheckError,
    DuplicateEdge,
    EdgeNotInGraph,
    EmptyGraph,
    EmptySubset,
    FileSyntaxError,
    InfeasibleParams,
    InputError,
    LimitError,
    LimitExceeded,
    LoopEdge,
    NotConnected,
    NotConnectedSubset,
    NotSpanningTree,
    PreconditionViolated,
    SameEndpoints,
    SubsetTooLarge,
    TooLargeForOracle,
    TooManyEdges,
    TooManyTrees,
    TooManyVertices,
    VertexOutOfRange,
    WrongEdgeCount,
)
from .files import (
    parse_graph_file,
    parse_tree_file,
    read_graph_path,
    read_tree_path,
    write_graph_file,
    write_graph_path,
)
from .generate import gen_instance, random_spanning_tree
from .graph import (
    BRIDGE_EDGE,
    OTHER,
    SIMPLE_CYCLE,
    BlockDecomposition,
    CactusVerdict,
    Graph,
    InducedSubgraph,
    SpanningTree,
    TreePath,
    biconnected_blocks,
    build_graph,
    connected_cactus_edge_subset,
    edge_id_of,
    induced_subgraph,
    is_cactus,
    is_connected,
    lca,
    spanning_tree_from_ids,
    tree_path,
    validate_spanning_tree,
)
from .matching import (
    Matching,
    MatchingInstance,
    brute_matching,
    matching_instance,
    max_matching,
)
from .minimal import MinimalityReport, PairCycleEntry, check_minimal, simple_cycles
from .tree_to_cactus import (
    ConflictGraph,
    StcResult,
    build_conflict_graph,
    max_disjoint_paths,
    spanning_tree_to_cactus,
    stc_brute_force,
)

__version__ = "0.1.0"

__all__ = [
    "BASE_CAP",
    "BRIDGE_EDGE",
    "BenchRecord",
    "BlockDecomposition",
    "CactusKitError",
    "CactusVerdict",
    "ConflictGraph",
    "CrossCheckError",
    "DuplicateEdge",
    "EdcResult",
    "EdgeNotInGraph",
    "EmptyGraph",
    "EmptySubset",
    "FileSyntaxError",
    "Graph",
    "InducedSubgraph",
    "InfeasibleParams",
    "InputError",
    "LimitError",
    "LimitExceeded",
    "LoopEdge",
    "Matching",
    "MatchingInstance",
    "MinimalityReport",
    "NotConnected",
    "NotConnectedSubset",
    "NotSpanningTree",
    "OTHER",
    "PairCycleEntry",
    "PreconditionViolated",
    "SIMPLE_CYCLE",
    "SameEndpoints",
    "SpanningTree",
    "StcResult",
    "SubsetEntry",
    "SubsetTable",
    "SubsetTooLarge",
    "TooLargeForOracle",
    "TooManyEdges",
    "TooManyTrees",
    "TooManyVertices",
    "TreeEnumStats",
    "TreePath",
    "VertexOutOfRange",
    "WrongEdgeCount",
    "base_case_value",
    "biconnected_blocks",
    "brute_matching",
    "build_conflict_graph",
    "build_graph",
    "check_minimal",
    "connected_cactus_edge_subset",
    "count_spanning_trees",
    "edc_brute_force",
    "edc_subset_dp",
    "edc_tree_enum",
    "edge_id_of",
    "enumerate_spanning_trees",
    "find_cut_cactus",
    "find_max_cactus",
    "gen_instance",
    "induced_subgraph",
    "is_cactus",
    "is_connected",
    "lca",
    "matching_instance",
    "max_disjoint_paths",
    "max_matching",
    "new_subset_table",
    "parse_graph_file",
    "parse_tree_file",
    "random_spanning_tree",
    "read_graph_path",
    "read_tree_path",
    "run_bench",
    "simple_cycles",
    "spanning_tree_from_ids",
    "spanning_tree_to_cactus",
    "stc_brute_force",
    "tree_path",
    "validate_spanning_tree",
    "write_csv",
    "write_graph_file",
    "write_graph_path",
]
