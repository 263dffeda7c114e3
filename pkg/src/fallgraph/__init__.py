"""Distance-k fall colorings: constructions, verifiers and brute-force oracles."""
from .coloring import (
    UNCOLORED,
    Coloring,
    GoodnessReport,
    color_classes,
    goodness,
    goodness_partial,
    is_distance_fall,
    is_independent_distance_dominating,
    is_proper,
)
from .graph import (
    UNREACHABLE,
    Graph,
    all_pairs_distances,
    build_graph,
    cartesian_product,
    diametral_decomposition,
    generate,
    structure_queries,
)
from .oracle import enumerate_instances, exists_distance_fall, min_independent_distance_dominating
from .products import pair_product_coloring, sum_product_coloring
from .solvers import (
    distance2_fall_3coloring,
    find_proper_k_coloring,
    partial_3coloring_distance3,
    repair_distance2_fall,
    tree_idd_witness,
    tree_k_coloring,
)

__version__ = "0.1.0"

__all__ = [
    "UNCOLORED",
    "Coloring",
    "GoodnessReport",
    "color_classes",
    "goodness",
    "goodness_partial",
    "is_distance_fall",
    "is_independent_distance_dominating",
    "is_proper",
    "UNREACHABLE",
    "Graph",
    "all_pairs_distances",
    "build_graph",
    "cartesian_product",
    "diametral_decomposition",
    "generate",
    "structure_queries",
    "enumerate_instances",
    "exists_distance_fall",
    "min_independent_distance_dominating",
    "pair_product_coloring",
    "sum_product_coloring",
    "distance2_fall_3coloring",
    "find_proper_k_coloring",
    "partial_3coloring_distance3",
    "repair_distance2_fall",
    "tree_idd_witness",
    "tree_k_coloring",
]
