"""Clustered graph coloring over layered tree decompositions.

The library builds colorings in which every monochromatic component is
small, with the component-size bound depending only on the layered width
of a tree decomposition and the maximum degree. Alongside the coloring
pipeline it provides the supporting machinery: structural validators,
neighborhood growth bounds, decomposition enlargement, fences and fans
inside tree decompositions, a list-coloring framework with apex
splitting, exhaustive verification oracles, and PACE-format files.
"""

from .errors import (
    BudgetExceeded,
    ClusteringBoundError,
    GroupBudgetError,
    InternalInvariantError,
    InvalidDecomposition,
    InvalidLayering,
    PaceParseError,
)
from .fences import (
    Fan,
    Fence,
    TreePart,
    central_node,
    epsilon_fence,
    f_parts,
    fence,
    find_fan,
    is_parade,
    n_fan_bound,
)
from .generators import (
    add_apex,
    gen_grid,
    gen_kst,
    gen_kst_instance,
    gen_path,
    gen_rect_grid,
)
from .graph import (
    AxiomCheck,
    Graph,
    LayeredTreeDecomposition,
    Layering,
    TreeDecomposition,
    ValidationReport,
    bfs_layering,
    layered_width,
    validate_layering,
    validate_tree_decomposition,
)
from .lists import (
    ApexSplitResult,
    Segment,
    StandardPair,
    apex_split,
    compatible_lists,
    forbidden_color,
    gates,
    is_compatible,
    progress,
    segment_local_clustering_check,
    segments,
    validate_standard_pair,
)
from .neighborhoods import (
    falling_binomial,
    growth_bound,
    growth_bound_density,
    growth_bound_layered,
    has_kst_subgraph,
    n_at_least,
    n_below,
)
from .threecolor import (
    LayerClassSplit,
    ThreeColorConstants,
    ThreeColorResult,
    compute_constants,
    split_layer_classes,
    three_color,
)
from .twocolor import (
    EdgeGroup,
    GroupBudget,
    cluster_bound,
    enlarge_decomposition,
    two_color_bounded_treewidth,
)
from .verify import (
    ClusterReport,
    check_list_coloring,
    longest_monochromatic_path,
    monochromatic_components,
    trigrid_path_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "ApexSplitResult",
    "AxiomCheck",
    "BudgetExceeded",
    "ClusterReport",
    "ClusteringBoundError",
    "EdgeGroup",
    "Fan",
    "Fence",
    "Graph",
    "GroupBudget",
    "GroupBudgetError",
    "InternalInvariantError",
    "InvalidDecomposition",
    "InvalidLayering",
    "LayerClassSplit",
    "LayeredTreeDecomposition",
    "Layering",
    "PaceParseError",
    "Segment",
    "StandardPair",
    "ThreeColorConstants",
    "ThreeColorResult",
    "TreeDecomposition",
    "TreePart",
    "ValidationReport",
    "add_apex",
    "apex_split",
    "bfs_layering",
    "central_node",
    "check_list_coloring",
    "cluster_bound",
    "compatible_lists",
    "compute_constants",
    "enlarge_decomposition",
    "epsilon_fence",
    "f_parts",
    "falling_binomial",
    "fence",
    "find_fan",
    "forbidden_color",
    "gates",
    "gen_grid",
    "gen_kst",
    "gen_kst_instance",
    "gen_path",
    "gen_rect_grid",
    "growth_bound",
    "growth_bound_density",
    "growth_bound_layered",
    "has_kst_subgraph",
    "is_compatible",
    "is_parade",
    "layered_width",
    "longest_monochromatic_path",
    "monochromatic_components",
    "n_at_least",
    "n_below",
    "n_fan_bound",
    "progress",
    "segment_local_clustering_check",
    "segments",
    "split_layer_classes",
    "three_color",
    "trigrid_path_oracle",
    "two_color_bounded_treewidth",
    "validate_layering",
    "validate_standard_pair",
    "validate_tree_decomposition",
]
