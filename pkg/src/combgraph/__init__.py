"""Comb graphs: split graphs with no induced chair or co-chair.

Recognition produces either a layered decomposition certified by the
axiom validator or an induced forbidden-subgraph witness; generators,
exhaustive enumeration and census tools support verification at scale.
"""

from .comb import CombDecomposition, p4_mirror_holds, threshold_to_comb, validate_comb
from .core import (
    Graph,
    GraphError,
    build_graph,
    complement,
    induced_subgraph,
    is_clique,
    is_stable,
    neighborhood,
)
from .corpus import (
    CensusRow,
    CombParams,
    brute_force_comb_label,
    canonical_code,
    census,
    census_csv,
    enumerate_graphs,
    generate_comb,
    random_comb_params,
    random_graph,
)
from .formats import (
    FormatError,
    parse_edgelist,
    parse_graph6,
    write_edgelist,
    write_graph6,
)
from .patterns import (
    PatternKind,
    Witness,
    find_any_forbidden,
    find_induced,
    iter_induced,
    verify_witness,
)
from .recognize import RecognitionResult, comb_decompose, is_comb
from .splitgraph import (
    DecompositionError,
    PartitionError,
    SplitPartition,
    ThresholdDecomposition,
    Violation,
    is_complete_split,
    is_perfect_split,
    is_threshold,
    split_partition,
    threshold_decompose,
    validate_threshold,
)

__version__ = "0.1.0"

__all__ = [
    "CensusRow",
    "CombDecomposition",
    "CombParams",
    "DecompositionError",
    "FormatError",
    "Graph",
    "GraphError",
    "PartitionError",
    "PatternKind",
    "RecognitionResult",
    "SplitPartition",
    "ThresholdDecomposition",
    "Violation",
    "Witness",
    "brute_force_comb_label",
    "build_graph",
    "canonical_code",
    "census",
    "census_csv",
    "comb_decompose",
    "complement",
    "enumerate_graphs",
    "find_any_forbidden",
    "find_induced",
    "generate_comb",
    "induced_subgraph",
    "is_clique",
    "is_comb",
    "is_complete_split",
    "is_perfect_split",
    "is_stable",
    "is_threshold",
    "iter_induced",
    "neighborhood",
    "p4_mirror_holds",
    "parse_edgelist",
    "parse_graph6",
    "random_comb_params",
    "random_graph",
    "split_partition",
    "threshold_decompose",
    "threshold_to_comb",
    "validate_comb",
    "validate_threshold",
    "verify_witness",
    "write_edgelist",
    "write_graph6",
]
