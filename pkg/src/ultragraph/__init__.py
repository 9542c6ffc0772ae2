"""Exact computation of pseudoultrametric structure on weighted graphs.

The toolkit decides whether an edge weighting extends to a
pseudoultrametric on the whole vertex set, computes the greatest and
(on complete multipartite graphs) least such extensions, compares them
under the entrywise order, and serializes everything exactly.
"""

from . import oracle
from .errors import (
    BadHubIndexError,
    BadSequenceError,
    DisconnectedError,
    DuplicateEdgeError,
    EnumerationLimitError,
    InexactDecimalError,
    MissingConstantError,
    NegativeWeightError,
    NoPathError,
    NotCompleteMultipartiteError,
    NotExtendableError,
    NotPseudometricError,
    NotPseudoultrametricError,
    NotUltrametricError,
    ParseError,
    SelfLoopError,
    UltragraphError,
    UnknownVertexError,
    VertexMismatchError,
)
from .extension import (
    ExtendabilityReport,
    PairSet,
    augment,
    greatest_extension,
    is_pseudoultrametrizable,
    is_unique_extension,
    least_extension,
    twice_max_pairs,
    well_chained_pairs,
)
from .graph import (
    Cycle,
    Partition,
    Path,
    Vertex,
    Weight,
    WeightedGraph,
    build_graph,
    connected_components,
    induced_subgraph,
    is_connected,
    strict_threshold_subgraph,
    to_weight,
)
from .io import (
    emit_edge_list,
    emit_matrix,
    emit_newick,
    format_weight,
    parse_edge_list,
    parse_matrix,
    parse_weight,
)
from .metrics import (
    INFINITE_EXPONENT,
    PASS,
    AxiomClass,
    Dendrogram,
    DistanceMatrix,
    PartialOrderResult,
    Verdict,
    betweenness_exponent,
    compare,
    dendrogram,
    distance_matrix,
    matrix_from_dendrogram,
    matrix_to_complete_graph,
    quotient,
    shortest_path_matrix,
    subdominant_matrix,
    validate,
)
from .structure import (
    find_multipartite_obstruction,
    is_forest,
    is_star,
    is_tree,
    multipartite_parts,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomClass",
    "BadHubIndexError",
    "BadSequenceError",
    "Cycle",
    "Dendrogram",
    "DisconnectedError",
    "DistanceMatrix",
    "DuplicateEdgeError",
    "EnumerationLimitError",
    "ExtendabilityReport",
    "INFINITE_EXPONENT",
    "InexactDecimalError",
    "MissingConstantError",
    "NegativeWeightError",
    "NoPathError",
    "NotCompleteMultipartiteError",
    "NotExtendableError",
    "NotPseudometricError",
    "NotPseudoultrametricError",
    "NotUltrametricError",
    "PASS",
    "PairSet",
    "ParseError",
    "PartialOrderResult",
    "Partition",
    "Path",
    "SelfLoopError",
    "UltragraphError",
    "UnknownVertexError",
    "Verdict",
    "Vertex",
    "VertexMismatchError",
    "Weight",
    "WeightedGraph",
    "augment",
    "betweenness_exponent",
    "build_graph",
    "compare",
    "connected_components",
    "dendrogram",
    "distance_matrix",
    "emit_edge_list",
    "emit_matrix",
    "emit_newick",
    "find_multipartite_obstruction",
    "format_weight",
    "greatest_extension",
    "induced_subgraph",
    "is_connected",
    "is_forest",
    "is_pseudoultrametrizable",
    "is_star",
    "is_tree",
    "is_unique_extension",
    "least_extension",
    "matrix_from_dendrogram",
    "matrix_to_complete_graph",
    "multipartite_parts",
    "oracle",
    "parse_edge_list",
    "parse_matrix",
    "parse_weight",
    "quotient",
    "shortest_path_matrix",
    "strict_threshold_subgraph",
    "subdominant_matrix",
    "to_weight",
    "twice_max_pairs",
    "validate",
    "well_chained_pairs",
]
