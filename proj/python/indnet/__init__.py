"""Inter-industry proximity networks from output tables.

Thin wrapper over the compiled extension: table ingestion, per-mille
normalization, similarity weights, distance matrices, spanning trees,
topology metrics (threshold, replaced links, redundancy, residuality),
community detection and the synthetic series generator.
"""

from ._indnet import (
    ConnectivityError,
    ConsistencyError,
    DegenerateInputError,
    DistanceMatrix,
    DomainError,
    FormatError,
    NormalizedTable,
    OutputTable,
    Partition,
    SpanningTree,
    SynthParams,
    TreeEdge,
    WeightMatrix,
    apply_exclusions,
    detect_communities,
    distance_matrix,
    generate_series,
    generate_table,
    minimum_spanning_tree,
    modularity,
    normalize_rows,
    parse_output_table,
    read_output_table_file,
    redundancy,
    replaced_links,
    residuality,
    run_analyze,
    serialize_output_table,
    similarity_weights,
    stable_core,
)

__all__ = [
    "ConnectivityError",
    "ConsistencyError",
    "DegenerateInputError",
    "DistanceMatrix",
    "DomainError",
    "FormatError",
    "NormalizedTable",
    "OutputTable",
    "Partition",
    "SpanningTree",
    "SynthParams",
    "TreeEdge",
    "WeightMatrix",
    "apply_exclusions",
    "detect_communities",
    "distance_matrix",
    "generate_series",
    "generate_table",
    "minimum_spanning_tree",
    "modularity",
    "normalize_rows",
    "parse_output_table",
    "read_output_table_file",
    "redundancy",
    "replaced_links",
    "residuality",
    "run_analyze",
    "serialize_output_table",
    "similarity_weights",
    "stable_core",
]
