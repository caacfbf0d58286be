"""Residual matching spectra, k-edge-colorable subgraphs, and SAT-to-graph
hardness artifacts."""

from .colorable import (
    ColorableResult,
    nu2_bipartite,
    nu_k_bruteforce,
    upper_bound_L,
)
from .graph import (
    Bipartition,
    DuplicateEdgeWarning,
    Graph,
    GraphFormatError,
    bipartition,
    build_graph,
    degree_profile,
    delete_edges,
    emit_graph_file,
    is_connected,
    is_valid_bipartition,
    normalize_edge,
    parse_graph_file,
)
from .matching import (
    CapExceededError,
    Matching,
    MatchingFlags,
    matching_from_pairs,
    max_matching,
    max_matching_bipartite,
    nu,
    nu_bruteforce,
    validate_matching,
)
from .reduction import (
    Assignment,
    Certificate,
    CnfInstance,
    DimacsError,
    ReductionArtifact,
    StructuralDecodeError,
    additive_threshold,
    all_assignments,
    build_artifact,
    calibration,
    decode_matching,
    encode_assignment,
    expected_residual,
    parse_dimacs,
    sat_count,
    verify_artifact,
)
from .spectrum import (
    ApproxTrialReport,
    BoundsReport,
    EnumerationResult,
    Problem1Result,
    SpectrumReport,
    ToleranceFunction,
    TruncatedSpectrumError,
    approx_trial,
    check_bounds,
    decide_problem1,
    enumerate_maximum_matchings,
    parse_tolerance,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxTrialReport",
    "Assignment",
    "Bipartition",
    "BoundsReport",
    "CapExceededError",
    "Certificate",
    "CnfInstance",
    "ColorableResult",
    "DimacsError",
    "DuplicateEdgeWarning",
    "EnumerationResult",
    "Graph",
    "GraphFormatError",
    "Matching",
    "MatchingFlags",
    "Problem1Result",
    "ReductionArtifact",
    "SpectrumReport",
    "StructuralDecodeError",
    "ToleranceFunction",
    "TruncatedSpectrumError",
    "additive_threshold",
    "all_assignments",
    "approx_trial",
    "bipartition",
    "build_artifact",
    "build_graph",
    "calibration",
    "check_bounds",
    "decide_problem1",
    "decode_matching",
    "degree_profile",
    "delete_edges",
    "emit_graph_file",
    "encode_assignment",
    "enumerate_maximum_matchings",
    "expected_residual",
    "is_connected",
    "is_valid_bipartition",
    "matching_from_pairs",
    "max_matching",
    "max_matching_bipartite",
    "normalize_edge",
    "nu",
    "nu2_bipartite",
    "nu_bruteforce",
    "nu_k_bruteforce",
    "parse_dimacs",
    "parse_graph_file",
    "parse_tolerance",
    "sat_count",
    "spectrum",
    "upper_bound_L",
    "validate_matching",
    "verify_artifact",
]
