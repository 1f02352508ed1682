"""Exact spanning-tree counting and enumeration for Jahangir graphs."""

from .asymptotics import (
    ConjectureReport,
    DeltaEstimate,
    NDirectionRatios,
    RatioSeries,
    conjecture_report,
    decimal_round_half_even,
    decimal_truncate,
    delta_estimate,
    n_direction_ratios,
    ratio,
    ratio_series,
    sigma_table,
)
from .combinatorics import (
    GapSignature,
    SpokeCombination,
    TreeCountBreakdown,
    class_census,
    class_contribution,
    gap_transform,
    polynomial_coefficients,
    sigma,
    sigma_k,
)
from .cycles import CensusReport, CycleRecord, census_j2m, find_simple_cycles, verify_census
from .enumeration import (
    DEFAULT_TREE_CAP,
    SpanningTree,
    enumerate_all,
    enumerate_jahangir,
    verify_spanning_tree,
)
from .errors import (
    EngineDisagreementError,
    EnumerationCapError,
    GraphValidationError,
    ParameterDomainError,
    SizeGuardError,
)
from .graph_core import (
    IntegerMatrix,
    JahangirParams,
    LabeledGraph,
    adjacency_matrix,
    build_jahangir,
    degree_matrix,
    is_connected,
    laplacian_matrix,
    oriented_incidence_matrix,
    to_dot,
)
from .matrix_tree import count_spanning_trees_det, eigenvalue_product_estimate

__version__ = "0.1.0"

__all__ = [
    "CensusReport",
    "ConjectureReport",
    "CycleRecord",
    "DEFAULT_TREE_CAP",
    "DeltaEstimate",
    "EngineDisagreementError",
    "EnumerationCapError",
    "GapSignature",
    "GraphValidationError",
    "IntegerMatrix",
    "JahangirParams",
    "LabeledGraph",
    "NDirectionRatios",
    "ParameterDomainError",
    "RatioSeries",
    "SizeGuardError",
    "SpanningTree",
    "SpokeCombination",
    "TreeCountBreakdown",
    "adjacency_matrix",
    "build_jahangir",
    "census_j2m",
    "class_census",
    "class_contribution",
    "conjecture_report",
    "count_spanning_trees_det",
    "decimal_round_half_even",
    "decimal_truncate",
    "degree_matrix",
    "delta_estimate",
    "eigenvalue_product_estimate",
    "enumerate_all",
    "enumerate_jahangir",
    "find_simple_cycles",
    "gap_transform",
    "is_connected",
    "laplacian_matrix",
    "n_direction_ratios",
    "oriented_incidence_matrix",
    "polynomial_coefficients",
    "ratio",
    "ratio_series",
    "sigma",
    "sigma_k",
    "sigma_table",
    "to_dot",
    "verify_census",
    "verify_spanning_tree",
]
