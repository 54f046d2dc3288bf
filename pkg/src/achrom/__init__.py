"""Complete colourings of rook graphs: certificates, constructions, bounds,
diagnostics and exact search."""

from .bounds import (
    BoundResult,
    bound,
    corollary_band,
    cyclic_matrix,
    exact_value,
    generic_upper,
    k6_upper,
)
from .errors import (
    AchromError,
    ConstructionRangeError,
    MatrixFormatError,
    MatrixStructureError,
)
from .families import (
    ConstructionSpec,
    base_matrix,
    block_9_15,
    block_16_40,
    construct_best,
    even_16plus,
    hconcat,
    n_r,
)
from .matrix import (
    Colour,
    ColourMatrix,
    Palette,
    VerificationReport,
    check_proper,
    good_pairs,
    permute,
    read_matrix,
    verify_membership,
    write_matrix,
)
from .rookgraph import GridColouring, rook_edges, to_graph_colouring, validate_on_graph
from .search import (
    AchromaticResult,
    SearchOutcome,
    SearchProblem,
    SearchStatus,
    achromatic_exact,
    exists_matrix,
    naive_oracle,
)
from .stats import (
    AuxGraph,
    CoverageMap,
    ExcessProfile,
    FrequencyProfile,
    LineStats,
    SetType,
    XConfiguration,
    aux_graph,
    coverage,
    excess_profile,
    frequency_profile,
    lemma_plus_m_suite,
    line_stats,
    set_type,
    stats_report,
    x_configurations,
)

__version__ = "0.1.0"

__all__ = [
    "AchromError",
    "AchromaticResult",
    "AuxGraph",
    "BoundResult",
    "Colour",
    "ColourMatrix",
    "ConstructionRangeError",
    "ConstructionSpec",
    "CoverageMap",
    "ExcessProfile",
    "FrequencyProfile",
    "GridColouring",
    "LineStats",
    "MatrixFormatError",
    "MatrixStructureError",
    "Palette",
    "SearchOutcome",
    "SearchProblem",
    "SearchStatus",
    "SetType",
    "VerificationReport",
    "XConfiguration",
    "achromatic_exact",
    "aux_graph",
    "base_matrix",
    "block_16_40",
    "block_9_15",
    "bound",
    "check_proper",
    "construct_best",
    "corollary_band",
    "coverage",
    "cyclic_matrix",
    "even_16plus",
    "exact_value",
    "excess_profile",
    "exists_matrix",
    "frequency_profile",
    "generic_upper",
    "good_pairs",
    "hconcat",
    "k6_upper",
    "lemma_plus_m_suite",
    "line_stats",
    "n_r",
    "naive_oracle",
    "permute",
    "read_matrix",
    "rook_edges",
    "set_type",
    "stats_report",
    "to_graph_colouring",
    "validate_on_graph",
    "verify_membership",
    "write_matrix",
    "x_configurations",
]
