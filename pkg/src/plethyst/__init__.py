"""Exact plethysm of Schur functions.

Expands s_lambda[s_mu] in the monomial basis by counting semistandard
arrangements of semistandard tableaux, converts to the Schur basis through
inverse Kostka matrices or a signed Jacobi-Trudi sum, predicts the
reverse-lexicographically first Schur term in closed form, and cross-checks
everything against an independent power-sum pipeline.  All arithmetic is
exact.
"""

__version__ = "0.1.0"

from .errors import (
    BasisMismatchError,
    BoundExceededError,
    EmptyPartitionError,
    IntegralityError,
    PartitionParseError,
    PlethystError,
    ShapeMismatchError,
    SizeMismatchError,
    UnsupportedConversionError,
)
from .partitions import (
    Partition,
    as_partition,
    format_partition,
    parse_partition,
    partitions_of,
    revlex_cmp,
)
from .tableaux import (
    Tableau,
    enumerate_ssyt,
    enumerate_ssyt_with_weight,
    format_tableau,
    is_semistandard,
    kostka,
    shape_of,
    tableau_cmp,
    weight,
    word,
)
from .symfunc import (
    HOMOGENEOUS,
    MONOMIAL,
    POWERSUM,
    SCHUR,
    KostkaMatrix,
    SymFunc,
    add,
    coefficient,
    convert,
    hall_inner,
    kostka_matrix,
    scale,
)
from .plethysm import (
    CompositeTableau,
    ExpansionReport,
    bounded_composite_tableaux,
    composite_tableaux,
    count_composite_tableaux,
    first_term,
    jacobi_trudi_term,
    leading_tableaux,
    monomial_expansion,
    schur_coefficient_jacobi_trudi,
    schur_expansion,
    verify_first_term,
)
from .oracle import (
    centralizer_order,
    character,
    finite_variable_expansion,
    plethysm_via_powersums,
    powersum_to_monomial,
    schur_to_powersum,
    stretch_powersum,
)
from .sweep import SweepConfig, SweepResult, run_sweep, sweep_pairs

__all__ = [
    "BasisMismatchError",
    "BoundExceededError",
    "CompositeTableau",
    "EmptyPartitionError",
    "ExpansionReport",
    "HOMOGENEOUS",
    "IntegralityError",
    "KostkaMatrix",
    "MONOMIAL",
    "POWERSUM",
    "Partition",
    "PartitionParseError",
    "PlethystError",
    "SCHUR",
    "ShapeMismatchError",
    "SizeMismatchError",
    "SweepConfig",
    "SweepResult",
    "SymFunc",
    "Tableau",
    "UnsupportedConversionError",
    "add",
    "as_partition",
    "bounded_composite_tableaux",
    "centralizer_order",
    "character",
    "coefficient",
    "composite_tableaux",
    "convert",
    "count_composite_tableaux",
    "enumerate_ssyt",
    "enumerate_ssyt_with_weight",
    "finite_variable_expansion",
    "first_term",
    "format_partition",
    "format_tableau",
    "hall_inner",
    "is_semistandard",
    "jacobi_trudi_term",
    "kostka",
    "kostka_matrix",
    "leading_tableaux",
    "monomial_expansion",
    "parse_partition",
    "partitions_of",
    "plethysm_via_powersums",
    "powersum_to_monomial",
    "revlex_cmp",
    "run_sweep",
    "scale",
    "schur_coefficient_jacobi_trudi",
    "schur_expansion",
    "schur_to_powersum",
    "shape_of",
    "stretch_powersum",
    "sweep_pairs",
    "tableau_cmp",
    "verify_first_term",
    "weight",
    "word",
]
