"""Numerical semigroups, their divisor complexes, and graded Betti numbers.

The package computes beta_{i,s} of a semigroup ring from the reduced
homology of squarefree divisor complexes, and machine-checks the shift
identity relating an Arf semigroup to its blowup, together with the
supporting structure results.
"""

from .arf import (
    MultiplicitySequence,
    QuotientSet,
    arf_closure,
    arf_violation,
    blowup,
    check_pomoc,
    enumerate_arf,
    is_arf,
    multiplicity_sequence,
    quotient,
    same_multiplicity_blowup,
)
from .betti import (
    DEFAULT_LIMITS,
    BettiTable,
    ScaleLimits,
    ScanForecast,
    forecast_scan,
    graded_betti,
    total_betti,
)
from .divisor_complex import SimplicialComplex, squarefree_divisor_complex
from .errors import (
    ArfBettiError,
    BettiScaleError,
    ClassificationGapError,
    EmptyGeneratorsError,
    InvalidEntryError,
    NonCofiniteError,
    NotArfError,
    NotMemberError,
    PreconditionFailedError,
)
from .homology import (
    RATIONALS,
    BoundaryMatrix,
    FieldSpec,
    boundary_matrix,
    rank,
    rank_array,
    reduced_homology_dims,
)
from .semigroup_core import (
    NumericalSemigroup,
    from_generators,
    natural_numbers,
    parse_generators,
)
from .verify import (
    PropositionResult,
    SweepReport,
    TheoremReport,
    UnmatchedFaceReport,
    check_propositions,
    check_theorem,
    classify_unmatched_faces,
    propositions_ok,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "ArfBettiError",
    "BettiScaleError",
    "BettiTable",
    "BoundaryMatrix",
    "ClassificationGapError",
    "DEFAULT_LIMITS",
    "EmptyGeneratorsError",
    "FieldSpec",
    "InvalidEntryError",
    "MultiplicitySequence",
    "NonCofiniteError",
    "NotArfError",
    "NotMemberError",
    "NumericalSemigroup",
    "PreconditionFailedError",
    "PropositionResult",
    "QuotientSet",
    "RATIONALS",
    "ScaleLimits",
    "ScanForecast",
    "SimplicialComplex",
    "SweepReport",
    "TheoremReport",
    "UnmatchedFaceReport",
    "arf_closure",
    "arf_violation",
    "blowup",
    "boundary_matrix",
    "check_pomoc",
    "check_propositions",
    "check_theorem",
    "classify_unmatched_faces",
    "enumerate_arf",
    "forecast_scan",
    "from_generators",
    "graded_betti",
    "is_arf",
    "multiplicity_sequence",
    "natural_numbers",
    "parse_generators",
    "propositions_ok",
    "quotient",
    "rank",
    "rank_array",
    "reduced_homology_dims",
    "same_multiplicity_blowup",
    "squarefree_divisor_complex",
    "sweep",
    "total_betti",
]
