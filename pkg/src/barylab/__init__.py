"""barylab: exact decision procedures and witness constructions for
barycenters of fully-supported probability measures on convex polytopes."""

from .characterization import (
    CharacterizationReport,
    PreconditionError,
    ProlongationResult,
    characterize,
    conditional_barycenter,
    in_relint,
    is_attainable_barycenter,
    is_prolongable,
    max_prolongation,
    prolonged_point,
    report_to_json,
)
from .geometry import (
    AffineSubspace,
    GeometryInputError,
    Polytope,
    affine_hull,
    contains,
    covering_radius,
    dense_sequence,
    polytope_from_json,
    polytope_to_json,
)
from .lp import (
    LinearProgram,
    LpInputError,
    LpOutcome,
    LpStatus,
    active_kernel,
    solve_lp,
)
from .witness import (
    DiscreteMeasure,
    MeasureInputError,
    NoWitnessError,
    barycenter,
    construct_witness,
    measure_from_json,
    measure_to_json,
    merge_and_normalize,
    sample_atoms,
)

__version__ = "0.1.0"

__all__ = [
    "AffineSubspace",
    "CharacterizationReport",
    "DiscreteMeasure",
    "GeometryInputError",
    "LinearProgram",
    "LpInputError",
    "LpOutcome",
    "LpStatus",
    "MeasureInputError",
    "NoWitnessError",
    "Polytope",
    "PreconditionError",
    "ProlongationResult",
    "active_kernel",
    "affine_hull",
    "barycenter",
    "characterize",
    "conditional_barycenter",
    "construct_witness",
    "contains",
    "covering_radius",
    "dense_sequence",
    "in_relint",
    "is_attainable_barycenter",
    "is_prolongable",
    "max_prolongation",
    "measure_from_json",
    "measure_to_json",
    "merge_and_normalize",
    "polytope_from_json",
    "polytope_to_json",
    "prolonged_point",
    "report_to_json",
    "sample_atoms",
    "solve_lp",
]
