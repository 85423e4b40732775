"""Exact Fourier uniformity toolkit over F_2^n and F_3^n."""

from .errors import BudgetExceededError, InputError
from .exact_arith import (
    Eisenstein,
    UniformityParams,
    format_rational,
    magnitude_sq,
    omega_pow,
    parse_rational,
)
from .gf_core import (
    Coset,
    GFVector,
    PointSet,
    Subspace,
    canonical_rep,
    coset_reps,
    enumerate_subspaces,
    extend_span,
    gaussian_binomial,
    lift_from_quotient,
    perp,
    quotient_index,
    rref_basis,
)
from .increments import (
    IncrementStep,
    IncrementTrace,
    PipelineParams,
    RegularityResult,
    coordinate_subspace,
    density_increment,
    partition_energy,
    regularity_decompose,
)
from .pipeline import (
    F3Report,
    F3SubspaceRecord,
    PipelineAttempt,
    PipelineReport,
    exhaustive_best_subspace,
    find_uniform_subspace,
    leading_one_set,
    scan_leading_one_set,
    subspace_scan_count,
)
from .ramsey import (
    AlmostColouring,
    UnionStructure,
    bucket_colouring,
    check_union_structure,
    find_union_structure,
    parse_colouring,
    serialize_colouring,
)
from .randsets import random_point_set, splitmix64
from .spectra import (
    Spectrum,
    UniformityReport,
    dft3,
    lift_class,
    restricted_spectrum,
    uniformity_sup,
    wht2,
)

__version__ = "0.1.0"

__all__ = [
    "AlmostColouring",
    "BudgetExceededError",
    "Coset",
    "Eisenstein",
    "F3Report",
    "F3SubspaceRecord",
    "GFVector",
    "IncrementStep",
    "IncrementTrace",
    "InputError",
    "PipelineAttempt",
    "PipelineParams",
    "PipelineReport",
    "PointSet",
    "RegularityResult",
    "Spectrum",
    "Subspace",
    "UniformityParams",
    "UniformityReport",
    "UnionStructure",
    "bucket_colouring",
    "canonical_rep",
    "check_union_structure",
    "coordinate_subspace",
    "coset_reps",
    "density_increment",
    "dft3",
    "enumerate_subspaces",
    "exhaustive_best_subspace",
    "extend_span",
    "find_uniform_subspace",
    "find_union_structure",
    "format_rational",
    "gaussian_binomial",
    "leading_one_set",
    "lift_class",
    "lift_from_quotient",
    "magnitude_sq",
    "omega_pow",
    "parse_colouring",
    "parse_rational",
    "partition_energy",
    "perp",
    "quotient_index",
    "random_point_set",
    "regularity_decompose",
    "restricted_spectrum",
    "rref_basis",
    "scan_leading_one_set",
    "serialize_colouring",
    "splitmix64",
    "subspace_scan_count",
    "uniformity_sup",
    "wht2",
]
