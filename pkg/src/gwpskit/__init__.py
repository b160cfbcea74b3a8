"""gwpskit: exact combinatorial invariants of Gorenstein weighted projective
3-spaces - classification, anticanonical Betti numbers, and extendability
counts via the degree -1 tangent module of the affine cone."""

__version__ = "0.1.0"

from .exactla import FieldSpec, SparseMatrix, default_fields
from .lattice import count_points, degree_slice, h_vector, verify_projective_normality
from .resolution import beta2, check_no_quartic_syzygies, linear_syzygies
from .tangent import alpha_report, derivation_vectors, hom_dimension_minus1, t1_section_minus1
from .toric import beta1, check_degree3_generation, quadric_generators
from .wps import (
    WeightedSpace,
    WeightValidationError,
    enumerate_gorenstein,
    invariants,
    restriction_invertible,
    veronese_presentation,
    weighted_space,
)

__all__ = [
    "FieldSpec",
    "SparseMatrix",
    "WeightedSpace",
    "WeightValidationError",
    "alpha_report",
    "beta1",
    "beta2",
    "check_degree3_generation",
    "check_no_quartic_syzygies",
    "count_points",
    "default_fields",
    "degree_slice",
    "derivation_vectors",
    "enumerate_gorenstein",
    "h_vector",
    "hom_dimension_minus1",
    "invariants",
    "linear_syzygies",
    "quadric_generators",
    "restriction_invertible",
    "t1_section_minus1",
    "veronese_presentation",
    "verify_projective_normality",
    "weighted_space",
]
