"""Contraction certificates and spectral-gap bounds on the complexified positive cone.

The library decides whether a complex matrix (or a sampled integral kernel)
uniformly contracts the cone of vectors with pairwise nonnegative Re(x_i
conj(x_j)), turns the contraction parameter into quantitative convergence
rates, and certifies the leading eigen-triple with a-posteriori error bounds.
"""

from .certify import (
    BlockWitness,
    ContractionCertificate,
    certify_matrix,
    contraction_witness_test,
    product_gap_bound,
    submatrix_T,
)
from .cone import (
    ConeDecomposition,
    DistanceResult,
    alpha,
    aperture,
    beta,
    canonical_decompose,
    distance,
    hilbert_distance,
    member_closed,
    member_open,
    preorder_geq,
    preorder_sample_check,
    random_member,
)
from .core2x2 import (
    DEFAULT_TOL,
    INFINITY,
    Complex2x2,
    DeltaQuadruple,
    DiskOrHalfPlane,
    Phi,
    RiemannPoint,
    cross_ratio,
    delta1,
    deltas,
    diameter_bound,
    eta1,
    in_gamma_closed,
    in_gamma_open,
    mobius_apply,
    mobius_disk,
    phi,
    rank_of,
    refined_rate,
    theta2,
)
from .fileio import (
    ParseError,
    canonical_json,
    parse_kernel,
    parse_matrix,
    parse_vectors,
    serialize_kernel,
    serialize_matrix,
    serialize_vectors,
)
from .kernel import KernelGrid, kernel_certify, kernel_theta, nystrom_matrix
from .spectral import EigenTriple, deflated_radius, dense_spectrum_oracle, power_eigen
from .variational import (
    VariationalBounds,
    basis_lower_bound,
    bounds_at,
    ones_lower_bound,
    refine_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "DEFAULT_TOL",
    "Complex2x2",
    "DeltaQuadruple",
    "RiemannPoint",
    "INFINITY",
    "DiskOrHalfPlane",
    "in_gamma_open",
    "in_gamma_closed",
    "theta2",
    "deltas",
    "rank_of",
    "phi",
    "Phi",
    "mobius_apply",
    "mobius_disk",
    "cross_ratio",
    "delta1",
    "eta1",
    "refined_rate",
    "diameter_bound",
    "member_closed",
    "member_open",
    "aperture",
    "ConeDecomposition",
    "canonical_decompose",
    "alpha",
    "beta",
    "DistanceResult",
    "distance",
    "preorder_geq",
    "preorder_sample_check",
    "hilbert_distance",
    "random_member",
    "BlockWitness",
    "ContractionCertificate",
    "submatrix_T",
    "certify_matrix",
    "product_gap_bound",
    "contraction_witness_test",
    "EigenTriple",
    "power_eigen",
    "deflated_radius",
    "dense_spectrum_oracle",
    "VariationalBounds",
    "bounds_at",
    "basis_lower_bound",
    "ones_lower_bound",
    "refine_bounds",
    "KernelGrid",
    "kernel_theta",
    "nystrom_matrix",
    "kernel_certify",
    "ParseError",
    "parse_matrix",
    "parse_vectors",
    "parse_kernel",
    "serialize_matrix",
    "serialize_vectors",
    "serialize_kernel",
    "canonical_json",
]
