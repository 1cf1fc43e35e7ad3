"""Chessboard-patterned 3x3 bipartite states and their certification."""

from .chessboard import (
    INDEX_CONVENTION,
    CanonicalParams,
    DegenerateGaugeError,
    GaugeTransform,
    RawParams,
    StateMatrix,
    apply_gauge,
    build_rho,
    build_vectors,
    canonicalize,
    family_a,
    family_b,
    invariant_ratios,
    is_chessboard,
)
from .criteria import (
    CertificationReport,
    RangeSearchConfig,
    RangeStatus,
    Verdict,
    certify,
    degenerate_witness,
    ppt_min_eigenvalue,
    product_in_range_search,
    range_analytic,
    range_residual,
)
from .linalg import (
    HermitianEigenResult,
    hermitian_eigen,
    kron,
    operator_tensor,
    partial_transpose_first,
    projector_from_vectors,
    range_projector,
    tensor_product_vector,
)

__version__ = "0.1.0"

__all__ = [
    "INDEX_CONVENTION",
    "CanonicalParams",
    "CertificationReport",
    "DegenerateGaugeError",
    "GaugeTransform",
    "HermitianEigenResult",
    "RangeSearchConfig",
    "RangeStatus",
    "RawParams",
    "StateMatrix",
    "Verdict",
    "apply_gauge",
    "build_rho",
    "build_vectors",
    "canonicalize",
    "certify",
    "degenerate_witness",
    "family_a",
    "family_b",
    "hermitian_eigen",
    "invariant_ratios",
    "is_chessboard",
    "kron",
    "operator_tensor",
    "partial_transpose_first",
    "ppt_min_eigenvalue",
    "product_in_range_search",
    "projector_from_vectors",
    "range_analytic",
    "range_projector",
    "range_residual",
    "tensor_product_vector",
]
