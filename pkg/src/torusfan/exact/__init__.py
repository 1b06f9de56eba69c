"""Exact rational, Gaussian-rational and integer lattice algebra."""

from .gaussian import GaussianRational, I
from .lattice import hnf, int_det, invariant_factors, is_primitive, primitive, saturation_split, snf
from .linalg import (
    Solution,
    kernel_basis,
    rank,
    real_projection_basis,
    rref,
    solve,
)

__all__ = [
    "GaussianRational", "I", "Solution", "hnf", "int_det", "invariant_factors",
    "is_primitive", "kernel_basis", "primitive", "rank", "real_projection_basis",
    "rref", "saturation_split", "snf", "solve",
]
