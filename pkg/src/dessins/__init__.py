"""Counting two-vertex dessins d'enfants by faces, degree-2 faces and automorphism order."""
from .counting import (
    ClassCountReport,
    IntegralityError,
    ParityError,
    count_d1,
    count_d1_r,
    count_d2,
    count_d2_r,
    count_dual_d1_r,
    count_dual_d2_r,
    crosscheck_identities,
    genus,
    psi,
    sigma_j,
    upsilon,
)

__all__ = [
    "ClassCountReport",
    "IntegralityError",
    "ParityError",
    "count_d1",
    "count_d1_r",
    "count_d2",
    "count_d2_r",
    "count_dual_d1_r",
    "count_dual_d2_r",
    "crosscheck_identities",
    "genus",
    "psi",
    "sigma_j",
    "upsilon",
]

__version__ = "0.1.0"
