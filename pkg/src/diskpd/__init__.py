"""Positive definite collections of disks.

Decide whether the Hermitian matrix Q attached to a collection of planar
disks is positive definite (floating with certificates, or in exact
rational arithmetic), compute the maximal common radius rho_n of the
regular n-gon configuration exactly from integer polynomials, verify the
two-sided bounds and the Bessel-zero asymptotic of n*rho_n, and apply the
closed-form criterion for three disks on the equilateral triangle.
"""

from .core import (
    DiskCollection,
    GaussianRational,
    HermitianMatrix,
    PositivityReport,
    Verdict,
    build_q_matrix,
    is_admissible,
    is_positive_definite,
    max_uniform_scale,
    overlap_measure,
)
from .orthopoly import (
    RationalPolynomial,
    RootIsolation,
    hypergeometric_polynomial,
    isolate_real_roots,
    jacobi_polynomial,
    squarefree_decomposition,
    v_identity_suite,
    v_polynomial,
    zero_structure_check,
)
from .radius import (
    AsymptoticReport,
    RadiusResult,
    asymptotic_report,
    bessel_j1,
    bessel_j1_first_zero,
    central_polynomial,
    maximal_radius,
    rho_bounds,
)
from .symmetric import (
    a_matrix,
    circulant_spectrum,
    det_factorization_check,
    positivity_by_t,
    regular_collection,
    t_polynomial,
)
from .triangle import triangle_minors, triangle_positive

__version__ = "0.1.0"

__all__ = [
    "DiskCollection",
    "GaussianRational",
    "HermitianMatrix",
    "PositivityReport",
    "Verdict",
    "build_q_matrix",
    "is_admissible",
    "is_positive_definite",
    "max_uniform_scale",
    "overlap_measure",
    "RationalPolynomial",
    "RootIsolation",
    "hypergeometric_polynomial",
    "isolate_real_roots",
    "jacobi_polynomial",
    "squarefree_decomposition",
    "v_identity_suite",
    "v_polynomial",
    "zero_structure_check",
    "AsymptoticReport",
    "RadiusResult",
    "asymptotic_report",
    "bessel_j1",
    "bessel_j1_first_zero",
    "central_polynomial",
    "maximal_radius",
    "rho_bounds",
    "a_matrix",
    "circulant_spectrum",
    "det_factorization_check",
    "positivity_by_t",
    "regular_collection",
    "t_polynomial",
    "triangle_minors",
    "triangle_positive",
]
