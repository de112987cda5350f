"""Exact Weil-polynomial tests and Honda-Tate classification over finite fields.

The package decides, entirely in exact arithmetic, whether a palindromic
integer polynomial is a Weil polynomial, computes its Newton polygon and the
certified multiset of (degree, root valuation) pairs of its p-adic irreducible
factors, evaluates Brauer invariants and isogeny-class multiplicities, and
classifies characteristic polynomials of simple classes, including the
explicit coefficient-level criteria in dimension 5.
"""

from .intpoly import (
    IntPoly,
    IrreducibilityVerdict,
    ShapeError,
    factor_rational,
    functional_equation_holds,
    rational_irreducibility,
    real_weil_transform,
    sturm_count,
)
from .padic import (
    CertificationError,
    NewtonPolygon,
    QpFactorProfile,
    count_factors_of_degree,
    factor_mod_p,
    has_factor_of_degree,
    has_root_of_valuation,
    is_square_in_qp,
    newton_polygon,
    qp_factor_profile,
    vertex_lattice_check,
    vp,
)
from .weil import (
    SqrtQRootReport,
    WeilCandidate,
    coefficient_interval,
    expand,
    is_weil,
    is_weil_poly,
    real_sqrt_q_roots,
)
from .hondatate import (
    BrauerInvariant,
    ClassificationError,
    Dim5Result,
    IsogenyClassReport,
    allowed_multiplicities_prime_dim,
    classify,
    classify_dim5,
    dimension_of_simple,
    frobenius_invariants,
    lemma_real_dimension,
    multiplicity_e,
    quadratic_class_dimension,
    quadratic_power_criterion,
)
from .enumerate import (
    CapExceeded,
    ClassificationSummary,
    EnumerationJob,
    classify_all,
    elliptic_trace_oracle,
    enumerate_weil,
    partition_job,
    sample_candidates,
)

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "IrreducibilityVerdict",
    "ShapeError",
    "factor_rational",
    "functional_equation_holds",
    "rational_irreducibility",
    "real_weil_transform",
    "sturm_count",
    "CertificationError",
    "NewtonPolygon",
    "QpFactorProfile",
    "count_factors_of_degree",
    "factor_mod_p",
    "has_factor_of_degree",
    "has_root_of_valuation",
    "is_square_in_qp",
    "newton_polygon",
    "qp_factor_profile",
    "vertex_lattice_check",
    "vp",
    "SqrtQRootReport",
    "WeilCandidate",
    "coefficient_interval",
    "expand",
    "is_weil",
    "is_weil_poly",
    "real_sqrt_q_roots",
    "BrauerInvariant",
    "ClassificationError",
    "Dim5Result",
    "IsogenyClassReport",
    "allowed_multiplicities_prime_dim",
    "classify",
    "classify_dim5",
    "dimension_of_simple",
    "frobenius_invariants",
    "lemma_real_dimension",
    "multiplicity_e",
    "quadratic_class_dimension",
    "quadratic_power_criterion",
    "CapExceeded",
    "ClassificationSummary",
    "EnumerationJob",
    "classify_all",
    "elliptic_trace_oracle",
    "enumerate_weil",
    "partition_job",
    "sample_candidates",
    "__version__",
]
