"""Exact structure-constant engine for quasi-Hopf algebras, their quantum
doubles and biproduct decompositions."""

from .field import QQ, GF, Field, FieldError
from .tensor import (
    LinearMap,
    NotInvertible,
    TensorAlgebra,
    TensorElement,
    TensorError,
    apply_on_leg,
    pair_dual,
)
from .report import Check, ValidationReport, VerificationFailed
from .quasihopf import (
    GaugeTransformation,
    NotBijective,
    NotNormalizable,
    QuasiHopfAlgebra,
    antipode_inverse,
    normalize_alpha_beta,
    twist,
    validate_quasi_bialgebra,
    validate_quasi_hopf,
)
from .derived import DerivedElements, derive_all, verify_derived
from .quasitriangular import QTCertificate, RMatrix, derive_u, validate_r_matrix
from .dual import DualStructure, build_dual, verify_dual
from .double import DoubleAlgebra, DoubleBasis, build_double, verify_generating_relations
from .yd import YDModule, braiding, braiding_inverse, module_from_qt, validate_yd, yd_tensor
from .biproduct import (
    BraidedHopfAlgebraYD,
    ProjectionData,
    RankMismatch,
    bi_extract,
    braided_dual,
    build_biproduct,
    chi_iso,
    projection_pi,
    validate_braided_hopf,
    verify_chi,
    verify_projection,
)
from .instances import (
    BadCharacteristic,
    CocycleInvalid,
    GroupInvalid,
    GroupPresentation,
    ThreeCocycle,
    function_algebra,
    group_algebra,
    sweedler_hopf,
)
from .document import AlgebraDocument, ParseError, load, save

__all__ = [
    "QQ", "GF", "Field", "FieldError",
    "LinearMap", "NotInvertible", "TensorAlgebra", "TensorElement",
    "TensorError", "apply_on_leg", "pair_dual",
    "Check", "ValidationReport", "VerificationFailed",
    "GaugeTransformation", "NotBijective", "NotNormalizable",
    "QuasiHopfAlgebra", "antipode_inverse", "normalize_alpha_beta",
    "twist", "validate_quasi_bialgebra", "validate_quasi_hopf",
    "DerivedElements", "derive_all", "verify_derived",
    "QTCertificate", "RMatrix", "derive_u", "validate_r_matrix",
    "DualStructure", "build_dual", "verify_dual",
    "DoubleAlgebra", "DoubleBasis", "build_double", "verify_generating_relations",
    "YDModule", "braiding", "braiding_inverse", "module_from_qt",
    "validate_yd", "yd_tensor",
    "BraidedHopfAlgebraYD", "ProjectionData", "RankMismatch",
    "bi_extract", "braided_dual", "build_biproduct", "chi_iso",
    "projection_pi", "validate_braided_hopf", "verify_chi", "verify_projection",
    "BadCharacteristic", "CocycleInvalid", "GroupInvalid",
    "GroupPresentation", "ThreeCocycle",
    "function_algebra", "group_algebra", "sweedler_hopf",
    "AlgebraDocument", "ParseError", "load", "save",
]
