"""Exact certification engine for the equivariant cohomology of Peterson
varieties: the fixed-point restriction model on one side, the Cartan-matrix
quadric presentation on the other, and checks that the two agree."""

__version__ = "0.1.0"

from .billey import (
    RootPolynomial,
    TPolynomial,
    billey_localization,
    restrict_to_S,
)
from .commalg import (
    HilbertSeries,
    Ideal,
    Poly,
    build_ideal_J,
    build_ideal_Jcheck,
    groebner_basis,
    hilbert_series_of_quotient,
    is_positive_definite,
    is_regular_sequence,
    zero_set_is_origin,
    zero_set_via_minors,
)
from .errors import IntegrityError, ResourceCapError
from .peterson import FixedPoint, PetersonClass, PetersonModel
from .report import CertificationReport, CheckRecord
from .roots import (
    CartanMatrix,
    LieType,
    cartan_matrix,
    parse_lie_type,
    simple_reflection_action,
    simple_root,
)
from .weyl import WeylElement, WeylGroup, word_from_str, word_to_str

__all__ = [
    "CartanMatrix",
    "CertificationReport",
    "CheckRecord",
    "FixedPoint",
    "HilbertSeries",
    "Ideal",
    "IntegrityError",
    "LieType",
    "PetersonClass",
    "PetersonModel",
    "Poly",
    "ResourceCapError",
    "RootPolynomial",
    "TPolynomial",
    "WeylElement",
    "WeylGroup",
    "billey_localization",
    "build_ideal_J",
    "build_ideal_Jcheck",
    "cartan_matrix",
    "groebner_basis",
    "hilbert_series_of_quotient",
    "is_positive_definite",
    "is_regular_sequence",
    "parse_lie_type",
    "restrict_to_S",
    "simple_reflection_action",
    "simple_root",
    "word_from_str",
    "word_to_str",
    "zero_set_is_origin",
    "zero_set_via_minors",
    "__version__",
]
