"""Exact-arithmetic transfer maps for product-of-blocks unitary group data.

The package models the finite, explicit layer of the transfer from a product
of general linear blocks to a single block of the same total size: exact
monomial scalars and Laurent polynomials, torus characters and weights, the
refinement / weight / eigenvalue-system transfer maps with their
normalisations, Steinberg-segment accessibility combinatorics, and a
classical-point model of the induced morphism with its characteristic-
polynomial divisibility criterion.  A JSON batch interface lives in
``eigentransfer.cli``.
"""

from .errors import (
    BlockMismatch,
    EmptyPacket,
    InvalidSigma,
    MissingSymbol,
    NonIntegralShift,
    NonSquareAssignment,
    NotRelevant,
    NotSymmetric,
    SchemaError,
    ShapeMismatch,
    SizeMismatch,
    TransferError,
    UnsupportedLinked,
)
from .laurent import LaurentPoly, elementary_symmetric
from .monomial import (
    Monomial,
    ONE,
    RESIDUE_SYMBOL,
    SymbolValue,
    UNIFORMIZER_SYMBOL,
    symbol,
    valid_symbol,
)
from .points import (
    AtkinLehnerFactor,
    ClassicalPoint,
    DiagramReport,
    MockFormSpace,
    SphericalFactor,
    build_transferred_space,
    charpoly,
    constant_C,
    diagram_check,
    divisibility_check,
    point_eigenvalue,
    transfer_point,
)
from .refinements import (
    LocalRepDescriptor,
    Segment,
    accessible_transfer_check,
    count_accessible,
    enumerate_refinements,
    is_accessible,
    normalize_point,
    refinement_count_inequality,
    segments_linked,
    transferred_descriptor,
)
from .tori import (
    AlgebraicWeight,
    CocharVector,
    GroupShape,
    UnramifiedCharacter,
    modulus_half,
    weight_as_character,
)
from .transfer import (
    ArchimedeanTransfer,
    CheckResult,
    DEFAULT_TWIST_SYMBOL,
    TransferConfig,
    TransferReport,
    archimedean_sigma,
    archimedean_transfer,
    atkin_lehner_pullback,
    block_order_preserving_permutations,
    dominant_generators,
    invert_permutation,
    iota_sigma_pullback,
    refinement_pullback,
    refinement_pullback_normalized,
    satake_param_transfer,
    satake_transfer,
    verify_transfer_compatibility,
    weight_character_pullback,
    weight_map_check,
    weight_pullback,
    weight_shift,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicWeight",
    "ArchimedeanTransfer",
    "AtkinLehnerFactor",
    "BlockMismatch",
    "CheckResult",
    "ClassicalPoint",
    "CocharVector",
    "DEFAULT_TWIST_SYMBOL",
    "DiagramReport",
    "EmptyPacket",
    "GroupShape",
    "InvalidSigma",
    "LaurentPoly",
    "LocalRepDescriptor",
    "MissingSymbol",
    "MockFormSpace",
    "Monomial",
    "NonIntegralShift",
    "NonSquareAssignment",
    "NotRelevant",
    "NotSymmetric",
    "ONE",
    "RESIDUE_SYMBOL",
    "SchemaError",
    "Segment",
    "ShapeMismatch",
    "SizeMismatch",
    "SphericalFactor",
    "SymbolValue",
    "TransferConfig",
    "TransferError",
    "TransferReport",
    "UNIFORMIZER_SYMBOL",
    "UnramifiedCharacter",
    "UnsupportedLinked",
    "accessible_transfer_check",
    "archimedean_sigma",
    "archimedean_transfer",
    "atkin_lehner_pullback",
    "block_order_preserving_permutations",
    "build_transferred_space",
    "charpoly",
    "constant_C",
    "count_accessible",
    "diagram_check",
    "divisibility_check",
    "dominant_generators",
    "elementary_symmetric",
    "enumerate_refinements",
    "invert_permutation",
    "iota_sigma_pullback",
    "is_accessible",
    "modulus_half",
    "normalize_point",
    "point_eigenvalue",
    "refinement_count_inequality",
    "refinement_pullback",
    "refinement_pullback_normalized",
    "satake_param_transfer",
    "satake_transfer",
    "segments_linked",
    "symbol",
    "transfer_point",
    "transferred_descriptor",
    "valid_symbol",
    "verify_transfer_compatibility",
    "weight_as_character",
    "weight_character_pullback",
    "weight_map_check",
    "weight_pullback",
    "weight_shift",
]
