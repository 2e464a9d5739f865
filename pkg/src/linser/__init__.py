"""Exact linear-series computations on plane curves.

The library tracks basepoints of linear series through iterated blowups,
builds series with prescribed basepoints from the kernel of a derivative
condition matrix, and evaluates the lattice invariants of the resulting
rational surfaces.  All arithmetic is exact, over towers of number
fields that grow as roots are adjoined.
"""

from .baselocus import (
    BasepointNode,
    BasepointTree,
    get_basepoints,
    multiplicity,
    strict_transform,
    tree_from_json,
    tree_to_json,
)
from .bipoly import (
    BiPoly,
    UniPoly,
    deriv_eval,
    exact_div_power,
    gcd_tuple,
    pullback_blowup,
    resultant,
)
from .errors import (
    BasisMismatch,
    ConjugationUnavailable,
    DivisionByZero,
    FieldMismatch,
    InvalidExtension,
    InvalidInput,
    LinserError,
    NoAdjoint,
    NonConstantGcd,
    NotABasepoint,
    NotDivisible,
    ParseError,
    RecursionLimitExceeded,
)
from .factorize import adjoin_roots, factor_univariate, squarefree_part
from .linseries import (
    Bidegree,
    ConstraintMatrix,
    LinearSeries,
    TotalDegree,
    adjoint_series,
    complete_series,
    kernel_basis,
    monomial_basis,
    series_through,
    set_basepoints,
    span_contains,
    spans_equal,
)
from .nslattice import (
    LatticeContext,
    NSClass,
    adjoint_class,
    arithmetic_genus,
    class_of_series,
    degree_of_surface,
    h0_of_class,
    intersect,
    involution_image,
    sectional_genus,
)
from .numfield import (
    QQ,
    FieldAutomorphism,
    FieldElement,
    FieldTower,
    Rational,
    conjugation,
    extend_field,
)
from .parsing import parse_bipoly, parse_element, parse_unipoly
from .zeroset import ZeroPoint, zero_set

__version__ = "0.1.0"

__all__ = [
    "BasepointNode",
    "BasepointTree",
    "BasisMismatch",
    "Bidegree",
    "BiPoly",
    "ConjugationUnavailable",
    "ConstraintMatrix",
    "DivisionByZero",
    "FieldAutomorphism",
    "FieldElement",
    "FieldMismatch",
    "FieldTower",
    "InvalidExtension",
    "InvalidInput",
    "LatticeContext",
    "LinearSeries",
    "LinserError",
    "NoAdjoint",
    "NonConstantGcd",
    "NotABasepoint",
    "NotDivisible",
    "NSClass",
    "ParseError",
    "QQ",
    "Rational",
    "RecursionLimitExceeded",
    "TotalDegree",
    "UniPoly",
    "ZeroPoint",
    "adjoin_roots",
    "adjoint_class",
    "adjoint_series",
    "arithmetic_genus",
    "class_of_series",
    "complete_series",
    "conjugation",
    "degree_of_surface",
    "deriv_eval",
    "exact_div_power",
    "extend_field",
    "factor_univariate",
    "gcd_tuple",
    "get_basepoints",
    "h0_of_class",
    "intersect",
    "involution_image",
    "kernel_basis",
    "monomial_basis",
    "multiplicity",
    "parse_bipoly",
    "parse_element",
    "parse_unipoly",
    "pullback_blowup",
    "resultant",
    "sectional_genus",
    "series_through",
    "set_basepoints",
    "span_contains",
    "spans_equal",
    "squarefree_part",
    "strict_transform",
    "tree_from_json",
    "tree_to_json",
    "zero_set",
]
