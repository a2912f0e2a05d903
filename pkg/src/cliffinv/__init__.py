"""Exact-arithmetic Clifford algebra library for Cl(p,q) with p+q <= 5.

Multivectors carry exact rational coefficients; inverses and discriminants
come from a chain of grade-sign involutions, with closed-form discriminant
polynomials for up to four generators and an independent regular-matrix
oracle for verification.
"""

from .blades import (
    MAX_GENERATORS,
    Blade,
    Signature,
    SignedBlade,
    blade_from_text,
    blade_mul,
    blade_order,
    blade_square_sign,
    blade_to_text,
    grade,
    transposition_sign,
)
from .errors import (
    CliffordError,
    DimensionMismatch,
    DimensionOutOfRange,
    GradeOutOfRange,
    LexError,
    NotInvertible,
    ParseError,
    SignatureMismatch,
    SubspaceViolation,
)
from .inversion import (
    InverseResult,
    InvolutionChain,
    alternate_chain,
    compose_inverse,
    default_chain,
    discriminant,
    discriminant_closed_form,
    inverse,
    verify_d_equals_dprime,
)
from .involutions import (
    DeltaConstraint,
    GradeSet,
    LengthDeltaMap,
    apply_delta,
    conjugation,
    conjugation_delta,
    constraints_for,
    delta_solutions,
    grade_involution,
    grade_involution_delta,
    invariant_grades,
    is_special_involution,
    named_map_matches,
    psi,
    psi_delta,
    reversion,
    reversion_delta,
)
from .multivector import Multivector
from .oracle import RegularMatrix, oracle_inverse, oracle_is_invertible, regular_matrix
from .parsing import evaluate, parse, parse_expression, tokenize

__version__ = "0.1.0"

__all__ = [
    "MAX_GENERATORS",
    "Blade",
    "Signature",
    "SignedBlade",
    "blade_from_text",
    "blade_mul",
    "blade_order",
    "blade_square_sign",
    "blade_to_text",
    "grade",
    "transposition_sign",
    "CliffordError",
    "DimensionMismatch",
    "DimensionOutOfRange",
    "GradeOutOfRange",
    "LexError",
    "NotInvertible",
    "ParseError",
    "SignatureMismatch",
    "SubspaceViolation",
    "InverseResult",
    "InvolutionChain",
    "alternate_chain",
    "compose_inverse",
    "default_chain",
    "discriminant",
    "discriminant_closed_form",
    "inverse",
    "verify_d_equals_dprime",
    "DeltaConstraint",
    "GradeSet",
    "LengthDeltaMap",
    "apply_delta",
    "conjugation",
    "conjugation_delta",
    "constraints_for",
    "delta_solutions",
    "grade_involution",
    "grade_involution_delta",
    "invariant_grades",
    "is_special_involution",
    "named_map_matches",
    "psi",
    "psi_delta",
    "reversion",
    "reversion_delta",
    "Multivector",
    "RegularMatrix",
    "oracle_inverse",
    "oracle_is_invertible",
    "regular_matrix",
    "evaluate",
    "parse",
    "parse_expression",
    "tokenize",
    "__version__",
]
