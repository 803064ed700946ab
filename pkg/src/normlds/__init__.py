"""Exact toolkit for norm-form solution sequences and divisibility bases.

Core pieces: exact integer/rational linear algebra with unimodular witnesses,
arithmetic in number fields of degree up to 4, Lucas sequences, basis
constructions that make the first coordinate sequence of beta * unit^k a
linear divisibility sequence, brute-force sequence verification, and the
congruence sequence d_k(alpha).
"""

from .exactlinalg import (
    HnfDecomposition,
    IntMatrix,
    SnfDecomposition,
    complete_primitive,
    det,
    hnf_column,
    inverse_unimodular,
    snf,
    xgcd,
)
from .numberfield import (
    FieldElement,
    ModuleBasis,
    NumberField,
    ParseError,
    coords_in_basis,
    format_element,
    format_polynomial,
    is_positive_unit,
    min_poly,
    norm,
    parse_element,
    parse_polynomial,
    trace,
)
from .lucas import (
    LucasParams,
    LucasSequence,
    lucas_u,
    odd_even_closed_form,
    odd_index_square_identity,
)
from .coordseq import (
    LdsVerdict,
    MinimalRecurrence,
    SequenceReport,
    analyze,
    divides,
    generate,
    minimal_order,
    verify_lds,
    verify_recurrence,
)
from .basisforge import (
    InvariantViolation,
    LdsConstruction,
    SnfCriterion,
    family_basis,
    family_closed_form_vectors,
    family_field,
    family_surd_basis,
    quad_construct,
    quartic_full_construct,
    quartic_module_construct,
    quartic_unit_trace,
    snf_criterion,
    snf_criterion_matrix,
)
from .dkseq import (
    CheckRefused,
    DkMatchReport,
    DkSequence,
    LevelScan,
    SparseScanReport,
    discriminant_power_basis,
    dk,
    dk_level_scan,
    dk_maximality_oracle,
    dk_recurrence_check,
    dk_sequence,
    match_dk_basis,
    sparse_minpoly_scan,
)

__all__ = [
    "CheckRefused",
    "DkMatchReport",
    "DkSequence",
    "FieldElement",
    "HnfDecomposition",
    "IntMatrix",
    "InvariantViolation",
    "LdsConstruction",
    "LdsVerdict",
    "LevelScan",
    "LucasParams",
    "LucasSequence",
    "MinimalRecurrence",
    "ModuleBasis",
    "NumberField",
    "ParseError",
    "SequenceReport",
    "SnfCriterion",
    "SnfDecomposition",
    "SparseScanReport",
    "analyze",
    "complete_primitive",
    "coords_in_basis",
    "det",
    "discriminant_power_basis",
    "divides",
    "dk",
    "dk_level_scan",
    "dk_maximality_oracle",
    "dk_recurrence_check",
    "dk_sequence",
    "family_basis",
    "family_closed_form_vectors",
    "family_field",
    "family_surd_basis",
    "format_element",
    "format_polynomial",
    "generate",
    "hnf_column",
    "inverse_unimodular",
    "is_positive_unit",
    "lucas_u",
    "match_dk_basis",
    "min_poly",
    "minimal_order",
    "norm",
    "odd_even_closed_form",
    "odd_index_square_identity",
    "parse_element",
    "parse_polynomial",
    "quad_construct",
    "quartic_full_construct",
    "quartic_module_construct",
    "quartic_unit_trace",
    "snf",
    "snf_criterion",
    "snf_criterion_matrix",
    "trace",
    "verify_lds",
    "verify_recurrence",
    "xgcd",
]

__version__ = "0.1.0"
