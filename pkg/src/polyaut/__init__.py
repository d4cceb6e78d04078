"""Exact computation with polynomial automorphisms of affine n-space
over the rationals: sparse polynomial arithmetic, endomorphism algebra,
locally-finite certification with minimal polynomials, tame normal forms,
and conjugation witnesses for the normal closure of the diagonal group."""

from .endo import (
    Endo,
    SquareMatrixPoly,
    compose,
    degree,
    equals,
    identity,
    iterate,
    jacobian_det,
    jacobian_matrix,
    linear_combination,
    verify_inverse_pair,
)
from .locfin import (
    InconsistencyError,
    LFReport,
    UniPoly,
    conjugate,
    inverse_from_minpoly,
    lf_certify,
    minimality_certificate,
    reversal,
    verify_vanishing,
)
from .poly import NEG_INF, Poly
from .tame import (
    Affine,
    Diagonal,
    Elementary,
    NormalForm,
    TameWord,
    affine_to_word,
    gen_to_endo,
    generator_determinant,
    invert_generator,
    invert_word,
    normal_form,
    push_diagonal,
    word_to_endo,
)
from .textio import (
    MapDocument,
    ParseError,
    parse_map,
    parse_poly,
    render_map,
    render_poly,
)
from .witness import (
    VerificationError,
    Witness,
    nagata,
    nagata_inverse,
    verify_witness,
    witness_obs2,
    witness_obs3,
    witness_obs4,
)

__version__ = "0.1.0"

__all__ = [
    "NEG_INF",
    "Poly",
    "Endo",
    "SquareMatrixPoly",
    "identity",
    "compose",
    "iterate",
    "degree",
    "equals",
    "linear_combination",
    "jacobian_matrix",
    "jacobian_det",
    "verify_inverse_pair",
    "ParseError",
    "MapDocument",
    "parse_poly",
    "parse_map",
    "render_poly",
    "render_map",
    "UniPoly",
    "LFReport",
    "InconsistencyError",
    "lf_certify",
    "verify_vanishing",
    "minimality_certificate",
    "inverse_from_minpoly",
    "reversal",
    "conjugate",
    "Diagonal",
    "Elementary",
    "Affine",
    "TameWord",
    "NormalForm",
    "gen_to_endo",
    "word_to_endo",
    "generator_determinant",
    "invert_generator",
    "invert_word",
    "affine_to_word",
    "push_diagonal",
    "normal_form",
    "Witness",
    "VerificationError",
    "witness_obs2",
    "witness_obs3",
    "witness_obs4",
    "nagata",
    "nagata_inverse",
    "verify_witness",
]
