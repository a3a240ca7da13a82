"""Exact Groebner-basis toolkit for ideals of 2x2 permanents of Hankel matrices."""

from .ring import (
    DEGLEX,
    LEX,
    MonomialOrder,
    ParseError,
    Polynomial,
    Ring,
    RingMismatchError,
    elim,
    parse,
)
from .groebner import (
    GroebnerBasis,
    buchberger,
    inter_reduce,
    is_groebner,
    member,
    normal_form,
    s_polynomial,
)
from .ideal_ops import (
    Ideal,
    add,
    colon,
    equal,
    ideal_from_dict,
    intersect,
    polys_to_dict,
    product,
    radical_member,
    saturate,
    why_unequal,
)
from .verify import (
    Case,
    ShapeClass,
    VerificationReport,
    alphas,
    classify_embedded,
    closed_form_gb,
    decomposition_summary,
    default_grid,
    embedded_j,
    minimal_primes,
    q1,
    q2,
    rewrite_monomial_indices,
    run_all,
    run_case,
    verify_associated_maximal,
    verify_bound_lemma,
    verify_decomposition,
    verify_gb,
    verify_membership_lemmas,
    verify_primary_properties,
    verify_reduction_lemma,
)
from .hankel import (
    HankelMatrix,
    permanent,
    permanent_generators,
    permanent_ideal,
    permanent_index_triples,
    subpermanents_ideal,
)

__version__ = "0.1.0"

__all__ = [
    "DEGLEX",
    "LEX",
    "MonomialOrder",
    "ParseError",
    "Polynomial",
    "Ring",
    "RingMismatchError",
    "elim",
    "parse",
    "GroebnerBasis",
    "buchberger",
    "inter_reduce",
    "is_groebner",
    "member",
    "normal_form",
    "s_polynomial",
    "Ideal",
    "add",
    "colon",
    "equal",
    "ideal_from_dict",
    "intersect",
    "polys_to_dict",
    "product",
    "radical_member",
    "saturate",
    "why_unequal",
    "HankelMatrix",
    "permanent",
    "permanent_generators",
    "permanent_ideal",
    "permanent_index_triples",
    "subpermanents_ideal",
    "Case",
    "ShapeClass",
    "VerificationReport",
    "alphas",
    "classify_embedded",
    "closed_form_gb",
    "decomposition_summary",
    "default_grid",
    "embedded_j",
    "minimal_primes",
    "q1",
    "q2",
    "rewrite_monomial_indices",
    "run_all",
    "run_case",
    "verify_associated_maximal",
    "verify_bound_lemma",
    "verify_decomposition",
    "verify_gb",
    "verify_membership_lemmas",
    "verify_primary_properties",
    "verify_reduction_lemma",
    "__version__",
]
