"""Finite pseudo hoops: tables, filters, decompositions, normal-valuedness."""
from .core import (
    AxiomError,
    AxiomViolation,
    ClassFlags,
    FiniteHoop,
    classify,
    derive_arrows,
    make_hoop,
    meet_join,
    power,
    stab_index,
    validate,
)
from .cones import direct_product, make_chain, named, ordinal_sum
from .enumeration import EnumOptions, are_isomorphic, canonical_form, enumerate_hoops

__all__ = [
    "AxiomError", "AxiomViolation", "ClassFlags", "FiniteHoop", "classify", "derive_arrows",
    "make_hoop", "meet_join", "power", "stab_index", "validate", "direct_product", "make_chain",
    "named", "ordinal_sum", "EnumOptions", "are_isomorphic", "canonical_form", "enumerate_hoops",
]
