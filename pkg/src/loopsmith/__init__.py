"""Computational toolkit for finite loops: identities, isotopes, nuclei and G-loops."""
from .core import (LoopTable, Permutation, compose, identity_perm, inverse, left_div,
                   left_translation, make_loop, mul, right_div, right_translation, transpose)
from .errors import (BadSymbol, LoopError, NoIdentity, NotCentralLoop, NotLatinColumn,
                     NotLatinRow, NotSteiner, OrderMismatch, OrderTooLarge, ParseError)
from .generation import (GenSpec, STS7, STS9, TripleSystem, all_loops, canonical_form,
                         cyclic_group, dedup_up_to_isomorphism, direct_product, steiner_loop,
                         symmetric_group)
from .identities import IdentityId, classify, failing_witness, satisfies
from .io import load_loop, save_loop
from .isotopy import (IsotopismTriple, RegularKind, autotopism_group, is_autotopism,
                      is_isotopism, is_left_universal, is_right_universal, is_universal,
                      left_isotope, principal_isotope, regular_set, right_isotope)
from .morphisms import (find_isomorphism, gloop_coset_criterion, is_G_lambda, is_G_loop_direct,
                        is_G_loop_theta, is_G_loop_wilson, is_G_rho)
from .subloops import (ElementSet, center, centrum, left_nucleus, middle_nucleus, nucleus,
                       right_nucleus)

__version__ = "0.1.0"

__all__ = [
    "LoopTable",
    "Permutation",
    "compose",
    "identity_perm",
    "inverse",
    "left_div",
    "left_translation",
    "make_loop",
    "mul",
    "right_div",
    "right_translation",
    "transpose",
    "BadSymbol",
    "LoopError",
    "NoIdentity",
    "NotCentralLoop",
    "NotLatinColumn",
    "NotLatinRow",
    "NotSteiner",
    "OrderMismatch",
    "OrderTooLarge",
    "ParseError",
    "GenSpec",
    "STS7",
    "STS9",
    "TripleSystem",
    "all_loops",
    "canonical_form",
    "cyclic_group",
    "dedup_up_to_isomorphism",
    "direct_product",
    "steiner_loop",
    "symmetric_group",
    "IdentityId",
    "classify",
    "failing_witness",
    "satisfies",
    "load_loop",
    "save_loop",
    "IsotopismTriple",
    "RegularKind",
    "autotopism_group",
    "is_autotopism",
    "is_isotopism",
    "is_left_universal",
    "is_right_universal",
    "is_universal",
    "left_isotope",
    "principal_isotope",
    "regular_set",
    "right_isotope",
    "find_isomorphism",
    "gloop_coset_criterion",
    "is_G_lambda",
    "is_G_loop_direct",
    "is_G_loop_theta",
    "is_G_loop_wilson",
    "is_G_rho",
    "ElementSet",
    "center",
    "centrum",
    "left_nucleus",
    "middle_nucleus",
    "nucleus",
    "right_nucleus",
]
