"""Exact computation in the unrestricted virtual braid groups UVB_n.

UVB_n is handled through its decomposition as UVP_n x| S_n, where the pure
part UVP_n is a direct sum of rank-2 free groups.  Every element has a
canonical :class:`NormalForm`, which solves the word problem; on top of that
the package computes orders of elements, conjugators of torsion elements to
permutations, and membership tests for the crystallographic braid group.
"""

from .crystal import (
    CrystalQuotientElement,
    crystal_equals,
    eta,
    in_cn,
    in_image_eta,
    project_hn_quotient,
    writhe,
)
from .errors import (
    HypothesisError,
    NotTorsionError,
    ParseError,
    PreconditionError,
    StrandMismatchError,
    UVBError,
    WordTooLongError,
)
from .free2 import (
    F2Word,
    cyclic_member,
    exponent_pair,
    f2_inv,
    f2_mul,
    solve_alpha_coboundary,
    swap_alpha,
)
from .perms import OrbitBlock, Permutation, adjacent_lift, compose, pair_orbits, perm_order_and_cycles
from .torsion import order_of, torsion_conjugator
from .uvb import (
    NormalForm,
    check_relations,
    is_identity,
    lambda_generator_word,
    nf,
    nf_equals,
    nf_inv,
    nf_mul,
    normal_form,
    words_equal,
)
from .uvp import PureElement, act_perm, component, epsilon, uvp_inv, uvp_mul
from .words import BraidWord, Letter, invert_word, parse, render

__all__ = [
    "act_perm",
    "adjacent_lift",
    "BraidWord",
    "check_relations",
    "component",
    "compose",
    "crystal_equals",
    "CrystalQuotientElement",
    "cyclic_member",
    "epsilon",
    "eta",
    "exponent_pair",
    "f2_inv",
    "f2_mul",
    "F2Word",
    "HypothesisError",
    "in_cn",
    "in_image_eta",
    "invert_word",
    "is_identity",
    "lambda_generator_word",
    "Letter",
    "nf",
    "nf_equals",
    "nf_inv",
    "nf_mul",
    "normal_form",
    "NormalForm",
    "NotTorsionError",
    "OrbitBlock",
    "order_of",
    "pair_orbits",
    "parse",
    "ParseError",
    "perm_order_and_cycles",
    "Permutation",
    "PreconditionError",
    "project_hn_quotient",
    "PureElement",
    "render",
    "solve_alpha_coboundary",
    "StrandMismatchError",
    "swap_alpha",
    "torsion_conjugator",
    "UVBError",
    "uvp_inv",
    "uvp_mul",
    "WordTooLongError",
    "words_equal",
    "writhe",
]

__version__ = "0.1.0"
