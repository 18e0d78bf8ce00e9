"""Exact Schubert calculus on root-theoretic Young diagrams.

Belkale-Kumar products on partial flag varieties of GL_n, index translation
for non-maximal isotropic Grassmannians, and the two-row Pieri and star
products for LG(2, 2n) and OG(2, 2n).
"""

from .bk import bk_coeff, bk_coeff_via_words, bk_expand, is_levi_movable
from .isotropic import F_k, TypedStrictPartition, f_k, translate, translate_inverse
from .jdt import e_coeff, jdt_rectify, lr_coeff
from .pieri import arrow_relation, count_N_LG, count_N_OG, pieri_LG, pieri_OG
from .roots import FlagShape, lambda_k
from .ryd import FlagRYD, IsotropicRYD, perm_from_ryd, ryd_from_perm, ryd_from_signed_perm
from .schubert import cup_expand, schubert_poly
from .star import AdjointRYD, CoadjointRYD, star_LG, star_OG
from .weyl import SignedPerm, enumerate_cells, word_to_perm

__version__ = "0.1.0"

__all__ = [
    "AdjointRYD",
    "CoadjointRYD",
    "F_k",
    "FlagRYD",
    "FlagShape",
    "IsotropicRYD",
    "SignedPerm",
    "TypedStrictPartition",
    "arrow_relation",
    "bk_coeff",
    "bk_coeff_via_words",
    "bk_expand",
    "count_N_LG",
    "count_N_OG",
    "cup_expand",
    "e_coeff",
    "enumerate_cells",
    "f_k",
    "is_levi_movable",
    "jdt_rectify",
    "lambda_k",
    "lr_coeff",
    "perm_from_ryd",
    "pieri_LG",
    "pieri_OG",
    "ryd_from_perm",
    "ryd_from_signed_perm",
    "schubert_poly",
    "star_LG",
    "star_OG",
    "translate",
    "translate_inverse",
    "word_to_perm",
]
