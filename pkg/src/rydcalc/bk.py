"""Belkale-Kumar coefficients for partial flag varieties of GL_n.

Two independent routes compute the same numbers: a product of per-region
jeu de taquin counts on root-theoretic Young diagrams, and a product of
Grassmannian structure constants read off two-letter subwords.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .jdt import e_coeff, lr_coeff
from .partitions import partitions_in_box
from .roots import FlagShape
from .ryd import FlagRYD, perm_from_ryd, ryd_from_perm, validate_k_diagram
from .schubert import cup_coeff_restricted
from .weyl import Word, delete_letters, shape_of_word, word_to_perm

__all__ = [
    "bk_coeff",
    "bk_coeff_via_words",
    "bk_expand",
    "is_levi_movable",
    "degrees_match",
    "word_region_partition",
]


def _check_same_shape(*ryds: FlagRYD) -> FlagShape:
    shape = ryds[0].shape
    if any(r.shape != shape for r in ryds):
        raise ValueError("diagrams have different flag shapes")
    return shape


def degrees_match(lam: FlagRYD, mu: FlagRYD, nu: FlagRYD) -> bool:
    return all(a + b == c for a, b, c in zip(lam.degrees(), mu.degrees(), nu.degrees()))


def bk_coeff(lam: FlagRYD, mu: FlagRYD, nu: FlagRYD) -> int:
    """Product over regions of the jeu de taquin counts e^{nu_ij}_{lam_ij, mu_ij}."""
    shape = _check_same_shape(lam, mu, nu)
    if not degrees_match(lam, mu, nu):
        return 0
    sizes = shape.sizes
    out = 1
    for i, j in shape.region_keys():
        out *= e_coeff(lam.part(i, j), mu.part(i, j), nu.part(i, j), sizes[i - 1], sizes[j - 1])
        if not out:
            return 0
    return out


def word_region_partition(tau: Word, i: int, j: int) -> tuple[tuple[int, ...], int, int]:
    """The Grassmannian partition of the two-letter subword on letters i < j, with its box."""
    sub = delete_letters(tau, i, j)
    relabelled = tuple(1 if x == i else 2 for x in sub)
    rows, cols = relabelled.count(1), relabelled.count(2)
    if not rows or not cols:
        raise ValueError(f"word {tau} lacks letter {i} or {j}")
    grass = FlagShape(rows + cols, (rows,))
    return ryd_from_perm(word_to_perm(relabelled), grass).part(1, 2), rows, cols


def bk_coeff_via_words(tau: Sequence[int], pi: Sequence[int], rho: Sequence[int]) -> int:
    """Product over letter pairs i < j of structure constants of the subwords."""
    tau, pi, rho = tuple(tau), tuple(pi), tuple(rho)
    shape = shape_of_word(tau)
    if shape_of_word(pi) != shape or shape_of_word(rho) != shape:
        raise ValueError("words have different contents")
    out = 1
    for i, j in shape.region_keys():
        (lam, r, c), (mu, _, _), (nu, _, _) = (word_region_partition(x, i, j) for x in (tau, pi, rho))
        out *= lr_coeff(lam, mu, nu, r, c)
        if not out:
            return 0
    return out


def bk_expand(lam: FlagRYD, mu: FlagRYD) -> dict[FlagRYD, int]:
    """All nonzero coefficients of sigma_lam (.)_0 sigma_mu.

    Candidates are products of per-region partitions of the forced degree,
    filtered by the hook condition.
    """
    shape = _check_same_shape(lam, mu)
    sizes = shape.sizes
    keys = shape.region_keys()
    choices = []
    for (i, j), a, b in zip(keys, lam.degrees(), mu.degrees()):
        choices.append(partitions_in_box(sizes[i - 1], sizes[j - 1], a + b))
    out = {}
    for combo in itertools.product(*choices):
        parts = dict(zip(keys, combo))
        if not validate_k_diagram(parts, shape):
            continue
        nu = FlagRYD.from_mapping(shape, parts)
        c = bk_coeff(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def is_levi_movable(lam: FlagRYD, mu: FlagRYD, nu: FlagRYD) -> bool:
    """Nonzero cup coefficient (from the Schubert oracle) and matching region degrees."""
    shape = _check_same_shape(lam, mu, nu)
    if not degrees_match(lam, mu, nu):
        return False
    u, v, w = (perm_from_ryd(x) for x in (lam, mu, nu))
    return cup_coeff_restricted(u, v, w, shape) != 0
