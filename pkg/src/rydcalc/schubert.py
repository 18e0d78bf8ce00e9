"""Schubert polynomials and the cup product on H*(Fl(C^n)).

Polynomials are dicts from exponent tuples (trailing zeros stripped) to
nonzero integers.  This module is an oracle independent of jeu de taquin.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from .roots import FlagShape
from .weyl import code_of, has_descents_in, length, perm_from_any_code

Poly = dict
Perm = tuple[int, ...]

__all__ = [
    "poly_mul",
    "poly_add",
    "divided_difference",
    "schubert_poly",
    "schubert_poly_from_top",
    "leading_exponent",
    "cup_expand",
    "cup_coeff_restricted",
    "PeelError",
]


class PeelError(ArithmeticError):
    """Peeling produced a negative coefficient or failed to terminate."""


def _strip(e: Sequence[int]) -> tuple[int, ...]:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _trim(w: Sequence[int]) -> Perm:
    """Drop trailing fixed points; Schubert polynomials are stable under them."""
    w = list(w)
    while w and w[-1] == len(w):
        w.pop()
    return tuple(w)


def poly_add(f: Mapping, g: Mapping, scale: int = 1) -> Poly:
    out = dict(f)
    for e, c in g.items():
        v = out.get(e, 0) + scale * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def poly_mul(f: Mapping, g: Mapping) -> Poly:
    out: Poly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            m = max(len(e1), len(e2))
            e = _strip(
                (e1[i] if i < len(e1) else 0) + (e2[i] if i < len(e2) else 0) for i in range(m)
            )
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def divided_difference(f: Mapping, i: int) -> Poly:
    """(f - s_i f) / (x_i - x_{i+1}), with 1-indexed i."""
    out: Poly = {}
    for e, c in f.items():
        e = list(e) + [0] * max(0, i + 1 - len(e))
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        sign, lo, hi = (1, b, a) if a > b else (-1, a, b)
        for j in range(hi - lo):
            ne = list(e)
            ne[i - 1], ne[i] = hi - 1 - j, lo + j
            key = _strip(ne)
            out[key] = out.get(key, 0) + sign * c
    return {e: c for e, c in out.items() if c}


def _swap(w: Perm, i: int) -> Perm:
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


@lru_cache(maxsize=None)
def _schubert(w: Perm) -> tuple:
    c = code_of(w) if w else ()
    for i in range(1, len(c)):
        if c[i - 1] < c[i]:
            # w(i) < w(i+1): S_w = d_i S_{w s_i}, and w s_i is closer to dominant
            return tuple(sorted(divided_difference(dict(_schubert(_trim(_swap(w, i)))), i).items()))
    return ((_strip(c), 1),)


def schubert_poly(w: Sequence[int]) -> Poly:
    """Schubert polynomial of a permutation, built down from dominant permutations.

    A dominant permutation (weakly decreasing code) has S_w = x^code(w); any
    other w has a code ascent c_i < c_{i+1}, and S_w = d_i S_{w s_i}.
    """
    return dict(_schubert(_trim(tuple(w))))


def schubert_poly_from_top(w: Sequence[int], m: int | None = None) -> Poly:
    """S_w computed literally from S_{w0} in S_m along a reduced word of w^{-1} w0."""
    w = tuple(w)
    m = len(w) if m is None else m
    w = w + tuple(range(len(w) + 1, m + 1))
    f: Poly = {tuple(range(m - 1, -1, -1))[: m - 1]: 1} if m > 1 else {(): 1}
    f = {_strip(e): c for e, c in f.items()}
    # v = w^{-1} w0; w0 = w v, and peeling v from the right walks down from w0 to w
    winv = [0] * m
    for pos, x in enumerate(w, 1):
        winv[x - 1] = pos
    v = [winv[m - p] for p in range(1, m + 1)]
    while True:
        j = next((j for j in range(1, m) if v[j - 1] > v[j]), None)
        if j is None:
            return f
        f = divided_difference(f, j)
        v[j - 1], v[j] = v[j], v[j - 1]


def leading_exponent(f: Mapping) -> tuple[int, ...]:
    """The exponent maximal in reverse-lex order (compare from the last variable)."""
    width = max((len(e) for e in f), default=0)
    return max(f, key=lambda e: tuple(reversed(tuple(e) + (0,) * (width - len(e)))))


@lru_cache(maxsize=None)
def _cup_expand(u: Perm, v: Perm) -> tuple:
    prod = poly_mul(schubert_poly(u), schubert_poly(v))
    out: dict[Perm, int] = {}
    budget = 10**6
    while prod:
        budget -= 1
        if budget < 0:
            raise PeelError("peeling did not terminate")
        e = leading_exponent(prod)
        c = prod[e]
        if c < 0:
            raise PeelError(f"negative coefficient {c} at exponent {e}")
        w = _trim(perm_from_any_code(e))
        out[w] = c
        prod = poly_add(prod, schubert_poly(w), -c)
    return tuple(sorted(out.items()))


def cup_expand(u: Sequence[int], v: Sequence[int], n: int) -> dict[Perm, int]:
    """sigma_u . sigma_v in H*(Fl(C^n)), keyed by permutations of length n."""
    u, v = tuple(u), tuple(v)
    if len(u) != n or len(v) != n:
        raise ValueError(f"expected permutations of length {n}")
    a, b = sorted((_trim(u), _trim(v)))
    out = {}
    for w, c in _cup_expand(a, b):
        if len(w) <= n:
            full = w + tuple(range(len(w) + 1, n + 1))
            out[full] = c
    return out


def cup_coeff_restricted(u: Perm, v: Perm, w: Perm, shape: FlagShape) -> int:
    """Coefficient of sigma_w in sigma_u . sigma_v for classes of the partial flag variety."""
    for x in (u, v, w):
        if not has_descents_in(tuple(x), shape):
            raise ValueError(f"{x} has a descent outside {shape.k}")
    if length(w) != length(u) + length(v):
        return 0
    return cup_expand(u, v, shape.n).get(tuple(w), 0)
