"""Products on two-row RYDs for LG(2, 2n) and OG(2, 2n).

A shape <l1, l2 | top> records the base partition and whether the single
top root is used.  LG shapes live in a 2 x (2n-3) base, OG shapes in a
2 x (2n-4) base and carry a charge when a base row equals n-2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .isotropic import TypedStrictPartition, translate
from .ryd import IsotropicRYD

__all__ = [
    "CoadjointRYD",
    "AdjointRYD",
    "star_LG",
    "diamond_OG",
    "star_OG",
    "fsh",
    "eta",
    "translate_k2",
    "pieri_element_LG",
    "pieri_elements_OG",
    "all_coadjoint",
    "all_adjoint",
]


def _valid_top(size: int, top: bool, threshold: int) -> bool:
    return size >= threshold if top else size <= threshold


@dataclass(frozen=True, order=True)
class CoadjointRYD:
    """<base | top> in Y_{LG(2,2n)}, the same set as Y_{OG(2,2n+1)}."""

    n: int
    base: tuple[int, int]
    top: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", tuple(self.base))
        w = 2 * self.n - 3
        if not (len(self.base) == 2 and w >= self.base[0] >= self.base[1] >= 0):
            raise ValueError(f"{self.base} is not a partition in 2x{w}")
        if not _valid_top(sum(self.base), self.top, w):
            raise ValueError(f"top root {'used' if self.top else 'unused'} is invalid for {self.base}")

    @property
    def size(self) -> int:
        return sum(self.base) + int(self.top)

    def to_isotropic(self) -> IsotropicRYD:
        return IsotropicRYD("B", self.n, 2, self.base, (int(self.top), 0))

    def __str__(self) -> str:
        return f"<{self.base[0]},{self.base[1]}|{'*' if self.top else 'o'}>"


@dataclass(frozen=True, order=True)
class AdjointRYD:
    """<base | top> in Y_{OG(2,2n)} with an optional charge 'up' / 'down'."""

    n: int
    base: tuple[int, int]
    top: bool = False
    charge: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", tuple(self.base))
        w = 2 * self.n - 4
        if not (len(self.base) == 2 and w >= self.base[0] >= self.base[1] >= 0):
            raise ValueError(f"{self.base} is not a partition in 2x{w}")
        if not _valid_top(sum(self.base), self.top, w):
            raise ValueError(f"top root {'used' if self.top else 'unused'} is invalid for {self.base}")
        if self.charged_shape != (self.charge in ("up", "down")):
            raise ValueError(f"charge {self.charge!r} does not match {self.base}")

    @property
    def charged_shape(self) -> bool:
        return self.n - 2 in self.base

    @property
    def size(self) -> int:
        return sum(self.base) + int(self.top)

    @property
    def is_pieri(self) -> bool:
        return self.base[1] == 0

    def plain(self) -> tuple[int, int, bool]:
        """The charge-free shape."""
        return (self.base[0], self.base[1], self.top)

    def to_isotropic(self) -> IsotropicRYD:
        return IsotropicRYD("D", self.n, 2, self.base, (int(self.top), 0), self.charge)

    def __str__(self) -> str:
        mark = {"up": "^", "down": "v", None: ""}[self.charge]
        return f"<{self.base[0]},{self.base[1]}|{'*' if self.top else 'o'}>{mark}"


def _legal(k1: int, k2: int, width: int) -> bool:
    return width >= k1 >= k2 >= 0


def _two_row_terms(lam: tuple, lam_top: bool, mu: tuple, mu_top: bool, threshold: int) -> list[tuple[int, int, bool, int]]:
    """Shared case analysis of the LG product and the OG diamond expression.

    Returns (k1, k2, top, coeff) terms before legality filtering; the LG
    product lists the two (B) terms separately, which coalesce to the
    1, 2, ..., 2, 1 pattern written out in the OG diamond.
    """
    if lam_top and mu_top:
        return []
    m = min(lam[0] - lam[1], mu[0] - mu[1])
    a, b = lam[0] + mu[0], lam[1] + mu[1]
    if lam_top or mu_top:
        return [(a - k, b + k, True, 1) for k in range(m + 1)]
    if sum(lam) + sum(mu) <= threshold:
        return [(a - k, b + k, False, 1) for k in range(m + 1)]
    out = []
    for k in range(m + 1):
        out.append((a - k, b + k - 1, True, 1))
        out.append((a - k - 1, b + k, True, 1))
    return out


def star_LG(lam: CoadjointRYD, mu: CoadjointRYD) -> dict[CoadjointRYD, int]:
    if lam.n != mu.n:
        raise ValueError("shapes come from different n")
    n, width = lam.n, 2 * lam.n - 3
    out: dict[CoadjointRYD, int] = {}
    for k1, k2, top, c in _two_row_terms(lam.base, lam.top, mu.base, mu.top, width):
        if _legal(k1, k2, width):
            key = CoadjointRYD(n, (k1, k2), top)
            out[key] = out.get(key, 0) + c
    return out


def diamond_OG(lam: AdjointRYD, mu: AdjointRYD) -> dict[tuple[int, int, bool], int]:
    """The charge-free expression Pi(lam) <> Pi(mu), keyed by (k1, k2, top)."""
    if lam.n != mu.n:
        raise ValueError("shapes come from different n")
    width = 2 * lam.n - 4
    out: dict[tuple[int, int, bool], int] = {}
    for k1, k2, top, c in _two_row_terms(lam.base, lam.top, mu.base, mu.top, width):
        if _legal(k1, k2, width):
            out[(k1, k2, top)] = out.get((k1, k2, top), 0) + c
    return out


def fsh(base: Iterable[int], top: bool, n: int) -> int:
    """Distinct parts of size at least n-2 in the translated index.

    The translated index is the base with the top root added to row 1.
    """
    a, b = base
    gamma = (a + int(top), b)
    return len({x for x in gamma if x >= n - 2})


def eta(lam: AdjointRYD, mu: AdjointRYD) -> int:
    if lam.charge is None or mu.charge is None:
        return 1
    match = lam.charge == mu.charge
    if (match and lam.n % 2 == 0) or (not match and lam.n % 2 == 1):
        return 2
    return 0


def _opposite(charge: str) -> str:
    return "down" if charge == "up" else "up"


def _special_square(lam: AdjointRYD, mu: AdjointRYD) -> dict[AdjointRYD, int]:
    """Both factors are charged copies of <n-2, 0 | o>."""
    n = lam.n
    match = lam.charge == mu.charge
    if n % 2 == 0 and match:
        shapes = [(2 * n - 4 - 2 * k, 2 * k) for k in range((n - 2) // 2 + 1)]
    elif n % 2 == 0:
        shapes = [(2 * n - 5 - 2 * k, 2 * k + 1) for k in range((n - 4) // 2 + 1)]
    elif match:
        shapes = [(2 * n - 5 - 2 * k, 2 * k + 1) for k in range((n - 3) // 2 + 1)]
    else:
        shapes = [(2 * n - 4 - 2 * k, 2 * k) for k in range((n - 3) // 2 + 1)]
    out = {}
    for s in shapes:
        charge = lam.charge if n - 2 in s else None
        out[AdjointRYD(n, s, False, charge)] = 1
    return out


def star_OG(lam: AdjointRYD, mu: AdjointRYD) -> dict[AdjointRYD, int]:
    """The product on Y_{OG(2,2n)}: diamond, eta scaling, fsh rescale, disambiguation."""
    if lam.n != mu.n:
        raise ValueError("shapes come from different n")
    n = lam.n
    pieri_charged = (n - 2, 0, False)
    if lam.plain() == pieri_charged and mu.plain() == pieri_charged:
        return _special_square(lam, mu)

    terms: dict[tuple[int, int, bool], Fraction] = {}
    for (k1, k2, top), c in diamond_OG(lam, mu).items():
        coeff = Fraction(c)
        if k1 == 2 * n - 4:
            coeff *= eta(lam, mu)
        coeff *= Fraction(2) ** (fsh((k1, k2), top, n) - fsh(lam.base, lam.top, n) - fsh(mu.base, mu.top, n))
        if coeff:
            terms[(k1, k2, top)] = coeff

    out: dict[AdjointRYD, Fraction] = {}

    def emit(key: tuple[int, int, bool], charge: str | None, c: Fraction) -> None:
        x = AdjointRYD(n, key[:2], key[2], charge)
        out[x] = out.get(x, Fraction(0)) + c

    def split_or_follow(key, c, other: AdjointRYD) -> None:
        if other.charge is None:
            emit(key, "up", c / 2)
            emit(key, "down", c / 2)
        else:
            emit(key, other.charge, c)

    # orient so that a Pieri factor, if any, comes first
    first, second = (lam, mu)
    if not first.is_pieri and second.is_pieri:
        first, second = second, first
    if first.is_pieri and first.charge is None:
        rule = "neutral_pieri"
    elif first.is_pieri and not second.is_pieri:
        rule = "charged_pieri"
    elif first.is_pieri and second.is_pieri:
        # one charged Pieri factor with a neutral Pieri partner
        first, second = (second, first) if second.charge is None else (first, second)
        rule = "neutral_pieri"
    else:
        rule = "non_pieri"

    special_key = (2 * n - 4, n - 2, True)
    use_parity = (
        rule == "charged_pieri"
        and second.top
        and second.charge is None
        and sum(second.base) == 2 * n - 4
    )
    for key, c in terms.items():
        if n - 2 not in key[:2]:
            emit(key, None, c)
        elif rule == "non_pieri":
            emit(key, "up", c / 2)
            emit(key, "down", c / 2)
        elif use_parity and key == special_key:
            charge = first.charge if second.base[0] % 2 == 0 else _opposite(first.charge)
            emit(key, charge, c)
        else:
            split_or_follow(key, c, second)

    result = {}
    for x, c in out.items():
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {c} for {x}")
        if c:
            result[x] = int(c)
    return result


def translate_k2(x: CoadjointRYD | AdjointRYD) -> TypedStrictPartition:
    """f adds the top root to the first row; F also turns the charge into a type."""
    return translate(x.to_isotropic())


def pieri_element_LG(p: int, n: int) -> CoadjointRYD:
    """The RYD whose translation is the Pieri index (p, 0)."""
    if not 1 <= p <= 2 * n - 2:
        raise ValueError(f"p={p} outside [1, {2 * n - 2}]")
    if p == 2 * n - 2:
        return CoadjointRYD(n, (2 * n - 3, 0), True)
    return CoadjointRYD(n, (p, 0), False)


def pieri_elements_OG(p: int, n: int) -> list[tuple[AdjointRYD, bool]]:
    """Pieri RYDs for (p, 0) with a flag saying whether the class is the primed one."""
    if not 1 <= p <= 2 * n - 3:
        raise ValueError(f"p={p} outside [1, {2 * n - 3}]")
    if p == 2 * n - 3:
        return [(AdjointRYD(n, (2 * n - 4, 0), True), False)]
    if p == n - 2:
        return [(AdjointRYD(n, (p, 0), False, "up"), False), (AdjointRYD(n, (p, 0), False, "down"), True)]
    return [(AdjointRYD(n, (p, 0), False), False)]


def all_coadjoint(n: int) -> list[CoadjointRYD]:
    w = 2 * n - 3
    out = []
    for a in range(w + 1):
        for b in range(a + 1):
            for top in (False, True):
                if _valid_top(a + b, top, w):
                    out.append(CoadjointRYD(n, (a, b), top))
    return out


def all_adjoint(n: int) -> list[AdjointRYD]:
    w = 2 * n - 4
    out = []
    for a in range(w + 1):
        for b in range(a + 1):
            for top in (False, True):
                if not _valid_top(a + b, top, w):
                    continue
                charges = ("up", "down") if n - 2 in (a, b) else (None,)
                out.extend(AdjointRYD(n, (a, b), top, ch) for ch in charges)
    return out
