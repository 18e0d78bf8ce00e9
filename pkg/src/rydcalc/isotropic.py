"""Index translations for non-maximal odd and even orthogonal Grassmannians.

Family B is OG(k, 2n+1), indexed by (n-k)-strict partitions P(n-k, n).
Family D is OG(k, 2n), indexed by typed (n-k)-strict partitions P~(n-k, n).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .partitions import Partition, conjugate, fits, is_q_strict, pad, partitions_in_box
from .ryd import IsotropicRYD, enumerate_isotropic_diagrams, ryd_from_signed_perm
from .weyl import SignedPerm

__all__ = [
    "TypedStrictPartition",
    "PRShape",
    "TShape",
    "f_k",
    "F_k",
    "f_k_inverse",
    "F_k_inverse",
    "translate",
    "translate_inverse",
    "signed_perm_of_gamma",
    "pr_shape_of",
    "t_shape_of",
    "gamma_of_signed_perm",
    "gamma_via_shape",
    "strict_index_set",
    "inverse_by_search",
]

MARKER_OF_CHARGE = {None: 0, "up": 1, "down": 2}
CHARGE_OF_MARKER = {0: None, 1: "up", 2: "down"}


def _box_width(family: str, n: int, k: int) -> int:
    return 2 * n - k if family == "B" else 2 * n - 1 - k


@dataclass(frozen=True)
class TypedStrictPartition:
    """gamma in P(n-k, n) (family B, marker 0) or (gamma; marker) in P~(n-k, n)."""

    family: str
    n: int
    k: int
    gamma: Partition
    marker: int = 0

    def __post_init__(self) -> None:
        if self.family not in ("B", "D"):
            raise ValueError("family must be 'B' or 'D'")
        if not 1 <= self.k < self.n:
            raise ValueError("need 1 <= k < n")
        g = pad(self.gamma, self.k)
        object.__setattr__(self, "gamma", g)
        q = self.n - self.k
        if not fits(g, self.k, _box_width(self.family, self.n, self.k)):
            raise ValueError(f"{g} does not fit the {self.k}-row box")
        if not is_q_strict(g, q):
            raise ValueError(f"{g} is not {q}-strict")
        if self.family == "B":
            if self.marker:
                raise ValueError("family B carries no marker")
        elif q in g:
            if self.marker not in (1, 2):
                raise ValueError(f"a part equal to {q} requires marker 1 or 2")
        elif self.marker:
            raise ValueError(f"marker is only allowed when a part equals {q}")

    @property
    def size(self) -> int:
        return sum(self.gamma)


@dataclass(frozen=True)
class PRShape:
    """A pair of strict partitions indexing a Schubert class of OG(k, 2n+1)."""

    n: int
    k: int
    alpha_top: Partition
    alpha_bottom: Partition

    def __post_init__(self) -> None:
        q = self.n - self.k
        top, bottom = pad(self.alpha_top, q), pad(self.alpha_bottom, self.k)
        object.__setattr__(self, "alpha_top", top)
        object.__setattr__(self, "alpha_bottom", bottom)
        if not (fits(top, q, self.n) and fits(bottom, self.k, self.n)):
            raise ValueError("PR shape does not fit its boxes")
        if not (is_q_strict(top, 0) and is_q_strict(bottom, 0)):
            raise ValueError("PR shape parts must be strict")
        if top[-1] < sum(1 for x in bottom if x) + 1:
            raise ValueError("last top part must exceed the bottom length")

    def reduced_top(self) -> Partition:
        """alpha_top minus the staircase (n-k, ..., 1), checked to be a partition."""
        q = self.n - self.k
        out = tuple(a - (q - i) for i, a in enumerate(self.alpha_top))
        if not fits(out, q, self.k):
            raise ValueError(f"reduced top {out} is not a partition in {q}x{self.k}")
        return out

    def gamma(self) -> Partition:
        return tuple(a + b for a, b in zip(conjugate(self.reduced_top(), self.k), self.alpha_bottom))


@dataclass(frozen=True)
class TShape:
    """A pair of partitions (with a marker when two permutations share it) for OG(k, 2n)."""

    n: int
    k: int
    alpha_top: Partition
    alpha_bottom: Partition
    marker: int | None = None

    def __post_init__(self) -> None:
        q = self.n - self.k
        top, bottom = pad(self.alpha_top, q), pad(self.alpha_bottom, self.k)
        object.__setattr__(self, "alpha_top", top)
        object.__setattr__(self, "alpha_bottom", bottom)
        if not (fits(top, q, self.k) and fits(bottom, self.k, self.n - 1)):
            raise ValueError("T shape does not fit its boxes")
        if not is_q_strict(bottom, 0):
            raise ValueError("bottom of a T shape must be strict")
        if top[-1] < sum(1 for x in bottom if x):
            raise ValueError("last top part must be at least the bottom length")
        if self.marker not in (None, 1, 2):
            raise ValueError("marker must be None, 1 or 2")

    def gamma(self) -> Partition:
        return tuple(a + b for a, b in zip(conjugate(self.alpha_top, self.k), self.alpha_bottom))


def _translate(ryd: IsotropicRYD, family: str) -> TypedStrictPartition:
    if ryd.family != family:
        raise ValueError(f"expected a family {family} diagram")
    gamma = tuple(a + b for a, b in zip(ryd.base, ryd.top))
    return TypedStrictPartition(family, ryd.n, ryd.k, gamma, MARKER_OF_CHARGE[ryd.charge])


def f_k(ryd: IsotropicRYD) -> TypedStrictPartition:
    """Row sums base + top, for OG(k, 2n+1)."""
    return _translate(ryd, "B")


def F_k(ryd: IsotropicRYD) -> TypedStrictPartition:
    """Row sums base + top, with the charge becoming the marker, for OG(k, 2n)."""
    return _translate(ryd, "D")


def translate(ryd: IsotropicRYD) -> TypedStrictPartition:
    return _translate(ryd, ryd.family)


def signed_perm_of_gamma(g: TypedStrictPartition) -> SignedPerm:
    """Rebuild the minimal coset representative indexed by gamma.

    Rows with gamma_i above n-k are Z-rows and give z_i directly; the other
    rows prescribe how many V-values lie below each y, which places Y and V
    inside the remaining values.
    """
    n, k, q, gamma = g.n, g.k, g.n - g.k, g.gamma
    shift = n + 1 if g.family == "B" else n
    r = sum(1 for x in gamma if x > q)
    Z = [q + shift - gamma[i] for i in range(r)]
    if g.family == "D" and g.marker:
        # the hat entry is barred iff r is odd; a part n-k may come from z = n
        if (r % 2 == 1) != (g.marker == 2):
            Z.append(n)
            r += 1
    if len(set(Z)) != len(Z) or not all(1 <= z <= n for z in Z):
        raise ValueError(f"{gamma} does not index a Schubert class")
    rest = [x for x in range(1, n + 1) if x not in Z]
    counts = [gamma[k - j] for j in range(1, k - r + 1)]
    Y = [rest[j + c] for j, c in enumerate(counts)]
    V = [x for x in rest if x not in Y]
    w = SignedPerm.from_blocks(g.family, n, k, Y, Z, V, hat_barred=g.family == "D" and r % 2 == 1)
    if gamma_of_signed_perm(w) != g:
        raise ValueError(f"{gamma} does not index a Schubert class")
    return w


def f_k_inverse(g: TypedStrictPartition) -> IsotropicRYD:
    if g.family != "B":
        raise ValueError("f_k_inverse expects family B")
    return ryd_from_signed_perm(signed_perm_of_gamma(g))


def F_k_inverse(g: TypedStrictPartition) -> IsotropicRYD:
    if g.family != "D":
        raise ValueError("F_k_inverse expects family D")
    return ryd_from_signed_perm(signed_perm_of_gamma(g))


def translate_inverse(g: TypedStrictPartition) -> IsotropicRYD:
    return ryd_from_signed_perm(signed_perm_of_gamma(g))


@lru_cache(maxsize=None)
def _search_table(family: str, n: int, k: int) -> dict:
    return {translate(r): r for r in enumerate_isotropic_diagrams(family, n, k)}


def inverse_by_search(g: TypedStrictPartition) -> IsotropicRYD:
    """Inverse translation by enumerating all support-valid diagrams."""
    try:
        return _search_table(g.family, g.n, g.k)[g]
    except KeyError:
        raise ValueError(f"{g} is not in the image") from None


def pr_shape_of(w: SignedPerm) -> PRShape:
    if w.family != "B":
        raise ValueError("PR shapes index family B")
    n = w.n
    bottom = tuple(sorted((n + 1 - z for z in w.Z), reverse=True))
    top = tuple(n + 1 - v + sum(1 for z in w.Z if z < v) for v in w.V)
    return PRShape(n, w.k, top, bottom)


def t_shape_of(w: SignedPerm) -> TShape:
    if w.family != "D":
        raise ValueError("T shapes index family D")
    n, k = w.n, w.k
    top = tuple(k - v + i + sum(1 for z in w.Z if z < v) for i, v in enumerate(w.V, 1))
    bottom = tuple(n - z for z in w.Z)
    marker = w.perm_type if w.V[-1] != n else None
    return TShape(n, k, top, bottom, marker)


def gamma_of_signed_perm(w: SignedPerm) -> TypedStrictPartition:
    """gamma read directly from the blocks (Y, Z, V) of a signed permutation."""
    n, k, q = w.n, w.k, w.n - w.k
    shift = n + 1 if w.family == "B" else n
    gamma = []
    for i in range(1, k + 1):
        if i <= w.r:
            gamma.append(q + shift - w.Z[i - 1])
        else:
            y = w.value(k + 1 - i)
            gamma.append(sum(1 for v in w.V if v < y))
    marker = 0
    if w.family == "D" and q in gamma:
        marker = w.perm_type
    return TypedStrictPartition(w.family, n, k, tuple(gamma), marker)


def gamma_via_shape(w: SignedPerm) -> TypedStrictPartition:
    """gamma by way of the PR shape (B) or T shape (D): conjugated top plus bottom."""
    if w.family == "B":
        return TypedStrictPartition("B", w.n, w.k, pr_shape_of(w).gamma())
    t = t_shape_of(w)
    gamma = t.gamma()
    return TypedStrictPartition("D", w.n, w.k, gamma, t.marker if (w.n - w.k) in gamma else 0)


def strict_index_set(family: str, n: int, k: int) -> Iterator[TypedStrictPartition]:
    """All of P(n-k, n) (family B) or P~(n-k, n) (family D)."""
    q = n - k
    for g in partitions_in_box(k, _box_width(family, n, k)):
        if not is_q_strict(g, q):
            continue
        markers = (1, 2) if family == "D" and q in g else (0,)
        for m in markers:
            yield TypedStrictPartition(family, n, k, g, m)
