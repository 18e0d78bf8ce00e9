"""Pieri rules for LG(2, 2n) and OG(2, 2n) in two-row (n-2)-strict indexing.

Boxes are (row, column) pairs, 1-indexed, in a 2 x W grid with W = 2n-2 for
LG and W = 2n-3 for OG.  Relatedness compares |c - center| + r; columns are
doubled so the half-integer OG center stays integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .isotropic import TypedStrictPartition, strict_index_set
from .partitions import is_q_strict

Box = tuple[int, int]
Shape2 = tuple[int, int]

__all__ = [
    "PieriGeometry",
    "PieriAnalysis",
    "related",
    "analyze",
    "arrow_relation",
    "count_N_LG",
    "count_N_OG",
    "components",
    "epsilon",
    "pieri_LG",
    "pieri_OG",
    "gamma_star",
    "is_index",
]


@dataclass(frozen=True)
class PieriGeometry:
    variant: str
    n: int

    def __post_init__(self) -> None:
        if self.variant not in ("LG", "OG"):
            raise ValueError("variant must be 'LG' or 'OG'")
        if self.n < (3 if self.variant == "LG" else 4):
            raise ValueError(f"n={self.n} is too small for {self.variant}(2, 2n)")

    @property
    def width(self) -> int:
        return 2 * self.n - 2 if self.variant == "LG" else 2 * self.n - 3

    @property
    def center2(self) -> int:
        """Twice the column about which relatedness is mirrored."""
        return 2 * (self.n - 1) if self.variant == "LG" else 2 * self.n - 3

    @property
    def threshold(self) -> int:
        """2n-3 for LG, 2n-4 for OG: the size at which the top root enters."""
        return self.width - 1

    @property
    def max_p(self) -> int:
        return self.width

    def key(self, box: Box) -> int:
        r, c = box
        return abs(2 * c - self.center2) + 2 * r

    def in_grid(self, shape: Shape2) -> bool:
        return len(shape) == 2 and self.width >= shape[0] >= shape[1] >= 0

    def index_family(self) -> str:
        return "B" if self.variant == "LG" else "D"


def related(x: Box, y: Box, g: PieriGeometry) -> bool:
    return g.key(x) == g.key(y)


def _boxes(shape: Shape2) -> set[Box]:
    return {(r, c) for r, row in enumerate(shape, 1) for c in range(1, row + 1)}


def gamma_star(gamma: Shape2, p: int) -> Shape2:
    return (gamma[0] + p + 1, gamma[1] - 1)


def components(boxes: Iterable[Box]) -> list[frozenset[Box]]:
    """Connected components, where boxes sharing a vertex are adjacent."""
    left = set(boxes)
    out = []
    while left:
        seed = min(left)
        comp, stack = {seed}, [seed]
        left.discard(seed)
        while stack:
            r, c = stack.pop()
            for dr in (-1, 0, 1):
                for dc in (-1, 0, 1):
                    y = (r + dr, c + dc)
                    if y in left:
                        left.discard(y)
                        comp.add(y)
                        stack.append(y)
        out.append(frozenset(comp))
    return sorted(out, key=min)


@dataclass(frozen=True)
class PieriAnalysis:
    """The bookkeeping behind a relation gamma -> delta."""

    geometry: PieriGeometry
    gamma: Shape2
    delta: Shape2
    added: frozenset[Box]
    removed: frozenset[Box]
    killed: frozenset[Box]
    killed_by_S: frozenset[Box]
    killed_by_T: frozenset[Box]

    @property
    def n(self) -> int:
        return self.geometry.n

    @cached_property
    def D(self) -> frozenset[Box]:
        """(delta \\ gamma)-boxes in columns n-1 and later."""
        return frozenset(b for b in self.added if b[1] >= self.n - 1)

    @property
    def D1(self) -> frozenset[Box]:
        return frozenset(b for b in self.D if b[0] == 1)

    @property
    def D2(self) -> frozenset[Box]:
        return frozenset(b for b in self.D if b[0] == 2)

    @cached_property
    def A(self) -> frozenset[Box]:
        return self.D - self.killed

    @cached_property
    def A_components(self) -> list[frozenset[Box]]:
        return components(self.A)

    @cached_property
    def D_components(self) -> list[frozenset[Box]]:
        return components(self.D)

    def bisected(self) -> bool:
        """Some component of D has a killed box with surviving boxes on both sides."""
        for comp in self.D_components:
            alive = [c for r, c in comp if (r, c) not in self.killed]
            for r, c in comp:
                if (r, c) in self.killed and any(x < c for x in alive) and any(x > c for x in alive):
                    return True
        return False


def analyze(gamma: Shape2, delta: Shape2, g: PieriGeometry) -> PieriAnalysis | None:
    """Return the relation data if gamma -> delta, else None.

    delta must arise from gamma by removing a vertical strip inside the first
    n-2 columns and then adding a horizontal strip; it suffices to test the
    largest intermediate shape, gamma intersect delta.
    """
    gamma, delta = tuple(gamma), tuple(delta)
    if not (g.in_grid(gamma) and g.in_grid(delta)):
        return None
    n = g.n
    gb, db = _boxes(gamma), _boxes(delta)
    removed = gb - db
    if any(c > n - 2 for _, c in removed) or any(gamma[r] - delta[r] > 1 for r in (0, 1)):
        return None
    if delta[1] > min(gamma[0], delta[0]):
        return None
    added = db - gb
    killed: set[Box] = set()
    by_S: set[Box] = set()
    by_T: set[Box] = set()
    # (1): gamma-boxes in the first n-2 columns with no delta-box below
    for r, c in gb:
        if c > n - 2 or (r == 1 and (2, c) in db):
            continue
        hits = [d for d in added if related((r, c), d, g)]
        if len(hits) > 1:
            return None
        killed.update(hits)
        (by_S if r == 1 else by_T).update(hits)
    # (2): removed boxes and the boxes above them
    rows = set()
    for r, c in removed:
        for x in [(r, c)] + ([(1, c)] if r == 2 else []):
            hits = [d for d in added if related(x, d, g)]
            if len(hits) != 1:
                return None
            rows.add(hits[0][0])
            killed.update(hits)
    if len(rows) > 1:
        return None
    return PieriAnalysis(
        g, gamma, delta, frozenset(added), frozenset(removed),
        frozenset(killed), frozenset(by_S), frozenset(by_T),
    )


def arrow_relation(gamma: Shape2, delta: Shape2, p: int, g: PieriGeometry) -> bool:
    if sum(delta) != sum(gamma) + p:
        return False
    return analyze(gamma, delta, g) is not None


def _require(gamma: Shape2, delta: Shape2, g: PieriGeometry) -> PieriAnalysis:
    a = analyze(gamma, delta, g)
    if a is None:
        raise ValueError(f"{gamma} -> {delta} does not hold")
    return a


def count_N_LG(gamma: Shape2, delta: Shape2, n: int) -> int:
    """Components of A that avoid column n-1."""
    a = _require(gamma, delta, PieriGeometry("LG", n))
    return sum(1 for comp in a.A_components if all(c != n - 1 for _, c in comp))


def count_N_OG(gamma: Shape2, delta: Shape2, p: int, n: int) -> int:
    """Components of A, one fewer when p > n-2 (never below zero)."""
    a = _require(gamma, delta, PieriGeometry("OG", n))
    count = len(a.A_components)
    if p > n - 2:
        count -= 1
    return max(count, 0)


def _g_statistic(gamma: Shape2, delta: Shape2, n: int) -> int:
    """How many of the first n-2 columns hold no (delta \\ gamma)-box."""
    added = _boxes(delta) - _boxes(gamma)
    return sum(1 for c in range(1, n - 1) if (1, c) not in added and (2, c) not in added)


def epsilon(gamma: TypedStrictPartition, delta: TypedStrictPartition, p: int, primed: bool = False) -> Fraction:
    """epsilon (or epsilon' when primed) for the OG Pieri rule."""
    n = gamma.n
    if p != n - 2:
        return Fraction(1)
    if count_N_OG(gamma.gamma, delta.gamma, p, n) > 0:
        return Fraction(1, 2)
    h = _g_statistic(gamma.gamma, delta.gamma, n) + max(gamma.marker, delta.marker)
    if primed:
        return Fraction(1 if h % 2 == 0 else 0)
    return Fraction(1 if h % 2 == 1 else 0)


def _check_index(x: TypedStrictPartition, family: str, n: int) -> None:
    if x.family != family or x.n != n or x.k != 2:
        raise ValueError(f"expected an index of {'LG' if family == 'B' else 'OG'}(2, {2 * n})")


def pieri_LG(p: int, gamma: TypedStrictPartition) -> dict[TypedStrictPartition, int]:
    """sigma_p . sigma_gamma in H*(LG(2, 2n)): sum of 2^N over gamma -> delta."""
    n = gamma.n
    _check_index(gamma, "B", n)
    g = PieriGeometry("LG", n)
    if not 1 <= p <= g.max_p:
        raise ValueError(f"p={p} outside [1, {g.max_p}]")
    out = {}
    for delta in strict_index_set("B", n, 2):
        if arrow_relation(gamma.gamma, delta.gamma, p, g):
            out[delta] = 2 ** count_N_LG(gamma.gamma, delta.gamma, n)
    return out


def pieri_OG(p: int, gamma: TypedStrictPartition, primed: bool = False) -> dict[TypedStrictPartition, int]:
    """sigma_p . sigma_gamma in H*(OG(2, 2n)); primed selects sigma'_{n-2}."""
    n = gamma.n
    _check_index(gamma, "D", n)
    g = PieriGeometry("OG", n)
    if not 1 <= p <= g.max_p:
        raise ValueError(f"p={p} outside [1, {g.max_p}]")
    if primed and p != n - 2:
        raise ValueError("the primed class exists only for p = n-2")
    out = {}
    for delta in strict_index_set("D", n, 2):
        if gamma.marker + delta.marker == 3:
            continue
        if not arrow_relation(gamma.gamma, delta.gamma, p, g):
            continue
        c = epsilon(gamma, delta, p, primed) * 2 ** count_N_OG(gamma.gamma, delta.gamma, p, n)
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {c} for {delta}")
        if c:
            out[delta] = int(c)
    return out


def is_index(shape: Shape2, g: PieriGeometry) -> bool:
    return g.in_grid(tuple(shape)) and is_q_strict(tuple(shape), g.n - 2)
