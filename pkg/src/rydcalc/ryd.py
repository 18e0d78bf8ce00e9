"""Root-theoretic Young diagrams for partial flags and isotropic Grassmannians."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .partitions import Partition, fits, pad, partitions_in_box, strict_partitions_in_staircase
from .roots import BDRoot, FlagShape, TypeARoot, lambda_k
from .weyl import Code, Perm, SignedPerm, has_descents_in, in_code_set, perm_from_code

__all__ = [
    "FlagRYD",
    "IsotropicRYD",
    "ryd_from_perm",
    "perm_from_ryd",
    "ryd_from_roots",
    "validate_k_diagram",
    "hook_condition_holds",
    "hook",
    "diagram_from_code",
    "coloring_order",
    "enumerate_k_diagrams",
    "ryd_from_signed_perm",
    "validate_support",
    "isotropic_roots",
    "signed_inversion_set",
    "enumerate_isotropic_diagrams",
]


# ---------------------------------------------------------------- type A


@dataclass(frozen=True)
class FlagRYD:
    """Per-region partitions; row t of region (i, j) sits at a = k_i + 1 - t."""

    shape: FlagShape
    parts: tuple[tuple[tuple[int, int], Partition], ...]

    def __post_init__(self) -> None:
        given = dict(self.parts)
        keys = self.shape.region_keys()
        if set(given) - set(keys):
            raise ValueError(f"unknown regions {sorted(set(given) - set(keys))}")
        sizes = self.shape.sizes
        norm = []
        for i, j in keys:
            p = pad(given.get((i, j), ()), sizes[i - 1])
            if not fits(p, sizes[i - 1], sizes[j - 1]):
                raise ValueError(f"region {(i, j)}: {p} does not fit {sizes[i - 1]}x{sizes[j - 1]}")
            norm.append(((i, j), p))
        object.__setattr__(self, "parts", tuple(norm))

    @classmethod
    def from_mapping(cls, shape: FlagShape, parts: Mapping[tuple[int, int], Partition]) -> "FlagRYD":
        return cls(shape, tuple(parts.items()))

    def part(self, i: int, j: int) -> Partition:
        return dict(self.parts)[(i, j)]

    def degrees(self) -> tuple[int, ...]:
        return tuple(sum(p) for _, p in self.parts)

    def roots(self) -> frozenset[TypeARoot]:
        out = set()
        for (i, j), p in self.parts:
            top_a = self.shape.bounds[i]
            first_b = self.shape.bounds[j - 1] + 1
            for t, row in enumerate(p, 1):
                out.update(TypeARoot(top_a + 1 - t, first_b + s) for s in range(row))
        return frozenset(out)

    def is_valid(self) -> bool:
        return validate_k_diagram(dict(self.parts), self.shape)


def ryd_from_perm(w: Perm, shape: FlagShape) -> FlagRYD:
    if not has_descents_in(w, shape):
        raise ValueError(f"{w} is not in S_n^k for {shape}")
    parts = {}
    for i, j in shape.region_keys():
        rows = []
        for a in reversed(shape.interval(i)):
            rows.append(sum(1 for b in shape.interval(j) if w[a - 1] > w[b - 1]))
        parts[(i, j)] = tuple(rows)
    return FlagRYD.from_mapping(shape, parts)


def ryd_from_roots(s: Iterable[TypeARoot], shape: FlagShape) -> FlagRYD:
    """Read region partitions off a root set (the set must be a union of region ideals)."""
    s = set(s)
    parts = {}
    for i, j in shape.region_keys():
        rows = []
        for a in reversed(shape.interval(i)):
            rows.append(sum(1 for b in shape.interval(j) if TypeARoot(a, b) in s))
        parts[(i, j)] = tuple(rows)
    ryd = FlagRYD.from_mapping(shape, parts)
    if ryd.roots() != frozenset(s):
        raise ValueError("root set is not a union of region order ideals")
    return ryd


def hook(a: int, b: int) -> list[TypeARoot]:
    """Roots diagonally south-east and south-west of (a, b)."""
    return [TypeARoot(a, l) for l in range(a + 1, b)] + [TypeARoot(j, b) for j in range(a + 1, b)]


def hook_condition_holds(s: Iterable[TypeARoot], n: int) -> bool:
    s = set(s)
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            half = b - a - 1
            black = sum(1 for x in hook(a, b) if x in s)
            if black > half and TypeARoot(a, b) not in s:
                return False
            if 2 * half - black > half and TypeARoot(a, b) in s:
                return False
    return True


def validate_k_diagram(parts: Mapping[tuple[int, int], Partition], shape: FlagShape) -> bool:
    """Partitions in every region plus the hook condition on the whole root set."""
    try:
        ryd = FlagRYD.from_mapping(shape, parts)
    except ValueError:
        return False
    if any(any(p[t] < p[t + 1] for t in range(len(p) - 1)) for _, p in ryd.parts):
        return False
    return hook_condition_holds(ryd.roots(), shape.n)


def _h_vector(s: Iterable[TypeARoot], n: int) -> Code:
    counts = [0] * (n - 1)
    for r in s:
        counts[r.a - 1] += 1
    return tuple(counts)


def perm_from_ryd(ryd: FlagRYD) -> Perm:
    """RYD -> h-vector -> code -> permutation."""
    if not ryd.is_valid():
        raise ValueError("diagram fails the hook condition")
    n = ryd.shape.n
    c = _h_vector(ryd.roots(), n) + (0,)
    return perm_from_code(c, ryd.shape)


def coloring_order(c: Code, n: int | None = None) -> list[TypeARoot]:
    """Roots coloured black, in order, by the greedy reconstruction from a code.

    Rows are filled from j = n-1 down to 1.  In row j each new black root is
    the highest uncoloured (j, b) whose hook is exactly half black, or the
    lowest uncoloured (j, b) when there is none.
    """
    n = len(c) + 1 if n is None else n
    c = tuple(c)
    black: set[TypeARoot] = set()
    order: list[TypeARoot] = []
    for j in range(n - 1, 0, -1):
        h = c[j - 1] if j - 1 < len(c) else 0
        if h > n - j:
            raise ValueError(f"c_{j} = {h} exceeds n - j = {n - j}")
        for _ in range(h):
            uncolored = [b for b in range(j + 1, n + 1) if TypeARoot(j, b) not in black]
            balanced = [
                b for b in uncolored
                if 2 * sum(1 for x in hook(j, b) if x in black) == len(hook(j, b))
            ]
            b = max(balanced) if balanced else min(uncolored)
            black.add(TypeARoot(j, b))
            order.append(TypeARoot(j, b))
    return order


def diagram_from_code(c: Code, n: int | None = None) -> frozenset[TypeARoot]:
    return frozenset(coloring_order(c, n))


def enumerate_k_diagrams(shape: FlagShape) -> Iterator[frozenset[TypeARoot]]:
    """All hook-valid unions of region ideals, by backtracking over root heights.

    Independent of permutations: roots are decided in order of height, so the
    hook of each root is settled before the root itself.
    """
    n = shape.n
    order = [TypeARoot(a, a + h) for h in range(1, n) for a in range(1, n - h + 1)]
    region_of = {r: (shape.interval_of(r.a), shape.interval_of(r.b)) for r in order}

    def rec(idx: int, s: set[TypeARoot]) -> Iterator[frozenset[TypeARoot]]:
        if idx == len(order):
            yield frozenset(s)
            return
        r = order[idx]
        half = r.b - r.a - 1
        black = sum(1 for x in hook(r.a, r.b) if x in s)
        forced_in = black > half
        forced_out = 2 * half - black > half
        i, j = region_of[r]
        options = []
        if not forced_in:
            options.append(False)
        if not forced_out and i != j:
            # ideal: the roots just below (a+1, b) and (a, b-1) in the same region
            below = [TypeARoot(r.a + 1, r.b), TypeARoot(r.a, r.b - 1)]
            if all(x in s for x in below if x.a < x.b and region_of.get(x) == (i, j)):
                options.append(True)
        for take in options:
            if take:
                s.add(r)
            yield from rec(idx + 1, s)
            if take:
                s.discard(r)

    yield from rec(0, set())


# ---------------------------------------------------------------- types B, D

CHARGES = ("up", "down")


@dataclass(frozen=True)
class IsotropicRYD:
    """(base | top) with an optional charge; base row i sits at position k + 1 - i."""

    family: str
    n: int
    k: int
    base: Partition
    top: Partition
    charge: str | None = None

    def __post_init__(self) -> None:
        if self.family not in ("B", "D"):
            raise ValueError("family must be 'B' or 'D'")
        if not 1 <= self.k < self.n:
            raise ValueError("need 1 <= k < n")
        object.__setattr__(self, "base", pad(self.base, self.k))
        object.__setattr__(self, "top", pad(self.top, self.k))
        if not fits(self.base, self.k, self.width):
            raise ValueError(f"base {self.base} does not fit {self.k}x{self.width}")
        if not all(t <= self.k - i for i, t in enumerate(self.top, 1)):
            raise ValueError(f"top {self.top} exceeds the staircase")
        if any(self.top[i] <= self.top[i + 1] and self.top[i] > 0 for i in range(self.k - 1)):
            raise ValueError(f"top {self.top} is not strict")
        needs_charge = self.family == "D" and (self.n - self.k) in self.base
        if needs_charge and self.charge not in CHARGES:
            raise ValueError("a base row of length n-k requires a charge 'up' or 'down'")
        if not needs_charge and self.charge is not None:
            raise ValueError("charge is only allowed when a base row has length n-k")

    @property
    def width(self) -> int:
        return 2 * (self.n - self.k) + (1 if self.family == "B" else 0)

    @property
    def threshold(self) -> int:
        return self.width

    def degree(self) -> int:
        return sum(self.base) + sum(self.top)


def ryd_from_signed_perm(w: SignedPerm) -> IsotropicRYD:
    n, k = w.n, w.k
    shift = n + 1 - k if w.family == "B" else n - k
    Zset = set(w.Z)
    base, top = [], []
    for i in range(1, k + 1):
        pos = k + 1 - i
        x = w.value(pos)
        if x in Zset:
            base.append(shift + sum(1 for v in w.V if x < v))
            top.append(sum(1 for z in w.Z if x < z) + sum(1 for y in w.Y if x < y))
        else:
            base.append(sum(1 for v in w.V if x > v))
            top.append(0)
    charge = None
    if w.family == "D" and (n - k) in base:
        charge = "up" if w.perm_type == 1 else "down"
    return IsotropicRYD(w.family, n, k, tuple(base), tuple(top), charge)


def _rank(x: int, n: int) -> int:
    """Position in 1 < 2 < ... < n < n-bar < ... < 1-bar."""
    return x if x > 0 else 2 * n + 1 + x


def signed_inversion_set(w: SignedPerm) -> frozenset[BDRoot]:
    """Inverted positive roots of w, read off the signed one-line notation."""
    n, s = w.n, w.entries
    out = set()
    for a in range(1, n + 1):
        if w.family == "B" and s[a - 1] < 0:
            out.add(BDRoot("short", a))
        for c in range(a + 1, n + 1):
            if _rank(s[a - 1], n) > _rank(s[c - 1], n):
                out.add(BDRoot("minus", a, c))
            if _rank(s[a - 1], n) > _rank(-s[c - 1], n):
                out.add(BDRoot("plus", a, c))
    return frozenset(out)


def _base_row_roots(ryd: IsotropicRYD, i: int) -> list[BDRoot]:
    row = lambda_k(ryd.family, ryd.n, ryd.k).base_rows[i - 1]
    m = ryd.base[i - 1]
    if ryd.family == "B":
        return list(row[:m])
    tail = ryd.n - ryd.k - 1
    lower, minus_n, plus_n, upper = row[:tail], row[tail], row[tail + 1], row[tail + 2:]
    if m <= tail:
        return list(lower[:m])
    if m == tail + 1:
        return list(lower) + [minus_n if ryd.charge == "up" else plus_n]
    return list(lower) + [minus_n, plus_n] + list(upper[: m - tail - 2])


def isotropic_roots(ryd: IsotropicRYD) -> frozenset[BDRoot]:
    """The root set drawn by an isotropic RYD inside Lambda_k."""
    lam = lambda_k(ryd.family, ryd.n, ryd.k)
    out = set()
    for i in range(1, ryd.k + 1):
        out.update(_base_row_roots(ryd, i))
        out.update(lam.top_columns[i - 1][: ryd.top[i - 1]])
    return frozenset(out)


def validate_support(ryd: IsotropicRYD) -> bool:
    """Top root (a, b, +) is used when rows a, b exceed the threshold, unused below it."""
    k = ryd.k
    row_at = {k + 1 - i: ryd.base[i - 1] for i in range(1, k + 1)}
    used = {r for r in isotropic_roots(ryd) if r.kind == "plus" and r.b <= k}
    for b in range(2, k + 1):
        for a in range(1, b):
            total = row_at[a] + row_at[b]
            present = BDRoot("plus", a, b) in used
            if total > ryd.threshold and not present:
                return False
            if total < ryd.threshold and present:
                return False
    return True


def enumerate_isotropic_diagrams(family: str, n: int, k: int) -> Iterator[IsotropicRYD]:
    """All support-valid isotropic RYDs, listed without reference to signed permutations."""
    width = 2 * (n - k) + (1 if family == "B" else 0)
    for base in partitions_in_box(k, width):
        charges: tuple[str | None, ...] = (None,)
        if family == "D" and (n - k) in base:
            charges = CHARGES
        for top in strict_partitions_in_staircase(k):
            for charge in charges:
                ryd = IsotropicRYD(family, n, k, base, top, charge)
                if validate_support(ryd):
                    yield ryd
