"""Positive-root posets of types A, B and D.

Roots are integer coordinate records.  The root order is generated by the
covering relation "y - x is a simple root", computed on integer vectors.

Conventions for types B and D (n >= 2):

* ``BDRoot("minus", a, b)`` is e_a - e_b and ``BDRoot("plus", a, b)`` is
  e_a + e_b, both with a < b;
* ``BDRoot("short", a)`` is e_a (type B only);
* simple roots are e_i - e_{i+1} for i < n, then e_n (B) or e_{n-1} + e_n (D).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

__all__ = [
    "FlagShape",
    "TypeARoot",
    "BDRoot",
    "FinitePoset",
    "LambdaK",
    "type_a_poset",
    "bd_poset",
    "regions",
    "covers",
    "lambda_k",
    "is_lower_order_ideal",
]


@dataclass(frozen=True)
class FlagShape:
    """The data (n; k_1 < ... < k_{d-1}) of a partial flag variety."""

    n: int
    k: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", tuple(self.k))
        if self.n < 1:
            raise ValueError("n must be positive")
        prev = 0
        for kk in self.k:
            if not prev < kk < self.n:
                raise ValueError(f"invalid flag shape: n={self.n}, k={self.k}")
            prev = kk

    @property
    def d(self) -> int:
        return len(self.k) + 1

    @property
    def bounds(self) -> tuple[int, ...]:
        return (0,) + self.k + (self.n,)

    @property
    def sizes(self) -> tuple[int, ...]:
        b = self.bounds
        return tuple(b[i + 1] - b[i] for i in range(self.d))

    def interval(self, i: int) -> range:
        """Positions of the 1-indexed interval I_i."""
        b = self.bounds
        return range(b[i - 1] + 1, b[i] + 1)

    def interval_of(self, position: int) -> int:
        for i in range(1, self.d + 1):
            if position <= self.bounds[i]:
                return i
        raise ValueError(f"position {position} outside [1, {self.n}]")

    def region_keys(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in range(1, self.d + 1) for j in range(i + 1, self.d + 1))


@dataclass(frozen=True, order=True)
class TypeARoot:
    a: int
    b: int

    def vector(self, n: int) -> tuple[int, ...]:
        v = [0] * n
        v[self.a - 1] += 1
        v[self.b - 1] -= 1
        return tuple(v)


@dataclass(frozen=True, order=True)
class BDRoot:
    kind: str
    a: int
    b: int = 0

    def __post_init__(self) -> None:
        if self.kind == "short":
            if self.b:
                raise ValueError("short roots carry a single index")
        elif self.kind in ("minus", "plus"):
            if not 0 < self.a < self.b:
                raise ValueError(f"expected a < b, got ({self.a}, {self.b})")
        else:
            raise ValueError(f"unknown root kind {self.kind!r}")

    def vector(self, n: int) -> tuple[int, ...]:
        v = [0] * n
        v[self.a - 1] += 1
        if self.kind == "minus":
            v[self.b - 1] -= 1
        elif self.kind == "plus":
            v[self.b - 1] += 1
        return tuple(v)

    def __str__(self) -> str:
        if self.kind == "short":
            return f"({self.a})"
        return f"({self.a},{self.b},{'-' if self.kind == 'minus' else '+'})"


@dataclass(frozen=True)
class IndexedPoset:
    """A poset relabelled by 0..N-1, for inner loops that should not hash roots."""

    elements: tuple
    index: Mapping[Hashable, int]
    up: tuple[tuple[int, ...], ...]
    above: tuple[tuple[int, ...], ...]
    below: tuple[tuple[int, ...], ...]
    by_element: tuple[int, ...]


class FinitePoset:
    """A finite poset given by its covering relation."""

    def __init__(self, elements: Iterable[Hashable], cover_pairs: Iterable[tuple[Hashable, Hashable]]):
        self.elements = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        up: dict[Hashable, list] = {x: [] for x in self.elements}
        down: dict[Hashable, list] = {x: [] for x in self.elements}
        for x, y in cover_pairs:
            up[x].append(y)
            down[y].append(x)
        self.up = {x: tuple(v) for x, v in up.items()}
        self.down = {x: tuple(v) for x, v in down.items()}

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def covers(self, x, y) -> bool:
        """True iff ``y`` covers ``x``."""
        return y in self.up.get(x, ())

    @cached_property
    def _above(self) -> Mapping[Hashable, frozenset]:
        memo: dict[Hashable, frozenset] = {}

        def above(x):
            if x not in memo:
                acc = {x}
                for y in self.up[x]:
                    acc |= above(y)
                memo[x] = frozenset(acc)
            return memo[x]

        for x in self.elements:
            above(x)
        return memo

    @cached_property
    def strictly_above(self) -> Mapping[Hashable, tuple]:
        return {x: tuple(y for y in self.elements if y != x and y in self._above[x]) for x in self.elements}

    def leq(self, x, y) -> bool:
        return y in self._above[x]

    @cached_property
    def indexed(self) -> "IndexedPoset":
        idx = self._index
        return IndexedPoset(
            self.elements,
            idx,
            tuple(tuple(idx[y] for y in self.up[x]) for x in self.elements),
            tuple(tuple(idx[y] for y in self.strictly_above[x]) for x in self.elements),
            tuple(tuple(idx[y] for y in self.elements if y != x and x in self._above[y]) for x in self.elements),
            tuple(sorted(range(len(self.elements)), key=lambda i: self.elements[i])),
        )

    def restrict(self, subset: Iterable[Hashable]) -> "FinitePoset":
        """Induced subposet on a convex subset (covers restricted)."""
        ks = set(subset)
        keep = [x for x in self.elements if x in ks]
        pairs = [(x, y) for x in keep for y in self.up[x] if y in ks]
        return FinitePoset(keep, pairs)


def _covering_pairs(roots: Sequence, n: int, simple: set[tuple[int, ...]]) -> Iterator[tuple]:
    vecs = {r: r.vector(n) for r in roots}
    by_vec = {v: r for r, v in vecs.items()}
    for x, vx in vecs.items():
        for s in simple:
            y = by_vec.get(tuple(p + q for p, q in zip(vx, s)))
            if y is not None:
                yield x, y


def _simple_roots(lie_type: str, n: int) -> list[tuple[int, ...]]:
    def e(*pairs):
        v = [0] * n
        for i, c in pairs:
            v[i - 1] += c
        return tuple(v)

    simple = [e((i, 1), (i + 1, -1)) for i in range(1, n)]
    if lie_type == "B":
        simple.append(e((n, 1)))
    elif lie_type == "D":
        simple.append(e((n - 1, 1), (n, 1)))
    return simple


@lru_cache(maxsize=None)
def type_a_poset(n: int) -> FinitePoset:
    """The positive roots of GL_n, ordered by the root order."""
    roots = [TypeARoot(a, b) for a in range(1, n) for b in range(a + 1, n + 1)]
    return FinitePoset(roots, _covering_pairs(roots, n, set(_simple_roots("A", n))))


@lru_cache(maxsize=None)
def bd_poset(lie_type: str, n: int) -> FinitePoset:
    """The positive roots of type B_n or D_n."""
    if lie_type not in ("B", "D"):
        raise ValueError("lie_type must be 'B' or 'D'")
    roots = [BDRoot(kind, a, b) for a in range(1, n) for b in range(a + 1, n + 1) for kind in ("minus", "plus")]
    if lie_type == "B":
        roots += [BDRoot("short", a) for a in range(1, n + 1)]
    return FinitePoset(roots, _covering_pairs(roots, n, set(_simple_roots(lie_type, n))))


def regions(shape: FlagShape) -> dict[tuple[int, int], frozenset[TypeARoot]]:
    """The regions I_i x I_j, keyed in lexicographic order of (i, j)."""
    return {
        (i, j): frozenset(TypeARoot(a, b) for a in shape.interval(i) for b in shape.interval(j))
        for i, j in shape.region_keys()
    }


def covers(x, y, poset: FinitePoset) -> bool:
    return poset.covers(x, y)


def is_lower_order_ideal(s: Iterable[Hashable], poset: FinitePoset) -> bool:
    """True iff ``s`` is downward closed inside ``poset``."""
    s = set(s)
    return all(x in s for y in s for x in poset.down[y])


@dataclass(frozen=True)
class LambdaK:
    """The roots above the k-th simple root, split into base and top regions.

    ``base_rows[i-1]`` is the base chain (B) or double-tailed diamond (D) that
    holds row i of the base partition; row i sits at position a = k + 1 - i.
    ``top_columns[i-1]`` lists the top roots (a, k+1-i, +) with a descending,
    i.e. bottom-up in the order.
    """

    lie_type: str
    n: int
    k: int
    base_rows: tuple[tuple[BDRoot, ...], ...]
    top_columns: tuple[tuple[BDRoot, ...], ...]

    @property
    def base_roots(self) -> frozenset[BDRoot]:
        return frozenset(r for row in self.base_rows for r in row)

    @property
    def top_roots(self) -> frozenset[BDRoot]:
        return frozenset(r for col in self.top_columns for r in col)

    def base_poset(self) -> FinitePoset:
        return bd_poset(self.lie_type, self.n).restrict(self.base_roots)

    def top_poset(self) -> FinitePoset:
        return bd_poset(self.lie_type, self.n).restrict(self.top_roots)


@lru_cache(maxsize=None)
def lambda_k(lie_type: str, n: int, k: int) -> LambdaK:
    """Base and top regions of the roots above beta_k.

    In type D with k = n - 1 this is the set of roots above beta_{n-1} or
    beta_n, which keeps the diamond description uniform.
    """
    if lie_type not in ("B", "D"):
        raise ValueError("lie_type must be 'B' or 'D'")
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    rows = []
    for i in range(1, k + 1):
        a = k + 1 - i
        low = [BDRoot("minus", a, c) for c in range(k + 1, n + 1)]
        high = [BDRoot("plus", a, c) for c in range(n, k, -1)]
        if lie_type == "B":
            rows.append(tuple(low) + (BDRoot("short", a),) + tuple(high))
        else:
            # chain order except for the incomparable pair (a,n,-), (a,n,+)
            rows.append(tuple(low) + tuple(high))
    cols = []
    for i in range(1, k + 1):
        b = k + 1 - i
        cols.append(tuple(BDRoot("plus", a, b) for a in range(b - 1, 0, -1)))
    return LambdaK(lie_type, n, k, tuple(rows), tuple(cols))
