"""Permutations with restricted descents, codes, words and signed permutations.

Permutations are one-line tuples of 1..n.  Signed permutations store barred
entries as negative integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .roots import FlagShape

DEFAULT_MAX_N = 9

Perm = tuple[int, ...]
Code = tuple[int, ...]
Word = tuple[int, ...]


class EnumerationBoundError(ValueError):
    pass


def _check_bound(n: int, max_n: int | None) -> None:
    bound = DEFAULT_MAX_N if max_n is None else max_n
    if n > bound:
        raise EnumerationBoundError(f"n={n} exceeds the enumeration bound {bound}")


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def descents(w: Perm) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def has_descents_in(w: Perm, shape: FlagShape) -> bool:
    return len(w) == shape.n and is_permutation(w) and set(descents(w)) <= set(shape.k)


def length(w: Perm) -> int:
    return sum(code_of(w))


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, x in enumerate(w, 1):
        inv[x - 1] = i
    return tuple(inv)


def code_of(w: Perm) -> Code:
    """c_i = #{j > i : w(i) > w(j)} for i < n (the last entry is dropped)."""
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[i] > w[j]) for i in range(n - 1))


def in_code_set(c: Code, shape: FlagShape) -> bool:
    """Membership in C_k: c_j <= n-j, descents of c only across interval breaks."""
    n = shape.n
    c = tuple(c) + (0,) * (n - len(c))
    if len(c) != n or any(x < 0 for x in c):
        return False
    if any(c[j - 1] > n - j for j in range(1, n + 1)):
        return False
    return all(
        c[j - 1] <= c[j] or shape.interval_of(j) != shape.interval_of(j + 1) for j in range(1, n)
    )


def perm_from_any_code(c: Sequence[int], n: int | None = None) -> Perm:
    """Decode a Lehmer code into the smallest permutation carrying it (or S_n)."""
    c = list(c)
    m = max([len(c), 1] + [i + 1 + x for i, x in enumerate(c)])
    if n is not None:
        if n < m:
            raise ValueError(f"code {tuple(c)} does not fit in S_{n}")
        m = n
    c += [0] * (m - len(c))
    remaining = list(range(1, m + 1))
    out = []
    for x in c:
        if x >= len(remaining):
            raise ValueError(f"invalid code {tuple(c)}")
        out.append(remaining.pop(x))
    return tuple(out)


def perm_from_code(c: Code, shape: FlagShape) -> Perm:
    if not in_code_set(c, shape):
        raise ValueError(f"code {tuple(c)} is not in C_k for {shape}")
    return perm_from_any_code(c, shape.n)


def is_word(tau: Word, shape: FlagShape) -> bool:
    return len(tau) == shape.n and all(tau.count(i + 1) == r for i, r in enumerate(shape.sizes))


def shape_of_word(tau: Word) -> FlagShape:
    d = max(tau)
    counts = [tau.count(i) for i in range(1, d + 1)]
    if any(x == 0 for x in counts):
        raise ValueError(f"word {tau} skips a letter")
    return FlagShape(len(tau), tuple(itertools.accumulate(counts))[:-1])


def word_to_perm(tau: Word) -> Perm:
    """List the positions of the 1s, then of the 2s, and so on."""
    d = max(tau, default=0)
    return tuple(p for letter in range(1, d + 1) for p, x in enumerate(tau, 1) if x == letter)


def perm_to_word(w: Perm, shape: FlagShape) -> Word:
    tau = [0] * shape.n
    for i in range(1, shape.d + 1):
        for pos in shape.interval(i):
            tau[w[pos - 1] - 1] = i
    return tuple(tau)


def delete_letters(tau: Word, i: int, j: int) -> Word:
    if not i < j:
        raise ValueError("need i < j")
    return tuple(x for x in tau if x in (i, j))


def standardize(seq: Sequence[int]) -> Perm:
    ranks = {x: r for r, x in enumerate(sorted(seq), 1)}
    return tuple(ranks[x] for x in seq)


def flatten(w: Perm, shape: FlagShape, i: int, j: int) -> Perm:
    """Keep the entries in positions I_i and I_j, then standardize."""
    if not i < j:
        raise ValueError("need i < j")
    keep = list(shape.interval(i)) + list(shape.interval(j))
    return standardize([w[p - 1] for p in keep])


def enumerate_cells(shape: FlagShape, max_n: int | None = None) -> Iterator[Perm]:
    """All of S_n^k in lexicographic order of one-line notation."""
    _check_bound(shape.n, max_n)
    sizes = shape.sizes

    def rec(avail: tuple[int, ...], idx: int) -> Iterator[tuple[int, ...]]:
        if idx == len(sizes):
            yield ()
            return
        for block in itertools.combinations(avail, sizes[idx]):
            rest = tuple(x for x in avail if x not in block)
            for tail in rec(rest, idx + 1):
                yield block + tail

    cells = list(rec(tuple(range(1, shape.n + 1)), 0))
    yield from sorted(cells)


def all_shapes(n: int) -> Iterator[FlagShape]:
    for mask in range(1 << (n - 1)):
        yield FlagShape(n, tuple(i for i in range(1, n) if mask >> (i - 1) & 1))


@dataclass(frozen=True)
class SignedPerm:
    """A minimal coset representative for OG(k, 2n+1) (family B) or OG(k, 2n) (D).

    ``entries`` is the full signed one-line sequence; negative means barred.
    The block decomposition (Y, Z, V) is derived.
    """

    family: str
    n: int
    k: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.family not in ("B", "D"):
            raise ValueError("family must be 'B' or 'D'")
        if not 1 <= self.k < self.n:
            raise ValueError("need 1 <= k < n")
        if sorted(abs(x) for x in self.entries) != list(range(1, self.n + 1)):
            raise ValueError(f"{self.entries} is not a signed permutation of [1, {self.n}]")
        if not self._normal_form():
            raise ValueError(f"{self.entries} is not in normal form for k={self.k}")

    def _normal_form(self) -> bool:
        head = self.entries[: self.k]
        tail = self.entries[self.k:]
        r = sum(1 for x in head if x < 0)
        ys, zs = head[: self.k - r], head[self.k - r:]
        if any(x < 0 for x in ys) or any(x > 0 for x in zs):
            return False
        if list(ys) != sorted(ys) or [abs(z) for z in zs] != sorted((abs(z) for z in zs), reverse=True):
            return False
        body = [abs(x) for x in tail]
        if body != sorted(body):
            return False
        if self.family == "B":
            return all(x > 0 for x in tail)
        if any(x < 0 for x in tail[:-1]):
            return False
        return sum(1 for x in self.entries if x < 0) % 2 == 0

    def value(self, position: int) -> int:
        """|w(a)|: the absolute value of the entry at a 1-indexed position."""
        return abs(self.entries[position - 1])

    def is_barred(self, position: int) -> bool:
        return self.entries[position - 1] < 0

    @cached_property
    def r(self) -> int:
        return sum(1 for x in self.entries[: self.k] if x < 0)

    @cached_property
    def Y(self) -> tuple[int, ...]:
        """y_1 < ... < y_{k-r}."""
        return self.entries[: self.k - self.r]

    @cached_property
    def Z(self) -> tuple[int, ...]:
        """z_1 < ... < z_r; z_i sits at position k + 1 - i."""
        return tuple(sorted(abs(x) for x in self.entries[self.k - self.r: self.k]))

    @cached_property
    def V(self) -> tuple[int, ...]:
        """v_1 < ... < v_{n-k} (absolute values)."""
        return tuple(abs(x) for x in self.entries[self.k:])

    @property
    def perm_type(self) -> int | None:
        """1 (type I) or 2 (type II) in family D; None in family B."""
        if self.family == "B":
            return None
        return 2 if self.entries[-1] < 0 else 1

    @classmethod
    def from_blocks(cls, family: str, n: int, k: int, Y, Z, V, hat_barred: bool = False) -> "SignedPerm":
        zs = tuple(-z for z in sorted(Z, reverse=True))
        tail = list(sorted(V))
        if hat_barred:
            tail[-1] = -tail[-1]
        return cls(family, n, k, tuple(sorted(Y)) + zs + tuple(tail))


def enumerate_signed(family: str, n: int, k: int, max_n: int | None = None) -> Iterator[SignedPerm]:
    """All minimal coset representatives, ordered by (r, Z, Y)."""
    _check_bound(n, max_n)
    values = tuple(range(1, n + 1))
    for r in range(k + 1):
        for Z in itertools.combinations(values, r):
            rest = tuple(x for x in values if x not in Z)
            for Y in itertools.combinations(rest, k - r):
                V = tuple(x for x in rest if x not in Y)
                if family == "B":
                    yield SignedPerm.from_blocks("B", n, k, Y, Z, V)
                else:
                    yield SignedPerm.from_blocks("D", n, k, Y, Z, V, hat_barred=r % 2 == 1)
