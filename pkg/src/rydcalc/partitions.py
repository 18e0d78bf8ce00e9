"""Small helpers for integer partitions stored as fixed-length tuples."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

Partition = tuple[int, ...]


def pad(p: tuple[int, ...], length: int) -> Partition:
    p = tuple(p)
    if len(p) > length:
        if any(p[length:]):
            raise ValueError(f"partition {p} has more than {length} nonzero rows")
        return p[:length]
    return p + (0,) * (length - len(p))


def is_partition(p: tuple[int, ...]) -> bool:
    return all(x >= 0 for x in p) and all(p[i] >= p[i + 1] for i in range(len(p) - 1))


def fits(p: Partition, rows: int, cols: int) -> bool:
    return is_partition(p) and not any(p[rows:]) and all(x <= cols for x in p)


def contains(outer: Partition, inner: Partition) -> bool:
    n = max(len(outer), len(inner))
    return all(a >= b for a, b in zip(pad(outer, n), pad(inner, n)))


def conjugate(p: Partition, length: int | None = None) -> Partition:
    """Conjugate by column counting, padded to ``length`` (default: largest part)."""
    width = max(p, default=0)
    cols = tuple(sum(1 for x in p if x > c) for c in range(width))
    return pad(cols, width if length is None else length)


@lru_cache(maxsize=None)
def partitions_in_box(rows: int, cols: int, size: int | None = None) -> tuple[Partition, ...]:
    """All partitions with at most ``rows`` parts each at most ``cols``.

    Results are padded to ``rows`` entries and listed in reverse-lex order.
    When ``size`` is given only partitions of that size are returned.
    """
    out: list[Partition] = []

    def rec(prefix: list[int], cap: int, remaining: int | None) -> None:
        if len(prefix) == rows:
            if remaining is None or remaining == 0:
                out.append(tuple(prefix))
            return
        top = cap if remaining is None else min(cap, remaining)
        for x in range(top, -1, -1):
            if remaining is not None and x * (rows - len(prefix)) < remaining:
                break
            prefix.append(x)
            rec(prefix, x, None if remaining is None else remaining - x)
            prefix.pop()

    rec([], cols, size)
    return tuple(out)


def strict_partitions_in_staircase(k: int) -> Iterator[Partition]:
    """Strict partitions inside the staircase (k-1, ..., 1, 0), padded to length k."""

    def rec(prefix: list[int]) -> Iterator[Partition]:
        i = len(prefix)
        if i == k:
            yield tuple(prefix)
            return
        bound = k - 1 - i
        if prefix and prefix[-1] > 0:
            bound = min(bound, prefix[-1] - 1)
        elif prefix:
            bound = 0
        for x in range(bound, -1, -1):
            prefix.append(x)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def is_q_strict(p: Partition, q: int) -> bool:
    """True iff ``p`` is strictly decreasing wherever a part exceeds ``q``."""
    return all(p[i] > p[i + 1] for i in range(len(p) - 1) if p[i] > q)
