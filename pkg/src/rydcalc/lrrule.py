"""Littlewood-Richardson numbers by the lattice-word rule.

An oracle independent of jeu de taquin: count semistandard fillings of
nu/lam with content mu whose reverse reading word is a lattice word.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import Partition, contains, pad


@lru_cache(maxsize=None)
def lr_lattice_word(lam: Partition, mu: Partition, nu: Partition) -> int:
    rows = max(len(lam), len(mu), len(nu))
    lam, mu, nu = (pad(p, rows) for p in (lam, mu, nu))
    if sum(nu) != sum(lam) + sum(mu) or not contains(nu, lam):
        return 0
    # boxes in reverse reading order: rows top to bottom, each right to left
    order = [(t, s) for t in range(rows) for s in range(nu[t] - 1, lam[t] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    used = [0] * rows

    def rec(i: int) -> int:
        if i == len(order):
            return 1
        t, s = order[i]
        total = 0
        for v in range(rows):
            if used[v] >= mu[v] or (v > 0 and used[v] >= used[v - 1]):
                continue
            right = filling.get((t, s + 1))
            if right is not None and v > right:
                continue
            above = filling.get((t - 1, s))
            if above is not None and v <= above:
                continue
            filling[(t, s)] = v
            used[v] += 1
            total += rec(i + 1)
            used[v] -= 1
            del filling[(t, s)]
        return total

    return rec(0)
