"""Jeu de taquin on rectangular region posets.

A labelling is a dict from poset elements to distinct positive integers.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Hashable, Iterable, Iterator, Mapping

from .partitions import Partition, contains, fits, pad
from .roots import FinitePoset, FlagShape, TypeARoot, regions, type_a_poset

Labelling = dict

__all__ = [
    "grid_poset",
    "grid_boxes",
    "standard_labellings",
    "jdt_rectify",
    "is_standard",
    "row_reading_labelling",
    "rectification_tally",
    "e_coeff",
    "lr_coeff",
]


@lru_cache(maxsize=None)
def grid_poset(rows: int, cols: int) -> FinitePoset:
    """Boxes (t, s) of an r x c rectangle; (t, s) <= (t', s') iff t <= t' and s <= s'."""
    boxes = [(t, s) for t in range(1, rows + 1) for s in range(1, cols + 1)]
    pairs = [((t, s), (t + 1, s)) for t, s in boxes if t < rows]
    pairs += [((t, s), (t, s + 1)) for t, s in boxes if s < cols]
    return FinitePoset(boxes, pairs)


def grid_boxes(p: Partition) -> frozenset[tuple[int, int]]:
    return frozenset((t, s) for t, row in enumerate(p, 1) for s in range(1, row + 1))


def is_standard(labels: Mapping[Hashable, int], poset: FinitePoset) -> bool:
    """Injective, and order-preserving on comparable labelled elements."""
    if len(set(labels.values())) != len(labels):
        return False
    above = poset.strictly_above
    return all(labels[x] < labels[y] for x in labels for y in above[x] if y in labels)


def standard_labellings(s: Iterable[Hashable], poset: FinitePoset) -> Iterator[Labelling]:
    """Linear extensions of the induced subposet on ``s``, labelled 1..|s|."""
    ip = poset.indexed
    members = sorted(ip.index[x] for x in set(s))
    inside = set(members)
    below = {i: [j for j in ip.below[i] if j in inside] for i in members}
    order = sorted(members, key=lambda i: ip.elements[i])
    labels: dict[int, int] = {}

    def rec(next_label: int) -> Iterator[Labelling]:
        if next_label > len(order):
            yield {ip.elements[i]: v for i, v in labels.items()}
            return
        for i in order:
            if i not in labels and all(j in labels for j in below[i]):
                labels[i] = next_label
                yield from rec(next_label + 1)
                del labels[i]

    yield from rec(1)


def jdt_rectify(labels: Mapping[Hashable, int], poset: FinitePoset) -> Labelling:
    """Slide labels down until the labelled set is an order ideal.

    Each step picks an unlabelled element that is maximal among those lying
    below some labelled element (ties broken by the smallest element), then
    repeatedly pulls down the smallest label covering the vacated spot.
    """
    ip = poset.indexed
    lab = [0] * len(ip.elements)
    try:
        for x, v in labels.items():
            lab[ip.index[x]] = v
    except KeyError as exc:
        raise ValueError(f"{exc.args[0]} is not in the poset") from None
    if not is_standard(labels, poset) or any(v <= 0 for v in labels.values()):
        raise ValueError("input labelling is not standard")
    rank = {i: r for r, i in enumerate(ip.by_element)}
    while True:
        holes = {i for i, v in enumerate(lab) if not v and any(lab[j] for j in ip.above[i])}
        if not holes:
            break
        maximal = [i for i in holes if not any(j in holes for j in ip.above[i])]
        cur = min(maximal, key=rank.__getitem__)
        while True:
            ups = [j for j in ip.up[cur] if lab[j]]
            if not ups:
                break
            nxt = min(ups, key=lab.__getitem__)
            lab[cur], lab[nxt] = lab[nxt], 0
            cur = nxt
    return {ip.elements[i]: v for i, v in enumerate(lab) if v}


def row_reading_labelling(p: Partition) -> Labelling:
    """Label the boxes of a straight shape row by row, left to right."""
    out, label = {}, 1
    for t, row in enumerate(p, 1):
        for s in range(1, row + 1):
            out[(t, s)] = label
            label += 1
    return out


def _key(labels: Mapping) -> frozenset:
    return frozenset(labels.items())


@lru_cache(maxsize=None)
def rectification_tally(lam: Partition, nu: Partition, rows: int, cols: int) -> Counter:
    """How many standard labellings of nu/lam rectify to each straight labelling."""
    poset = grid_poset(rows, cols)
    skew = grid_boxes(nu) - grid_boxes(lam)
    return Counter(_key(jdt_rectify(t, poset)) for t in standard_labellings(skew, poset))


def e_coeff(lam: Partition, mu: Partition, nu: Partition, rows: int, cols: int) -> int:
    """Number of labellings of nu/lam whose rectification is the row-reading labelling of mu."""
    lam, mu, nu = (pad(p, rows) for p in (lam, mu, nu))
    for p in (lam, mu, nu):
        if not fits(p, rows, cols):
            raise ValueError(f"{p} does not fit {rows}x{cols}")
    if sum(nu) != sum(lam) + sum(mu) or not contains(nu, lam):
        return 0
    return rectification_tally(lam, nu, rows, cols)[_key(row_reading_labelling(mu))]


@lru_cache(maxsize=None)
def _grassmannian_region(rows: int, cols: int) -> FinitePoset:
    shape = FlagShape(rows + cols, (rows,))
    return type_a_poset(rows + cols).restrict(regions(shape)[(1, 2)])


def _root_of(rows: int, t: int, s: int) -> TypeARoot:
    return TypeARoot(rows + 1 - t, rows + s)


@lru_cache(maxsize=None)
def _root_tally(lam: Partition, nu: Partition, rows: int, cols: int) -> Counter:
    poset = _grassmannian_region(rows, cols)
    skew = {_root_of(rows, t, s) for t, s in grid_boxes(nu) - grid_boxes(lam)}
    return Counter(_key(jdt_rectify(t, poset)) for t in standard_labellings(skew, poset))


def lr_coeff(lam: Partition, mu: Partition, nu: Partition, rows: int, cols: int) -> int:
    """Grassmannian structure constant, by jeu de taquin on the root region of Gr_r(C^{r+c})."""
    lam, mu, nu = (pad(p, rows) for p in (lam, mu, nu))
    for p in (lam, mu, nu):
        if not fits(p, rows, cols):
            raise ValueError(f"{p} does not fit {rows}x{cols}")
    if sum(nu) != sum(lam) + sum(mu) or not contains(nu, lam):
        return 0
    target = {_root_of(rows, t, s): v for (t, s), v in row_reading_labelling(mu).items()}
    return _root_tally(lam, nu, rows, cols)[_key(target)]
