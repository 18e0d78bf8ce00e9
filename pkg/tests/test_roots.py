import itertools
import math

import pytest
from hypothesis import given, strategies as st

from rydcalc.roots import (
    BDRoot,
    FinitePoset,
    FlagShape,
    TypeARoot,
    bd_poset,
    covers,
    is_lower_order_ideal,
    lambda_k,
    regions,
    type_a_poset,
)
from rydcalc.weyl import all_shapes


def test_regions_of_fl_135_in_7():
    r = regions(FlagShape(7, (1, 3, 5)))
    assert list(r) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def test_smallest_region():
    r = regions(FlagShape(2, (1,)))
    assert r == {(1, 2): frozenset({TypeARoot(1, 2)})}


def test_region_size_is_product_of_interval_sizes():
    assert len(regions(FlagShape(7, (2, 5)))[(1, 3)]) == 4


@pytest.mark.parametrize("n", range(2, 8))
def test_regions_and_levi_roots_exhaust_the_root_system(n):
    for shape in all_shapes(n):
        region_roots = sum(len(v) for v in regions(shape).values())
        levi = sum(math.comb(r, 2) for r in shape.sizes)
        assert region_roots + levi == math.comb(n, 2)


def test_type_a_covers():
    poset = type_a_poset(4)
    assert covers(TypeARoot(2, 3), TypeARoot(2, 4), poset)
    assert not covers(TypeARoot(1, 3), TypeARoot(2, 4), poset)


def test_type_b_covers_follow_root_arithmetic():
    poset = bd_poset("B", 3)
    # e_2 + e_3 - e_2 = e_3 is simple in type B
    assert covers(BDRoot("short", 2), BDRoot("plus", 2, 3), poset)
    assert covers(BDRoot("minus", 2, 3), BDRoot("short", 2), poset)


@pytest.mark.parametrize(
    "lie_type,n,k,base,top",
    [("B", 5, 3, 15, 3), ("D", 6, 3, 18, 3), ("B", 2, 1, 3, 0)],
)
def test_lambda_k_sizes(lie_type, n, k, base, top):
    lk = lambda_k(lie_type, n, k)
    assert (len(lk.base_roots), len(lk.top_roots)) == (base, top)


@pytest.mark.parametrize("n", range(2, 11))
def test_lambda_k_closed_forms(n):
    for k in range(1, n):
        b = lambda_k("B", n, k)
        assert len(b.base_roots) == k * (2 * n + 1 - 2 * k)
        assert len(b.top_roots) == k * (k - 1) // 2
        if k < n - 1 or n >= 3:
            d = lambda_k("D", n, k)
            assert len(d.base_roots) == k * (2 * n - 2 * k)
            assert len(d.top_roots) == k * (k - 1) // 2


def _dominance_order(roots, n):
    """x <= y iff y - x is a nonnegative combination of simple roots (brute force)."""
    def coeffs(v):
        # express v in the simple root basis of type A: partial sums
        out, acc = [], 0
        for x in v[:-1]:
            acc += x
            out.append(acc)
        return out

    vec = {r: r.vector(n) for r in roots}
    return {(x, y) for x in roots for y in roots
            if all(c >= 0 for c in coeffs(tuple(b - a for a, b in zip(vec[x], vec[y]))))}


@pytest.mark.parametrize("n", range(2, 8))
def test_type_a_covers_generate_dominance(n):
    poset = type_a_poset(n)
    order = _dominance_order(poset.elements, n)
    for x in poset.elements:
        assert not covers(x, x, poset)
        for y in poset.elements:
            assert poset.leq(x, y) == ((x, y) in order)


def test_lower_order_ideals():
    chain = FinitePoset(["a", "b"], [("a", "b")])
    assert is_lower_order_ideal([], chain)
    assert is_lower_order_ideal(["a", "b"], chain)
    assert not is_lower_order_ideal(["b"], chain)


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n - 1)))))
def test_flag_shape_intervals_partition_positions(data):
    n, ks = data
    shape = FlagShape(n, tuple(sorted(ks)))
    positions = list(itertools.chain.from_iterable(shape.interval(i) for i in range(1, shape.d + 1)))
    assert positions == list(range(1, n + 1))
    assert sum(shape.sizes) == n
