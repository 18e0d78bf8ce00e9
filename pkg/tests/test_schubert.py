import itertools

import pytest
from hypothesis import given, strategies as st

from rydcalc.jdt import lr_coeff
from rydcalc.roots import FlagShape
from rydcalc.ryd import ryd_from_perm
from rydcalc.schubert import (
    cup_coeff_restricted,
    cup_expand,
    divided_difference,
    leading_exponent,
    poly_add,
    poly_mul,
    schubert_poly,
    schubert_poly_from_top,
)
from rydcalc.weyl import code_of, enumerate_cells, length


def test_small_schubert_polynomials():
    assert schubert_poly((1, 2, 3)) == {(): 1}
    assert schubert_poly((2, 1, 3)) == {(1,): 1}
    assert schubert_poly((3, 1, 2)) == {(2,): 1}
    assert divided_difference({(2, 1): 1}, 2) == {(2,): 1}


@pytest.mark.parametrize("n", range(1, 6))
def test_both_constructions_agree(n):
    for w in itertools.permutations(range(1, n + 1)):
        f = schubert_poly(w)
        assert f == schubert_poly_from_top(w)
        assert all(c > 0 for c in f.values())
        if n > 1:
            code = code_of(w)
            lead = leading_exponent(f)
            assert tuple(lead) + (0,) * (len(code) - len(lead)) == code


def test_cup_examples():
    assert cup_expand((2, 1, 3), (2, 1, 3), 3) == {(3, 1, 2): 1}
    assert cup_expand((1, 2, 4, 5, 3), (3, 4, 1, 2, 5), 5) == {
        (3, 5, 1, 4, 2): 1,
        (3, 4, 2, 5, 1): 1,
        (4, 5, 1, 2, 3): 1,
    }
    shape = FlagShape(5, (2, 4))
    assert cup_coeff_restricted((1, 2, 4, 5, 3), (3, 4, 1, 2, 5), (4, 5, 1, 2, 3), shape) == 1
    assert cup_coeff_restricted((1, 2, 4, 5, 3), (1, 2, 3, 4, 5), (1, 2, 4, 5, 3), shape) == 1


@pytest.mark.parametrize("n", range(1, 5))
def test_cup_is_commutative_and_graded(n):
    perms = list(itertools.permutations(range(1, n + 1)))
    for u in perms:
        assert cup_expand(u, tuple(range(1, n + 1)), n) == {u: 1}
        for v in perms:
            out = cup_expand(u, v, n)
            assert out == cup_expand(v, u, n)
            assert all(length(w) == length(u) + length(v) for w in out)


@pytest.mark.parametrize("n", range(2, 7))
def test_grassmannian_cup_equals_lr(n):
    for k in range(1, n):
        shape = FlagShape(n, (k,))
        cells = list(enumerate_cells(shape))
        part = {w: ryd_from_perm(w, shape).part(1, 2) for w in cells}
        for u in cells:
            for v in cells:
                out = cup_expand(u, v, n)
                for w in cells:
                    if length(w) != length(u) + length(v):
                        continue
                    assert out.get(w, 0) == lr_coeff(part[u], part[v], part[w], k, n - k)


@given(st.permutations(range(1, 6)), st.permutations(range(1, 6)))
def test_expansion_reproduces_the_polynomial_product(u, v):
    # embedding S_5 in S_10 leaves room for every term of the product
    pad = tuple(range(6, 11))
    u, v = tuple(u) + pad, tuple(v) + pad
    rhs = {}
    for w, c in cup_expand(u, v, 10).items():
        assert c > 0
        rhs = poly_add(rhs, schubert_poly(w), c)
    assert rhs == poly_mul(schubert_poly(u), schubert_poly(v))
