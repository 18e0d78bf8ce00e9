import itertools
import math

import pytest
from hypothesis import given, strategies as st

from rydcalc.isotropic import strict_index_set
from rydcalc.roots import FlagShape, TypeARoot, type_a_poset
from rydcalc.ryd import (
    FlagRYD,
    IsotropicRYD,
    coloring_order,
    diagram_from_code,
    enumerate_isotropic_diagrams,
    enumerate_k_diagrams,
    hook_condition_holds,
    perm_from_ryd,
    ryd_from_perm,
    ryd_from_roots,
    ryd_from_signed_perm,
    validate_k_diagram,
    validate_support,
)
from rydcalc.weyl import SignedPerm, all_shapes, code_of, enumerate_cells, enumerate_signed, length, perm_from_code


def test_diagram_of_2614537():
    shape = FlagShape(7, (2, 5))
    r = ryd_from_perm((2, 6, 1, 4, 5, 3, 7), shape)
    assert r.part(1, 2) == (3, 1)
    assert r.part(1, 3) == (1, 0)
    assert r.part(2, 3) == (1, 1, 0)
    assert r.degrees() == (4, 1, 2)
    assert perm_from_ryd(r) == (2, 6, 1, 4, 5, 3, 7)


def test_identity_diagram_is_empty():
    shape = FlagShape(5, (2, 3))
    r = ryd_from_perm((1, 2, 3, 4, 5), shape)
    assert r.degrees() == (0, 0, 0)
    assert perm_from_ryd(FlagRYD(shape, ())) == (1, 2, 3, 4, 5)


@pytest.mark.parametrize("n", range(1, 7))
def test_diagram_round_trip_and_hook_condition(n):
    for shape in all_shapes(n):
        for w in enumerate_cells(shape):
            r = ryd_from_perm(w, shape)
            assert perm_from_ryd(r) == w
            assert r.is_valid()
            assert sum(r.degrees()) == length(w)
            if n > 1:
                assert diagram_from_code(code_of(w), n) == r.roots()


def test_k_diagram_count_for_n_7_shape():
    shape = FlagShape(7, (1, 3, 5))
    assert sum(1 for _ in enumerate_k_diagrams(shape)) == 630


def test_single_root_diagrams():
    shape = FlagShape(2, (1,))
    assert validate_k_diagram({(1, 2): (0,)}, shape)
    assert validate_k_diagram({(1, 2): (1,)}, shape)


def test_coloring_order_of_worked_code():
    order = coloring_order((4, 2, 3, 0, 2, 1))
    assert len(order) == 12
    assert frozenset(order) == diagram_from_code((4, 2, 3, 0, 2, 1))
    assert diagram_from_code((0, 0, 0)) == frozenset()


@pytest.mark.parametrize("n", range(2, 6))
def test_hook_valid_subsets_are_exactly_the_inversion_sets(n):
    roots = type_a_poset(n).elements
    inversion_sets = {ryd_from_perm(w, FlagShape(n, tuple(range(1, n)))).roots() for w in itertools.permutations(range(1, n + 1))}
    valid = set()
    for mask in range(1 << len(roots)):
        s = frozenset(r for i, r in enumerate(roots) if mask >> i & 1)
        if hook_condition_holds(s, n):
            valid.add(s)
    assert valid == inversion_sets
    assert len(valid) == math.factorial(n)


def test_signed_examples():
    b = ryd_from_signed_perm(SignedPerm("B", 8, 5, (2, 3, 7, -8, -4, 1, 5, 6)))
    assert (b.base, b.top, b.charge) == ((6, 4, 3, 1, 1), (2, 0, 0, 0, 0), None)
    d = ryd_from_signed_perm(SignedPerm("D", 8, 5, (2, 4, -8, -6, -1, 3, 5, -7)))
    assert (d.base, d.top, d.charge) == ((6, 4, 3, 1, 0), (4, 1, 0, 0, 0), "down")


def test_minimal_element_has_empty_diagram():
    w = SignedPerm("B", 5, 3, (1, 2, 3, 4, 5))
    r = ryd_from_signed_perm(w)
    assert r.degree() == 0
    assert validate_support(r)


@pytest.mark.parametrize("family", ["B", "D"])
@pytest.mark.parametrize("n", range(2, 6))
def test_support_valid_diagrams_match_index_counts(family, n):
    for k in range(1, n):
        from_perms = {ryd_from_signed_perm(w) for w in enumerate_signed(family, n, k)}
        assert all(validate_support(r) for r in from_perms)
        valid = set(enumerate_isotropic_diagrams(family, n, k))
        assert valid == from_perms
        assert len(valid) == sum(1 for _ in strict_index_set(family, n, k))


@pytest.mark.parametrize("n", range(4, 7))
def test_top_rows_are_strict(n):
    for w in enumerate_signed("D", n, 3):
        top = [t for t in ryd_from_signed_perm(w).top if t]
        assert top == sorted(set(top), reverse=True)


def test_charge_is_required_exactly_on_rows_of_length_n_minus_k():
    with pytest.raises(ValueError):
        IsotropicRYD("D", 6, 3, (4, 3, 3), (2, 1, 0))
    with pytest.raises(ValueError):
        IsotropicRYD("D", 6, 3, (4, 2, 1), (2, 1, 0), "up")


@given(st.permutations(range(1, 7)))
def test_diagrams_from_roots_round_trip(perm):
    shape = FlagShape(6, (2, 4))
    w = tuple(sorted(perm[:2]) + sorted(perm[2:4]) + sorted(perm[4:]))
    r = ryd_from_perm(w, shape)
    assert ryd_from_roots(r.roots(), shape) == r
    c = code_of(w)
    assert perm_from_code(c, shape) == w
