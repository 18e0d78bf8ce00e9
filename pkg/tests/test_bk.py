import pytest
from hypothesis import given, strategies as st

from rydcalc.bk import bk_coeff, bk_coeff_via_words, bk_expand, is_levi_movable, word_region_partition
from rydcalc.roots import FlagShape
from rydcalc.ryd import FlagRYD, perm_from_ryd, ryd_from_perm
from rydcalc.schubert import cup_expand
from rydcalc.weyl import all_shapes, enumerate_cells, has_descents_in, perm_to_word, word_to_perm

FL36 = FlagShape(7, (3, 6))
LAM, MU, NU = (1, 3, 6, 2, 4, 7, 5), (1, 4, 6, 2, 5, 7, 3), (3, 5, 7, 2, 4, 6, 1)


def _r(w, shape=FL36):
    return ryd_from_perm(w, shape)


def test_fl36_triple():
    assert bk_coeff(_r(LAM), _r(MU), _r(NU)) == 2
    words = [perm_to_word(w, FL36) for w in (LAM, MU, NU)]
    assert words == [(1, 2, 1, 2, 3, 1, 2), (1, 2, 3, 1, 2, 1, 2), (3, 2, 1, 2, 1, 2, 1)]
    assert bk_coeff_via_words(*words) == 2
    assert is_levi_movable(_r(LAM), _r(MU), _r(NU))


def test_fl36_expansion_matches_the_oracle():
    out = {perm_from_ryd(k): c for k, c in bk_expand(_r(LAM), _r(MU)).items()}
    assert out[NU] == 2
    cup = cup_expand(LAM, MU, 7)
    movable = {w: c for w, c in cup.items() if has_descents_in(w, FL36) and is_levi_movable(_r(LAM), _r(MU), _r(w))}
    assert out == movable


def test_fl24_word_triple():
    words = [(2, 3, 1, 1, 2), (1, 2, 1, 3, 2), (3, 2, 1, 2, 1)]
    assert bk_coeff_via_words(*words) == 1
    shape = FlagShape(5, (2, 4))
    assert bk_coeff(*(ryd_from_perm(word_to_perm(w), shape) for w in words)) == 1
    assert bk_coeff_via_words((1, 1), (1, 1), (1, 1)) == 1


def test_example_pair_has_empty_product():
    shape = FlagShape(5, (2, 4))
    lam, mu = ryd_from_perm((1, 2, 4, 5, 3), shape), ryd_from_perm((3, 4, 1, 2, 5), shape)
    assert bk_expand(lam, mu) == {}
    for w in cup_expand((1, 2, 4, 5, 3), (3, 4, 1, 2, 5), 5):
        assert not is_levi_movable(lam, mu, ryd_from_perm(w, shape))


def test_identity_is_a_unit():
    shape = FlagShape(5, (2, 3))
    e = ryd_from_perm((1, 2, 3, 4, 5), shape)
    for w in enumerate_cells(shape):
        r = ryd_from_perm(w, shape)
        assert bk_expand(r, e) == {r: 1}
        assert bk_coeff(e, r, r) == 1
        assert is_levi_movable(e, r, r)


def test_word_region_partition():
    # 2112 flattens to 2314, whose two inversions sit in different rows
    assert word_region_partition((2, 3, 1, 1, 2), 1, 2) == ((1, 1), 2, 2)


@pytest.mark.parametrize("n", range(2, 5))
def test_expansions_are_valid_commutative_and_bounded_by_cup(n):
    for shape in all_shapes(n):
        if shape.d < 2:
            continue
        cells = list(enumerate_cells(shape))
        for u in cells:
            for v in cells:
                a, b = _r(u, shape), _r(v, shape)
                out = bk_expand(a, b)
                assert out == bk_expand(b, a)
                assert all(nu.is_valid() for nu in out)
                assert sum(out.values()) <= sum(
                    c for w, c in cup_expand(u, v, n).items() if has_descents_in(w, shape)
                )


@given(st.permutations(range(1, 7)), st.permutations(range(1, 7)), st.permutations(range(1, 7)))
def test_routes_agree_on_random_triples(p, q, s):
    shape = FlagShape(6, (2, 4))

    def cell(x):
        return tuple(sorted(x[:2]) + sorted(x[2:4]) + sorted(x[4:]))

    u, v, w = cell(p), cell(q), cell(s)
    a = bk_coeff(_r(u, shape), _r(v, shape), _r(w, shape))
    b = bk_coeff_via_words(*(perm_to_word(x, shape) for x in (u, v, w)))
    assert a == b
    assert a == bk_coeff(_r(v, shape), _r(u, shape), _r(w, shape))


def test_shape_mismatch_is_rejected():
    with pytest.raises(ValueError):
        bk_coeff(_r((1, 2, 3), FlagShape(3, (1,))), _r((1, 2, 3), FlagShape(3, (2,))), _r((1, 2, 3), FlagShape(3, (1,))))
