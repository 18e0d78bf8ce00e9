import math

import pytest
from hypothesis import given, strategies as st

from rydcalc.isotropic import strict_index_set
from rydcalc.roots import FlagShape
from rydcalc.weyl import (
    EnumerationBoundError,
    SignedPerm,
    all_shapes,
    code_of,
    delete_letters,
    enumerate_cells,
    enumerate_signed,
    flatten,
    in_code_set,
    perm_from_code,
    perm_to_word,
    shape_of_word,
    word_to_perm,
)


def test_code_examples():
    assert code_of((5, 3, 6, 1, 7, 4, 2)) == (4, 2, 3, 0, 2, 1)
    assert perm_from_code((4, 2, 3, 0, 2, 1), FlagShape(7, (1, 3, 5, 6))) == (5, 3, 6, 1, 7, 4, 2)
    assert code_of((1, 2, 3)) == (0, 0)
    assert code_of((2, 1)) == (1,)


def test_word_examples():
    assert word_to_perm((2, 4, 3, 1, 1, 2, 1)) == (4, 5, 7, 1, 6, 3, 2)
    assert word_to_perm((2, 3, 1, 1, 2)) == (3, 4, 1, 5, 2)
    assert word_to_perm((1, 1, 1)) == (1, 2, 3)
    assert delete_letters((2, 4, 3, 1, 1, 2, 1), 1, 2) == (2, 1, 1, 2, 1)
    assert delete_letters((2, 3, 1, 1, 2), 1, 2) == (2, 1, 1, 2)


def test_flatten_examples():
    shape = FlagShape(7, (2, 5))
    w = (2, 6, 1, 4, 5, 3, 7)
    assert flatten(w, shape, 1, 3) == (1, 3, 2, 4)
    assert flatten(w, shape, 1, 2) == (2, 5, 1, 3, 4)


@pytest.mark.parametrize("n", range(1, 7))
def test_cell_counts_and_code_round_trip(n):
    for shape in all_shapes(n):
        cells = list(enumerate_cells(shape))
        assert len(cells) == math.factorial(n) // math.prod(math.factorial(r) for r in shape.sizes)
        for w in cells:
            c = code_of(w) if n > 1 else ()
            assert in_code_set(c, shape)
            assert perm_from_code(c, shape) == w
            assert word_to_perm(perm_to_word(w, shape)) == w


@pytest.mark.parametrize("n", range(3, 7))
def test_words_commute_with_flattening(n):
    for shape in all_shapes(n):
        if shape.d < 3:
            continue
        for w in enumerate_cells(shape):
            tau = perm_to_word(w, shape)
            for i, j in shape.region_keys():
                assert flatten(w, shape, i, j) == word_to_perm(delete_letters(tau, i, j))


@pytest.mark.parametrize("n", range(3, 7))
def test_b_coset_count_matches_strict_partitions(n):
    assert sum(1 for _ in enumerate_signed("B", n, 2)) == sum(1 for _ in strict_index_set("B", n, 2))


@pytest.mark.parametrize("n,k", [(4, 2), (5, 3), (6, 2)])
def test_d_cosets_have_even_bars(n, k):
    for w in enumerate_signed("D", n, k):
        assert sum(1 for x in w.entries if x < 0) % 2 == 0


def test_signed_blocks_round_trip():
    for w in enumerate_signed("B", 5, 3):
        assert SignedPerm.from_blocks("B", 5, 3, w.Y, w.Z, w.V) == w


def test_enumeration_bound():
    with pytest.raises(EnumerationBoundError):
        list(enumerate_cells(FlagShape(5, (2,)), max_n=4))


@given(st.permutations(range(1, 8)))
def test_word_of_a_word_shape(perm):
    shape = FlagShape(7, (2, 4, 5))
    w = tuple(sorted(perm[:2]) + sorted(perm[2:4]) + sorted(perm[4:5]) + sorted(perm[5:]))
    tau = perm_to_word(w, shape)
    assert shape_of_word(tau) == shape
    assert word_to_perm(tau) == w
