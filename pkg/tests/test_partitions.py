from hypothesis import given, strategies as st

from rydcalc.partitions import conjugate, contains, fits, is_partition, is_q_strict, pad, partitions_in_box


def test_pad_and_fits():
    assert pad((2, 1), 4) == (2, 1, 0, 0)
    assert fits((3, 1), 2, 3)
    assert not fits((4,), 2, 3)


def test_partitions_in_box_counts():
    # binomial(4, 2) partitions fit a 2 x 2 box
    assert len(partitions_in_box(2, 2)) == 6
    assert partitions_in_box(2, 2, 2) == ((2, 0), (1, 1))


def test_q_strict():
    assert is_q_strict((6, 1, 1), 2)
    assert not is_q_strict((3, 3), 2)
    assert is_q_strict((2, 2), 2)


@given(st.lists(st.integers(0, 6), max_size=5).map(lambda xs: tuple(sorted(xs, reverse=True))))
def test_conjugate_is_an_involution(p):
    assert is_partition(p)
    width = p[0] if p else 0
    assert conjugate(conjugate(p, width), len(p)) == p


@given(st.integers(1, 4), st.integers(1, 4))
def test_box_partitions_are_contained_in_the_full_box(r, c):
    full = (c,) * r
    for p in partitions_in_box(r, c):
        assert contains(full, p)
