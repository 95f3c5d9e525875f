import pytest
from hypothesis import given, strategies as hs

from kdc import polytope as pt


SQUARE = pt.product(pt.simplex(1), pt.simplex(1))


def test_simplex_f_vectors():
    assert pt.simplex(0).f_vector() == (1,)
    assert pt.simplex(2).f_vector() == (3, 3, 1)
    assert pt.simplex(3).f_vector() == (4, 6, 4, 1)
    with pytest.raises(ValueError):
        pt.simplex(-1)


def test_empty_lattice():
    assert len(pt.EMPTY) == 0
    assert pt.EMPTY.f_vector() == ()
    assert pt.EMPTY.is_graded()


def test_explicit_empty_face_rejected():
    with pytest.raises(ValueError):
        pt.FacePoset({frozenset(): -1})


def test_product_square():
    assert SQUARE.f_vector() == (4, 4, 1)
    assert SQUARE.euler_sum() == 1
    assert SQUARE.has_unique_max()


def test_product_needs_unique_max():
    two_points = pt.FacePoset({frozenset({1}): 0, frozenset({2}): 0})
    with pytest.raises(ValueError):
        pt.product(two_points, pt.simplex(0))


def test_cone_counts():
    assert pt.cone(SQUARE).f_vector() == (5, 8, 5, 1)
    assert pt.cone(pt.simplex(1)).f_vector() == (3, 3, 1)
    assert pt.cone(pt.EMPTY, times=0) is not None
    with pytest.raises(ValueError):
        pt.cone(pt.EMPTY, times=-1)


def test_cone_of_empty_is_simplex():
    for m in range(1, 5):
        assert pt.iso(pt.cone(pt.EMPTY, times=m), pt.simplex(m - 1))


def test_iterated_cone_uses_fresh_apexes():
    once = pt.cone(pt.simplex(0))
    twice = pt.cone(once)
    assert twice.f_vector() == (3, 3, 1)
    assert pt.iso(twice, pt.cone(pt.simplex(0), times=2))


def test_slice_small_cases():
    assert pt.slice_lattice(1, 1, 0).f_vector() == (1,)
    assert pt.slice_lattice(1, 1, 1).f_vector() == (2, 1)
    assert pt.slice_lattice(2, 2, 1).f_vector() == (5, 8, 5, 1)


def test_slice_validation():
    with pytest.raises(ValueError):
        pt.slice_lattice(0, 1, 2)
    with pytest.raises(ValueError):
        pt.slice_lattice(1, 0, 0)
    with pytest.raises(ValueError):
        pt.slice_lattice(1, 1, -1)


def test_slice_alias():
    assert pt.slice is pt.slice_lattice


def test_graded():
    assert pt.simplex(3).is_graded()
    assert pt.slice_lattice(3, 2, 1).is_graded()
    gap = pt.FacePoset({frozenset({1}): 0, frozenset({1, 2}): 2})
    assert not gap.is_graded()


def test_covers_are_dimension_steps():
    for low, high in pt.slice_lattice(2, 1, 1).covers():
        assert low < high


def test_iso_positive_across_labels():
    hand = pt.FacePoset(
        {
            frozenset({1}): 0,
            frozenset({2}): 0,
            frozenset({3}): 0,
            frozenset({1, 2}): 1,
            frozenset({1, 3}): 1,
            frozenset({2, 3}): 1,
            frozenset({1, 2, 3}): 2,
        }
    )
    assert pt.iso(hand, pt.simplex(2))


def test_iso_negative():
    assert not pt.iso(pt.simplex(2), SQUARE)
    assert not pt.iso(pt.cone(SQUARE), pt.simplex(3))
    assert not pt.iso(pt.simplex(2), pt.simplex(3))


def test_iso_needs_graded():
    gap = pt.FacePoset({frozenset({1}): 0, frozenset({1, 2}): 2})
    with pytest.raises(ValueError):
        pt.iso(gap, gap)


@given(
    hs.integers(min_value=1, max_value=3),
    hs.integers(min_value=1, max_value=3),
    hs.integers(min_value=0, max_value=2),
)
def test_slice_matches_cone_of_product(n_plus, n_minus, n_zero):
    got = pt.slice_lattice(n_plus, n_minus, n_zero)
    want = pt.cone(pt.product(pt.simplex(n_plus - 1), pt.simplex(n_minus - 1)), times=n_zero)
    assert got.f_vector()[0] == n_zero + n_plus * n_minus
    assert pt.iso(got, want)


def test_euler_sum_is_one():
    for p in (pt.simplex(4), SQUARE, pt.cone(SQUARE), pt.slice_lattice(3, 2, 2)):
        assert p.euler_sum() == 1
