from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lieindex.linalg import Subspace, is_positive_definite, nullspace, pivots_ldl

small_int = st.integers(-4, 4)
vectors = st.lists(st.lists(small_int, min_size=5, max_size=5), min_size=0, max_size=6)


@given(vectors)
def test_dimension_matches_numpy_rank(rows):
    S = Subspace.span(rows, 5)
    expected = np.linalg.matrix_rank(np.array(rows, dtype=float)) if rows else 0
    assert S.dim == expected


@given(vectors)
def test_generators_are_members(rows):
    S = Subspace.span(rows, 5)
    assert all(r in S for r in rows)


@given(vectors)
def test_canonical_form_independent_of_order(rows):
    assert Subspace.span(rows, 5) == Subspace.span(list(reversed(rows)), 5)


@given(vectors)
def test_nullspace_is_kernel(rows):
    K = nullspace(rows, 5)
    assert K.dim + Subspace.span(rows, 5).dim == 5
    for v in K.basis():
        for r in rows:
            assert sum(Fraction(a) * v.get(i, 0) for i, a in enumerate(r)) == 0


def test_membership_is_exact():
    S = Subspace.span([[1, 1, 0]], 3)
    assert [3, 3, 0] in S
    assert [Fraction(1, 3), Fraction(1, 3), 0] in S
    assert [1, 1, Fraction(1, 10**12)] not in S


def test_coordinate_and_whole():
    assert Subspace.coordinate([0, 2], 4).is_coordinate
    assert Subspace.whole(4).codim == 0


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        Subspace.span([[1, 2]], 3)


def test_positive_definite_exact():
    assert is_positive_definite([[2, -1], [-1, 2]])
    assert not is_positive_definite([[1, 2], [2, 1]])
    assert not is_positive_definite([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        is_positive_definite([[1, 2], [0, 1]])
    assert pivots_ldl([[2, -1], [-1, 2]]) == [2, Fraction(3, 2)]
