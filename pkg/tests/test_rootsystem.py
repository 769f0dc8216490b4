import pytest
from hypothesis import given, strategies as st

from lieindex.rootsystem import (RootSystemError, algebra_dimension, cartan_matrix,
                                 cartan_type_signature, extended_cartan_matrix, is_finite_type,
                                 root_subsystem_closure, root_system, subsystem_cartan_matrix)

# independent closed forms for |Phi+|
POSITIVE = {"A": lambda r: r * (r + 1) // 2, "B": lambda r: r * r, "C": lambda r: r * r,
            "D": lambda r: r * (r - 1)}
EXCEPTIONAL = {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}

classical = st.sampled_from([("A", 1), ("B", 2), ("C", 3), ("D", 4)]).flatmap(
    lambda tl: st.tuples(st.just(tl[0]), st.integers(tl[1], 7)))


@given(classical)
def test_positive_root_count_classical(tr):
    t, r = tr
    assert root_system(t, r).positive_count == POSITIVE[t](r)


@pytest.mark.parametrize("key,n", sorted(EXCEPTIONAL.items()))
def test_positive_root_count_exceptional(key, n):
    rs = root_system(*key)
    assert rs.positive_count == n
    assert len(rs.roots) == 2 * n


def test_g2_cartan_convention():
    assert cartan_matrix("G", 2).entries == ((2, -1), (-3, 2))


@pytest.mark.parametrize("t,r,theta", [
    ("E", 8, (2, 3, 4, 6, 5, 4, 3, 2)),
    ("F", 4, (2, 3, 4, 2)),
    ("G", 2, (3, 2)),
    ("B", 4, (1, 2, 2, 2)),
    ("C", 4, (2, 2, 2, 1)),
])
def test_highest_root(t, r, theta):
    assert root_system(t, r).highest_root.coords == theta


@given(classical)
def test_roots_closed_under_reflection_and_negation(tr):
    rs = root_system(*tr)
    for a in rs.roots:
        assert rs.is_root((-a).coords)
        for i in range(rs.rank):
            assert rs.is_root(rs.reflect(i, a).coords)


@given(classical)
def test_single_sign_and_sorting(tr):
    rs = root_system(*tr)
    for a in rs.roots:
        assert all(c >= 0 for c in a.coords) or all(c <= 0 for c in a.coords)
    heights = [a.height for a in rs.roots]
    assert heights == sorted(heights)


def test_long_roots_have_norm_two():
    for key in [("B", 3), ("C", 3), ("F", 4), ("G", 2), ("E", 6)]:
        rs = root_system(*key)
        assert max(rs.norm2(a.coords) for a in rs.roots) == 2


def test_dimension_examples():
    assert algebra_dimension(root_system("E", 8)) == 248
    assert algebra_dimension(root_system("B", 5)) == 55
    assert algebra_dimension(root_system("A", 1)) == 3


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("C", 2), ("D", 2), ("E", 9), ("F", 3),
                                 ("G", 3), ("H", 3)])
def test_invalid_types_rejected(bad):
    with pytest.raises(RootSystemError):
        cartan_matrix(*bad)


def test_affine_matrix_is_not_finite_type():
    assert not is_finite_type(((2, -2), (-2, 2)))
    assert is_finite_type(cartan_matrix("F", 4).entries)


@pytest.mark.parametrize("t,r,attached", [("E", 8, 8), ("G", 2, 2), ("F", 4, 1), ("B", 4, 2),
                                          ("C", 4, 1)])
def test_extended_node_attachment(t, r, attached):
    ext = extended_cartan_matrix(root_system(t, r))
    neighbours = [j for j in range(1, r + 1) if ext[0][j]]
    assert neighbours == [attached]


def test_subsystem_signature():
    rs = root_system("G", 2)
    sub = root_subsystem_closure(rs, [a for a in rs.roots if rs.norm2(a.coords) == 2])
    assert cartan_type_signature(subsystem_cartan_matrix(rs, sub)) == ["A2"]


def test_symmetries():
    assert len(cartan_matrix("D", 4).symmetries()) == 6
    assert len(cartan_matrix("E", 6).symmetries()) == 2
    assert len(cartan_matrix("G", 2).symmetries()) == 1
