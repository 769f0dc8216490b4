import pytest

from lieindex.chevalley import compact
from lieindex.involution import involution_from_descriptor
from lieindex.linalg import Subspace
from lieindex.rootsystem import root_system
from lieindex.subalgebra import (borel_de_siebenthal, center, construct, is_subalgebra,
                                 levi_subalgebra, subalgebra_witness, verify_table3)

EXCEPTIONAL = [("E", 6, 26), ("E", 7, 54), ("E", 8, 112), ("F", 4, 16), ("G", 2, 6)]


@pytest.mark.parametrize("t,r,d", EXCEPTIONAL)
def test_exceptional_rows(t, r, d):
    (entry,) = verify_table3(t, r)
    assert entry.match and entry.constructed_codim == d


@pytest.mark.parametrize("r", range(3, 9))
def test_classical_rows(r):
    expected = {"A": 2 * r, "B": 2 * r, "C": 4 * (r - 1), "D": 2 * r - 1}
    for t, d in expected.items():
        (entry,) = verify_table3(t, r)
        assert entry.constructed_codim == d and entry.match, entry


@pytest.mark.parametrize("t,r,node,comps", [
    ("E", 8, 8, ("A1", "E7")), ("F", 4, 4, ("B4",)), ("G", 2, 1, ("A2",)),
    ("B", 4, 4, ("D4",)), ("C", 4, 1, ("A1", "C3")),
])
def test_bds_components(t, r, node, comps):
    rec = borel_de_siebenthal(root_system(t, r), node)
    assert rec.components == comps


def test_levi_has_one_dimensional_center():
    rec = levi_subalgebra(root_system("E", 7), 7)
    assert rec.components == ("E6",) and rec.center_dim == 1 and rec.codim == 54


def test_center_of_whole_algebra_is_trivial():
    L = compact("A", 2)
    assert center(L, Subspace.whole(L.dimension)).dim == 0


def test_m_of_su3_is_not_a_subalgebra():
    L, _, pair = involution_from_descriptor("A", 2, "diagram", (2, 1))
    assert not is_subalgebra(L, pair.m)
    a, b = subalgebra_witness(L, pair.m)
    basis = pair.m.basis()
    assert L.bracket_sparse(basis[a], basis[b]) not in pair.m


def test_unknown_route():
    with pytest.raises(ValueError):
        construct("parabolic", "A", 2, 1)


def test_bad_node():
    with pytest.raises(ValueError):
        borel_de_siebenthal(root_system("G", 2), 3)
