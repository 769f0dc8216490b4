import pytest

from lieindex.chevalley import ConstructionError, compact, killing_form
from lieindex.involution import (LinearMap, bracket_preservation_failures, diagram_automorphism,
                                 inner_involution, involution_from_descriptor, killing_orthogonal,
                                 symmetric_pair, tangent_reflections)

# (type, rank, kind, data) -> (dim k, dim m)
CASES = [
    (("A", 1, "inner", (1,)), (1, 2)),
    (("A", 2, "diagram", (2, 1)), (3, 5)),
    (("B", 2, "inner", (1, 0)), (4, 6)),
    (("G", 2, "inner", (0, 1)), (6, 8)),
    (("G", 2, "inner", (1, 0)), (6, 8)),
    (("A", 3, "diagram", (3, 2, 1)), (10, 5)),
    (("A", 4, "inner", (1, 0, 0, 0)), (16, 8)),
    (("D", 4, "diagram", (1, 2, 4, 3)), (21, 7)),
]


@pytest.mark.parametrize("desc,dims", CASES)
def test_symmetric_pair_dimensions(desc, dims):
    L, A, pair = involution_from_descriptor(*desc)
    assert (pair.k.dim, pair.m.dim) == dims
    assert A.is_involutive()
    assert not bracket_preservation_failures(L, A)
    assert killing_orthogonal(killing_form(L), pair.k, pair.m)


@pytest.mark.parametrize("desc,dims", CASES[:4])
def test_tangent_reflections(desc, dims):
    _, _, pair = involution_from_descriptor(*desc)
    tr = tangent_reflections(pair)
    assert tr.d_rho.eigenspace(1) == pair.m


def test_e6_outer_involution_fixes_f4():
    L = compact("E", 6)
    A = diagram_automorphism(L, (6, 2, 5, 4, 3, 1))
    assert A.eigenspace(1).dim == 52


def test_trace_of_inner_involution():
    L, A, pair = involution_from_descriptor("B", 2, "inner", (1, 0))
    assert A.trace() == pair.k.dim - pair.m.dim


def test_invalid_inputs():
    L = compact("A", 2)
    with pytest.raises(ValueError):
        inner_involution(L, (0, 0))
    with pytest.raises(ValueError):
        diagram_automorphism(compact("B", 3), (3, 2, 1))


def test_non_involution_rejected():
    L = compact("A", 1)
    rot = LinearMap([{0: 1}, {2: 1}, {1: -1}])  # quarter turn in the root plane
    assert not rot.is_involutive()
    with pytest.raises(ValueError):
        symmetric_pair(L, rot)


def test_non_automorphism_detected():
    L = compact("A", 2)
    scaled = LinearMap([{i: 2} for i in range(L.dimension)])
    assert bracket_preservation_failures(L, scaled)


def test_d4_triality_preserves_bracket():
    L = compact("D", 4)
    A = diagram_automorphism(L, (3, 2, 4, 1))
    assert not A.is_involutive()
    assert not bracket_preservation_failures(L, A, limit=1)
