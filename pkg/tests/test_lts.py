import pytest
from hypothesis import given, strategies as st

from lieindex.chevalley import compact
from lieindex.involution import involution_from_descriptor
from lieindex.linalg import Subspace
from lieindex.lts import (is_lie_triple_system, random_subspace, search_lts,
                          verify_sigma_tangents, witness_fails)
from lieindex.manifest import load_manifest
from lieindex.subalgebra import construct


def test_all_tangent_models_pass():
    recs = verify_sigma_tangents()
    assert recs and all(r["ok"] for r in recs), [r for r in recs if not r["ok"]]


def test_g2_su3_is_nonreflective_model():
    rec = construct("borel-de-siebenthal", "G", 2, 1)
    assert rec.codim == 6
    assert is_lie_triple_system(compact("G", 2), rec.subspace).passed


@pytest.mark.parametrize("key", ["su2-cartan", "su3-cartan", "spin5-cartan", "g2-cartan"])
def test_cartan_m_is_lts(key):
    e = load_manifest().involutions[key]
    L, _, pair = involution_from_descriptor(e.type_label, e.rank, e.kind, e.data)
    assert is_lie_triple_system(L, pair.m).passed


seeds = st.integers(0, 10_000)


@given(seeds, st.integers(1, 3))
def test_span_and_triples_methods_agree(seed, codim):
    L = compact("A", 2)
    S = random_subspace(L, codim, seed)
    a = is_lie_triple_system(L, S, method="span")
    b = is_lie_triple_system(L, S, method="triples")
    assert a.passed == b.passed
    if not a.passed:
        assert witness_fails(L, S, a.witness) and witness_fails(L, S, b.witness)


@given(seeds)
def test_su2_planes_are_lts(seed):
    L = compact("A", 1)
    assert is_lie_triple_system(L, random_subspace(L, 1, seed)).passed


def test_search_is_deterministic():
    L = compact("A", 2)
    a = search_lts(L, 1, 20, seed=5).to_dict()
    b = search_lts(L, 1, 20, seed=5).to_dict()
    assert a == b
    assert random_subspace(L, 2, (3, 4)) == random_subspace(L, 2, (3, 4))


def test_probe_counts_small():
    assert search_lts(compact("A", 1), 1, 50).successes == 50
    assert search_lts(compact("A", 2), 1, 50).successes == 0


def test_whole_algebra_and_torus():
    L = compact("B", 2)
    assert is_lie_triple_system(L, Subspace.whole(L.dimension)).passed
    assert is_lie_triple_system(L, Subspace.coordinate(L.cartan_indices, L.dimension)).passed


def test_invalid_arguments():
    L = compact("A", 2)
    with pytest.raises(ValueError):
        random_subspace(L, 0, 1)
    with pytest.raises(ValueError):
        search_lts(L, 1, 0)
    with pytest.raises(ValueError):
        is_lie_triple_system(L, Subspace.whole(3))
    with pytest.raises(ValueError):
        is_lie_triple_system(L, Subspace.whole(8), method="nope")
