import pytest
from hypothesis import given, strategies as st

from lieindex.manifest import ManifestError, load_manifest, parse_manifest
from lieindex.tables import (TableFormatError, by_table, d_values, descriptor_dimension,
                             dump_tables, evaluate, load_tables, parse_tables, run_table_checks,
                             simple_type)


@pytest.fixture(scope="module")
def rows():
    return load_tables()


def test_round_trip(rows):
    assert parse_tables(dump_tables(rows)) == rows


def test_row_counts(rows):
    assert [len(by_table(rows, t)) for t in (1, 2, 3, 4)] == [12, 12, 9, 13]


def test_all_table_checks_pass(rows):
    for res in run_table_checks(rows):
        assert res.passed, res.failures()


@pytest.mark.parametrize("text,dim", [
    ("E_{6}", 78), ("E_{7}", 133), ("E_{8}", 248), ("F_{4}", 52), ("G_{2}", 14),
    ("SU_{2}", 3), ("SU_{3}", 8), ("Spin_{5}", 10), ("S(U_{3}U_{1})", 9),
    ("SO_{5}/SO_{2}SO_{3}", 6), ("E_{7}Sp_{1}", 136), ("E_{6}U_{1}", 79),
])
def test_descriptor_dimensions(text, dim):
    assert descriptor_dimension(text) == dim


@pytest.mark.parametrize("row_id,dim,value", [
    ("T4.8", 42, 14), ("T4.9", 70, 27), ("T4.10", 128, 56), ("T4.5", 54, 22),
    ("T4.11", 40, 12), ("T4.12", 64, 24), ("T4.13", 112, 48),
])
def test_literal_table4_rows(rows, row_id, dim, value):
    row = {r.row_id: r for r in rows}[row_id]
    assert descriptor_dimension(row.space) == dim == row.dim()
    assert dim - descriptor_dimension(row.sigma_list[0]) == value == row.value()


@given(st.integers(1, 20))
def test_sp_rr_dimension(r):
    assert descriptor_dimension("Sp_{r,r}/Sp_{r}Sp_{r}", {"r": r}) == 4 * r * r


def test_simple_type():
    assert simple_type("Spin_{2*r+1}", {"r": 4}) == ("B", 4)
    assert simple_type("so_{2*r}", {"r": 3}) == ("D", 3)
    with pytest.raises(TableFormatError):
        simple_type("SU_{2}SU_{2}")


def test_d_values(rows):
    d = d_values(rows)
    assert d[("E", 6)] == 26 and d[("G", 2)] == 6 and d[("A", 1)] == 2


def test_evaluate_is_restricted():
    assert evaluate("r*(2*r+1)", {"r": 3}) == 21
    assert evaluate("r>=3 and k>=1", {"r": 3, "k": 1}) is True
    with pytest.raises(TableFormatError):
        evaluate("__import__('os')")
    with pytest.raises(TableFormatError):
        evaluate("q+1", {})


def test_parse_errors():
    with pytest.raises(TableFormatError):
        parse_tables("T9.1\t1\t1\tSU_{2}\t-\n")
    with pytest.raises(TableFormatError):
        parse_tables("T9.1\t1\t1\tSU_{2}\tSU_{2}\t3\t5\t-\n")  # value exceeds dim


def test_manifest_consistency():
    man = load_manifest()
    assert len(man.subalgebras) == 9
    assert {e.table3_row for e in man.subalgebras.values()} == {f"T3.{i}" for i in range(1, 10)}
    t1_rows = {r for tm in man.tangent_models for r in tm.rows if r.startswith("T1")}
    assert t1_rows == {f"T1.{i}" for i in range(1, 13)}


def test_manifest_rejects_bad_version():
    with pytest.raises(ManifestError):
        parse_manifest({"format_version": 99})


def test_manifest_rejects_unknown_reference():
    doc = {"format_version": 1, "involutions": {}, "subalgebras": {},
           "tangent_models": [{"rows": ["T1.1"], "sigma": "x", "model": "involution:nope:m"}]}
    with pytest.raises(ManifestError):
        parse_manifest(doc)
