import json
import subprocess
import sys

import pytest

from lieindex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,expected", [(("E", "8"), "248"), (("B", "5"), "55"),
                                           (("A", "1"), "3")])
def test_dim(capsys, argv, expected):
    code, out, _ = run(capsys, "dim", *argv)
    assert code == 0 and out.strip() == expected


def test_dim_invalid_type(capsys):
    code, out, err = run(capsys, "dim", "Q", "3")
    assert code == 2 and not out and "error" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "table9"])
    assert exc.value.code == 2


def test_report_fields_and_determinism(capsys):
    code, out, _ = run(capsys, "verify", "row", "e6-f4", "--timestamp", "T")
    rep = json.loads(out)
    assert code == 0
    assert list(rep) == ["tool_version", "timestamp", "invocation", "results", "overall"]
    assert rep["overall"] == "pass"
    (cons,) = [r for r in rep["results"] if r["check"] == "table3_construction"]
    assert cons["details"][0]["codim"] == 26
    _, out2, _ = run(capsys, "verify", "row", "e6-f4", "--timestamp", "T")
    assert out == out2


def test_verify_unknown_row(capsys):
    code, _, err = run(capsys, "verify", "row", "nope")
    assert code == 2 and "unknown row id" in err


def test_verify_table1_small_ceiling(capsys):
    code, out, _ = run(capsys, "verify", "table1", "--rank-ceiling", "4")
    rep = json.loads(out)
    assert code == 0
    t1v2 = [r for r in rep["results"] if r["check"] == "table1_vs_table2"][0]
    assert t1v2["rows"] == 12


def test_verify_table_row(capsys):
    code, out, _ = run(capsys, "verify", "row", "T1.12")
    rep = json.loads(out)
    assert code == 0 and rep["results"]
    rows = {d["row"].split("[")[0].split("/")[0] for r in rep["results"] for d in r["details"]}
    assert rows == {"T1.12"}


def test_lts_search_examples(capsys):
    code, out, _ = run(capsys, "lts-search", "A", "1", "--codim", "1", "--trials", "100",
                       "--seed", "1", "--expect", "100")
    assert code == 0 and json.loads(out)["results"][0]["details"][0]["successes"] == 100
    code, out, _ = run(capsys, "lts-search", "A", "2", "--codim", "1", "--trials", "100",
                       "--seed", "1", "--expect", "0")
    assert code == 0
    code, out, _ = run(capsys, "lts-search", "A", "2", "--codim", "1", "--trials", "5",
                       "--expect", "5")
    rep = json.loads(out)
    assert code == 1 and rep["overall"] == "fail"
    fail = rep["results"][0]["failures"][0]
    assert fail["module"] == "lts" and fail["operation"] == "search_lts" and fail["row"]


def test_lts_search_manifest_subspace(capsys):
    code, out, _ = run(capsys, "lts-search", "G", "2", "--codim", "6", "--trials", "1",
                       "--seed", "0", "--subspace-from", "manifest:g2-su3")
    assert code == 0 and json.loads(out)["overall"] == "pass"


def test_lts_search_bad_codim(capsys):
    code, _, err = run(capsys, "lts-search", "A", "1", "--codim", "3")
    assert code == 2 and "codim" in err


def test_lts_check_named(capsys):
    code, out, _ = run(capsys, "lts-check", "su3-cartan", "so-odd-bds", "--rank", "3")
    rep = json.loads(out)
    assert code == 0 and rep["results"][0]["rows"] == 2


def test_killing_and_jacobi(capsys):
    code, out, _ = run(capsys, "killing", "G", "2")
    assert code == 0 and json.loads(out)["results"][0]["details"][0]["negative_definite"]
    code, out, _ = run(capsys, "jacobi-check", "B", "3", "--form", "chevalley")
    assert code == 0 and json.loads(out)["results"][0]["details"][0]["mode"] == "exhaustive"


def test_roots_and_markdown(capsys):
    code, out, _ = run(capsys, "roots", "G", "2", "--format", "markdown")
    assert code == 0 and out.startswith("# lieindex report (PASS)")
    assert "(3, 2)" in out


def test_tables_dump(capsys):
    code, out, _ = run(capsys, "tables", "dump")
    assert code == 0 and out.count("\n") >= 46
    code, out, _ = run(capsys, "tables", "dump", "--format", "json")
    assert len(json.loads(out)) == 46


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lieindex", "dim", "G", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "14"
