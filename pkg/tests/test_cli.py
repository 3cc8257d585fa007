import io
import json
import subprocess
import sys

import pytest

from intconj import fixtures
from intconj.cli import run_command

PROBLEM = str(fixtures.path("problem_x2p5.json"))
CATALOG = str(fixtures.path("catalogs/x2p5.json"))
RAY = "x^4 - 12x^3 + 158x^2 + 228x + 3721"


def run(*argv):
    buf = io.StringIO()
    code, doc = run_command(list(argv), buf)
    return code, doc, buf.getvalue()


def test_test_z_not_conjugate():
    code, doc, _ = run("test-z", PROBLEM)
    assert code == 0 and doc["verdict"] == "NotConjugate"


def test_test_zp_certificates():
    code, doc, _ = run("test-zp", "-p", "2,5", PROBLEM)
    assert code == 0
    assert [r["verdict"] for r in doc["results"]] == ["Conjugate", "Conjugate"]
    assert all(all(r["checks"].values()) for r in doc["results"])


def test_test_local_and_classify():
    code, doc, _ = run("test-local", PROBLEM)
    assert code == 0 and doc["verdict"] == "Conjugate"
    code, doc, _ = run("classify", "--poly", "5,0,1")
    assert code == 0 and doc["class_count"] == 2


def test_lm_ideal_document():
    code, doc, _ = run("lm-ideal", PROBLEM)
    assert code == 0 and set(doc["ideals"]) == {"A", "B"}


def test_output_is_byte_identical():
    outs = {run("test-ext", PROBLEM, CATALOG, "--entry", RAY)[2] for _ in range(2)}
    assert len(outs) == 1


def test_test_ext_then_verify(tmp_path):
    code, doc, text = run("test-ext", PROBLEM, CATALOG, "--entry", RAY)
    assert code == 0 and doc["verdict"] == "Conjugate"
    cert = tmp_path / "cert.json"
    cert.write_text(text)
    code, doc, _ = run("verify", str(cert), PROBLEM, "--catalog", CATALOG)
    assert code == 0 and doc["verified"] is True


def test_verify_rejects_tampered_certificate(tmp_path):
    _, doc, _ = run("test-zp", "-p", "2", PROBLEM)
    cert = doc["results"][0]
    num, den = cert["C"][0][0]
    cert["C"][0][0] = [str(int(num) + 2 * int(den)), den]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(cert))
    code, doc, _ = run("verify", str(path), PROBLEM)
    assert code == 1 and doc["verified"] is False


def test_inconclusive_exit_code():
    code, doc, _ = run("test-ext", PROBLEM, CATALOG)  # first entry: f splits
    assert code == 2 and doc["verdict"] == "Inconclusive"


def test_search_ext():
    code, doc, _ = run("search-ext", PROBLEM, CATALOG, "--route-split")
    assert code == 0
    assert [o["status"] for o in doc["outcomes"]] == ["FailIrreducible", "Pass"]
    assert doc["first_pass"] == RAY and doc["problem"] == "problem_x2p5"


def test_obstruct_split():
    code, doc, _ = run("obstruct-split", PROBLEM, CATALOG, "--ideal", "B", "--direction", "1,1,-1,4")
    assert code == 2
    ob = doc["result"]["details"]["obstruction"]
    assert ob["snf_diagonal"] == [2, 2, 10, 10]
    assert ob["norm_poly"] == [1, 10, 270, 700, 500]
    assert ob["surviving_k"] == [0]


def test_reproduce_tables_subset(tmp_path):
    table = json.loads(fixtures.path("table1.json").read_text())
    table["rows"] = table["rows"][:2]
    path = tmp_path / "t.json"
    path.write_text(json.dumps(table))
    code, doc, _ = run("reproduce-tables", str(path))
    assert code == 0 and doc["all_pass"]
    assert [r["extension"]["verdict"] for r in doc["rows"]] == ["Conjugate", "Conjugate"]


def test_reproduce_tables_reports_mismatch(tmp_path):
    table = json.loads(fixtures.path("table1.json").read_text())
    table["rows"] = table["rows"][:1]
    table["rows"][0]["h"] = 3
    path = tmp_path / "t.json"
    path.write_text(json.dumps(table))
    code, doc, _ = run("reproduce-tables", str(path))
    assert code == 1 and not doc["all_pass"]


@pytest.mark.parametrize("argv", [
    ["test-z", "/no/such/file.json"],
    ["nonsense"],
    ["test-ext", PROBLEM, CATALOG, "--entry", "missing"],
])
def test_errors_exit_1(argv):
    code, doc, _ = run(*argv)
    assert code == 1 and doc is None


def test_inconsistent_problem(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"f": [6, 0, 1], "A": [[0, 1], [-5, 0]], "B": [[0, 1], [-5, 0]]}))
    assert run("test-z", str(path))[0] == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "intconj", "test-z", PROBLEM], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["verdict"] == "NotConjugate"
    assert res.stdout == run("test-z", PROBLEM)[2]
