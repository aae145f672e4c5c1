import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from khfk.algebra import parse_polynomial
from khfk.cli import GOLDEN_SECTIONS, golden_text, run

GOLDEN = Path(__file__).parent / "golden"
DATA = Path(__file__).parents[1] / "src" / "khfk" / "data"


def call(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(list(argv), out)
    text = out.getvalue()
    return code, json.loads(text), text


def poly_of(doc, variables):
    return parse_polynomial(doc["text"], variables)


def test_khr_trefoil_from_file():
    code, doc, _ = call("khr", "--pd", str(DATA / "trefoil.pd"), "--coeff", "Q")
    assert code == 0
    assert doc["schema"] == 1 and doc["command"] == "khr"
    assert poly_of(doc["result"]["poincare"], ("q", "u")) == \
        parse_polynomial("q^2 + q^6u^2 + q^8u^3", ("q", "u"))
    assert doc["result"]["delta"] == {"2": 3}
    assert doc["meta"]["coefficient_path"] == "field"


def test_pd_from_stdin(monkeypatch):
    code, doc, _ = call("kh", "--pd", "-", stdin="X[1,2,2,1]\n", monkeypatch=monkeypatch)
    assert code == 0
    assert doc["result"]["poincare"]["text"] == "q + q^{-1}"


def test_kh_integral_paths():
    code, doc, _ = call("kh", "--knot", "trefoil", "--coeff", "Z")
    assert code == 0
    assert doc["result"]["torsion"] == [{"orders": [2], "q": 7, "u": 3}]
    assert doc["meta"]["coefficient_path"] == "snf"
    code, doc, _ = call("kh", "--knot", "trefoil", "--coeff", "Z", "--integral", "ucf",
                        "--primes", "2", "3")
    assert doc["result"]["torsion"] == [{"orders": [2], "q": 7, "u": 3}]
    assert doc["meta"]["coefficient_path"] == "ucf:2,3"


def test_hfk11_delta_row():
    code, doc, _ = call("hfk11", "-p", "11", "-q", "3", "-r", "3", "-s", "2", "--delta")
    assert code == 0
    assert doc["result"]["delta"]["text"] == "3δ^{-1} + 8δ^{-2}"
    assert doc["result"]["tau"] == -1
    assert doc["result"]["rank"] == 11


def test_staircase_t45():
    code, doc, _ = call("staircase", "--torus", "4", "5")
    assert code == 0
    assert poly_of(doc["result"]["table"]["poincare"], ("t", "u")) == parse_polynomial(
        "t^6 + t^5u^{-1} + t^2u^{-2} + u^{-5} + t^{-2}u^{-6} + t^{-5}u^{-11} + t^{-6}u^{-12}",
        ("t", "u"))


@pytest.mark.parametrize("argv, key, value", [
    (("s", "--knot", "trefoil_left"), "s", -2),
    (("sig", "--torus", "3", "4"), "signature", 6),
    (("det", "--knot", "figure_eight"), "determinant", 5),
    (("tau", "--torus", "3", "4"), "tau", 3),
    (("tau", "-p", "3", "-q", "1", "-r", "0", "-s", "1"), "tau", -1),
])
def test_scalar_commands(argv, key, value):
    code, doc, _ = call(*argv)
    assert code == 0
    assert doc["result"][key] == value


def test_jones_and_alex():
    _, doc, _ = call("jones", "--braid", "1,1,1", "--strands", "2")
    assert doc["result"]["reduced"]["text"] == "-q^8 + q^6 + q^2"
    _, doc, _ = call("alex", "--pretzel", "-3", "5", "7")
    assert doc["result"]["alexander"]["text"] == "1"


def test_fk_check_verdicts():
    _, doc, _ = call("fk-check", "--knot", "trefoil")
    assert doc["result"]["verdict"] == "holds"
    _, doc, _ = call("fk-check", "--torus", "4", "5")
    assert doc["result"]["verdict"] == "fails condition 1 only"
    assert (doc["result"]["hfk_rank"], doc["result"]["khr_rank"]) == (7, 9)
    _, doc, _ = call("fk-check", "--knot", "knot_5_2", "--lspace")
    assert doc["error"]["type"] == "StaircaseError"


def test_fk_check_detects_wrong_hfk_source():
    code, doc, _ = call("fk-check", "--knot", "figure_eight", "--hfk11", "3", "1", "0", "2")
    assert code == 3
    assert "not the same knot" in doc["error"]["message"]


@pytest.mark.parametrize("argv, code, kind", [
    (("kh", "--pd-text", "X[1,2,3]"), 2, "parse"),
    (("kh",), 2, "parse"),
    (("kh", "--knot", "trefoil", "--torus", "2", "3"), 2, "parse"),
    (("bogus",), 2, "parse"),
    (("hfk11", "-p", "17", "-q", "7", "-r", "1", "-s", "2"), 2, "parse"),
    (("hfk11", "-p", "5", "-q", "3", "-r", "0", "-s", "0"), 2, "parse"),
    (("staircase", "--alexander", "2t - 3 + 2t^{-1}"), 2, "parse"),
    (("khr", "--knot", "trefoil", "--coeff", "Z/4"), 2, "parse"),
    (("kh", "--pd", "/nonexistent.pd"), 2, "parse"),
    (("s", "--knot", "hopf"), 2, "parse"),
    (("kh", "--knot", "t4_7"), 4, "resource"),
    (("kh", "--knot", "t4_5", "--max-objects", "10"), 4, "resource"),
    (("kh", "--knot", "t3_4", "--method", "cube", "--max-crossings", "5"), 4, "resource"),
])
def test_error_documents(argv, code, kind):
    c, doc, _ = call(*argv)
    assert c == code
    assert doc["schema"] == 1
    assert doc["error"]["kind"] == kind


def test_output_is_deterministic_and_sorted():
    _, _, a = call("hfk11", "-p", "13", "-q", "4", "-r", "2", "-s", "1", "--delta")
    _, _, b = call("hfk11", "-p", "13", "-q", "4", "-r", "2", "-s", "1", "--delta")
    strip = lambda t: {k: v for k, v in json.loads(t).items() if k != "meta"}
    assert strip(a) == strip(b)
    assert a.count("\n") == 1
    doc = json.loads(a)
    assert list(doc) == sorted(doc)


def test_pretty_output():
    _, _, text = call("det", "--knot", "trefoil", "--pretty")
    assert text.startswith("{\n  ")


def test_jobs_flag_and_env(monkeypatch):
    _, a, _ = call("kh", "--knot", "t3_4", "--coeff", "Z", "--jobs", "2")
    monkeypatch.setenv("KHFK_JOBS", "2")
    _, b, _ = call("kh", "--knot", "t3_4", "--coeff", "Z")
    _, c, _ = call("kh", "--knot", "t3_4", "--coeff", "Z", "--jobs", "1")
    assert a["result"] == b["result"] == c["result"]


@pytest.mark.parametrize("section", GOLDEN_SECTIONS)
def test_golden_files_are_current(section):
    assert (GOLDEN / f"{section}.json").read_text(encoding="utf-8") == golden_text(section)


def test_paper_tables_check_mode(tmp_path):
    code, doc, _ = call("paper-tables", "--section", "hfk_polynomials", "--out", str(tmp_path))
    assert code == 0 and "seconds" not in doc["meta"]
    code, doc, _ = call("paper-tables", "--section", "hfk_polynomials", "--check", str(tmp_path))
    assert code == 0 and doc["meta"]["golden_diffs"] == []
    (tmp_path / "hfk_polynomials.json").write_text("{}\n", encoding="utf-8")
    code, doc, _ = call("paper-tables", "--section", "hfk_polynomials", "--check", str(tmp_path))
    assert code == 3


def test_selftest_passes():
    code, doc, _ = call("selftest")
    assert code == 0
    assert doc["result"]["failed"] == 0
    names = {c["knot"] for c in doc["result"]["checks"]}
    assert {"trefoil", "t4_5", "pretzel_m3_5_7"} <= names


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "khfk", "det", "--knot", "knot_5_2"],
                       capture_output=True, text=True, check=False)
    assert p.returncode == 0
    assert json.loads(p.stdout)["result"]["determinant"] == 7
