import json
import subprocess
import sys

import jsonschema
import pytest

from detfacet.cli import EXIT_DATA, EXIT_IO, EXIT_USAGE, main
from detfacet.formats import render_complex
from detfacet.harness import bsv_fixture, load_schema


@pytest.fixture
def files(tmp_path):
    out = {
        "bsv": render_complex(bsv_fixture()),
        "claw": "4\n1 4\n2 4\n3 4\n",
        "full": "4 2\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n",
        "e1323": "3 1\n1 3\n2 3\n",
        "single": "5 2\n1 2 3\n",
        "empty": "3 1\n",
        "bad": "3 1\n1 2\n1 x\n",
    }
    paths = {}
    for k, text in out.items():
        paths[k] = tmp_path / f"{k}.txt"
        paths[k].write_text(text)
    paths["dir"] = tmp_path
    return paths


def run(argv, capsys):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr()


def test_classify_bsv(files, capsys):
    out_json = files["dir"] / "c.json"
    code, cap = run(["classify", files["bsv"], "--perm-budget", "20000", "--json", out_json], capsys)
    assert code == 0
    assert "poor_closed_lab: true" in cap.out and "closed_lab: false" in cap.out and "unit_lab: false" in cap.out
    data = json.loads(out_json.read_text())
    lab = data["results"][0]["labelled"]
    assert lab["poor_closed"] and not lab["closed"] and not lab["unit"]
    assert data["results"][0]["exists"]["closed"]["outcome"] == "BudgetExceeded"


def test_classify_empty_and_claw(files, capsys):
    code, cap = run(["classify", files["empty"]], capsys)
    assert code == 0 and "degenerate" in cap.out
    assert "false" not in cap.out.split("exists")[0]
    code, cap = run(["classify", files["claw"], "--d", "1", "--json", "-"], capsys)
    data = json.loads(cap.out[cap.out.index("{"):])
    assert data["results"][0]["exists"]["proper"]["outcome"] == "ExhaustedNone"


def test_gb_check(files, capsys):
    code, cap = run(["gb-check", files["full"]], capsys)
    assert code == 0 and "GB: true" in cap.out
    code, cap = run(["gb-check", files["single"]], capsys)
    assert "GB: true" in cap.out
    code, cap = run(["gb-check", files["e1323"], "--json", "-"], capsys)
    assert "GB: false" in cap.out and "remainder" in cap.out
    data = json.loads(cap.out[cap.out.index("{"):])
    assert data["failing_pair"]["remainder"] != "0"


def test_gb_check_completion_cap(files, capsys):
    code, cap = run(["gb-check", files["e1323"], "--complete", "--gb-cap", "1"], capsys)
    assert "completion: 3 elements" in cap.out
    code, cap = run(["gb-check", files["claw"], "--complete", "--gb-cap", "1", "--json", "-"], capsys)
    data = json.loads(cap.out[cap.out.index("{"):])
    assert data["completion"]["status"] == "cap_exceeded"


def test_gb_check_mod_p(files, capsys):
    code, cap = run(["gb-check", files["full"], "--field", "p=101"], capsys)
    assert code == 0 and "GF(101)" in cap.out and "mod p evidence" in cap.out
    code, cap = run(["gb-check", files["full"], "--field", "p=100"], capsys)
    assert code == EXIT_USAGE


def test_verify_examples(files, capsys):
    schema = load_schema()
    out_json = files["dir"] / "r.json"
    code, cap = run(["verify", "THM-GB-1", "--sizes", "2x3,2x4,3x4", "--json", out_json], capsys)
    assert code == 0
    jsonschema.validate(json.loads(out_json.read_text()), schema)
    code, _ = run(["verify", "LEM-DET", "--t", "1..4"], capsys)
    assert code == 0
    code, _ = run(["verify", "COR-SORT", "--exhaustive", "n=4", "d=1", "--no-persistence"], capsys)
    assert code == 0
    code, _ = run(["verify", "LEM-EQUIV", "--exhaustive", "n=4", "d=1,2", "--random", "3", "10"], capsys)
    assert code == 0


def test_verify_exit_codes(files, capsys):
    code, cap = run(["verify", "THM-MONOTONE", "--exhaustive", "n=4", "d=1"], capsys)
    assert code == 2 and "failure" in cap.out
    code, _ = run(["verify", "COR-CORONA", "--perm-budget", "3"], capsys)
    assert code == 3
    code, _ = run(["verify", "NOPE"], capsys)
    assert code == EXIT_USAGE
    code, _ = run(["verify", "LEM-DET", "--sizes", "2x3"], capsys)
    assert code == EXIT_USAGE
    code, _ = run(["verify", "LEM-DET", "--perm-budget", "0"], capsys)
    assert code == EXIT_USAGE


def test_errors(files, capsys):
    code, cap = run(["classify", files["bad"]], capsys)
    assert code == EXIT_DATA and "line 3" in cap.err
    code, _ = run(["classify", files["dir"] / "missing.txt"], capsys)
    assert code == EXIT_IO
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == EXIT_USAGE


def test_enumerate(files, capsys):
    out = files["dir"] / "graphs"
    code, _ = run(["enumerate", "4", "--out", out], capsys)
    assert code == 0 and len(list(out.iterdir())) == 11
    code, cap = run(["enumerate", "3", "--mode", "labelled"], capsys)
    assert cap.out.count("# graph") == 8
    code, cap = run(["enumerate", "7", "--filter", "forest", "--json", "-"], capsys)
    assert '"count": 37' in cap.out


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "detfacet", "gb-check", str(files["e1323"])], capture_output=True, text=True)
    assert proc.returncode == 0 and "GB: false" in proc.stdout
