import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from pcfactor.cli import main
from pcfactor.formats import parse_ecg

from conftest import FIXTURES

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def result(capsys, *argv):
    code, out = run(capsys, *argv)
    data = json.loads(out)
    jsonschema.validate(data, json.loads((SCHEMAS / "result.schema.json").read_text()))
    return code, data


def test_find_positive(capsys):
    code, data = result(capsys, "find", FIXTURES / "fig1.ecg", "--verify")
    assert code == 0 and data["verdict"] == "yes"
    assert len(data["payload"]["factor"]) == 3


def test_find_negative_with_replay(capsys, tmp_path):
    code, data = result(capsys, "find", FIXTURES / "star.ecg", "--verify")
    assert code == 3 and data["verdict"] == "no"
    assert data["payload"]["palette"] == {"S": [], "T": {}, "W": {}}
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps(data))
    code, replay = result(capsys, "certify", FIXTURES / "star.ecg", "--certificate", cert)
    assert code == 3 and replay["diagnostics"] == ["certificate replay: ok"]


def test_forged_certificate_is_rejected(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps({"kind": "negative", "palette": {"S": [], "T": {}, "W": {}},
                                "X": [], "odd_count": 0, "x_size": 0}))
    code, data = result(capsys, "certify", FIXTURES / "fig1.ecg", "--certificate", cert)
    assert code == 1 and data["verdict"] == "invalid"


def test_missing_file_and_parse_error(capsys, tmp_path):
    code, data = result(capsys, "find", tmp_path / "nope.ecg")
    assert code == 2 and data["verdict"] == "error"
    bad = tmp_path / "bad.ecg"
    bad.write_text("colours 2\nvertex a f=x\n")
    code, data = result(capsys, "find", bad)
    assert code == 2 and "line 2" in data["diagnostics"][0]


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["equiv", "--n", "x"])
    assert info.value.code == 2


def test_gadget_outputs(capsys):
    code, out = run(capsys, "gadget", FIXTURES / "fig1.ecg", "--coloured")
    g, _ = parse_ecg(out)
    assert code == 0 and len(g.vertices) == 22 and len(g.edges) == 32
    code, out2 = run(capsys, "gadget", FIXTURES / "fig1.ecg", "--coloured")
    assert out == out2
    code, out = run(capsys, "gadget", FIXTURES / "k2.ecg", "--plain")
    g, _ = parse_ecg(out)
    assert len(g.vertices) == 2
    code, out = run(capsys, "gadget", FIXTURES / "fig1.ecg", "--format", "dot")
    assert out.startswith("graph gadget")


def test_gadget_infeasible(capsys, tmp_path):
    path = tmp_path / "inf.ecg"
    path.write_text("colours 1\nvertex a f=2\nvertex b f=1\nedge a b 1\n")
    code, data = result(capsys, "gadget", path)
    assert code == 3 and data["payload"]["kind"] == "infeasible_degree"


def test_tutte(capsys):
    code, data = result(capsys, "tutte", FIXTURES / "fig1.ecg")
    assert code == 0 and data["payload"]["f_factor"]
    code, data = result(capsys, "tutte", FIXTURES / "star.ecg")
    assert code == 3  # f sums to 5, so no f-factor even without colours
    assert data["payload"]["deficient_pair"]["gamma"] < 0
    code, data = result(capsys, "tutte", FIXTURES / "k2.ecg", "--variant", "printed")
    assert code == 4 and data["verdict"] == "divergence"


def test_reduce_and_solve(capsys, tmp_path):
    out = tmp_path / "k43.ecg"
    code, data = result(capsys, "reduce", FIXTURES / "k43.hg", "--target", "rc", "--r", "2", "-o", out)
    g, f = parse_ecg(out.read_text())
    assert len(g.vertices) == 40 and g.k == 3
    code, data = result(capsys, "solve", out, "--mode", "rc", "--r", "2")
    assert code == 3 and data["verdict"] == "no"
    out9 = tmp_path / "p9.ecg"
    run(capsys, "reduce", FIXTURES / "positive9.hg", "--target", "rc", "-o", out9)
    code, data = result(capsys, "solve", out9, "--mode", "rc", "--r", "2")
    assert code == 0 and data["payload"]["factor"]
    code, data = result(capsys, "solve", out9, "--mode", "rc", "--r", "2", "--max-nodes", "0")
    assert code == 5 and data["verdict"] == "cap"


def test_reduce_d2c_and_not_regular(capsys, tmp_path):
    out = tmp_path / "d.ecg"
    run(capsys, "reduce", FIXTURES / "k43.hg", "--target", "d2c", "-o", out)
    g, _ = parse_ecg(out.read_text())
    assert len(g.vertices) == 76
    code, data = result(capsys, "solve", out, "--mode", "d2c", "--r", "2")
    assert code == 3
    code, data = result(capsys, "reduce", FIXTURES / "k43.hg", "--target", "rc", "--r", "3")
    assert code == 2


def test_solve_pc(capsys):
    code, data = result(capsys, "solve", FIXTURES / "fig1.ecg", "--mode", "pc")
    assert code == 0


def test_kneser(capsys):
    code, out = run(capsys, "kneser", "--n", "5", "--k", "2")
    data = json.loads(out)
    assert len(data["vertices"]) == 10 and len(data["edges"]) == 15
    code, out = run(capsys, "kneser", "--canonical", "3", "--format", "ecg")
    assert parse_ecg(out) == parse_ecg((FIXTURES / "petersen-canonical.ecg").read_text())


def test_equiv(capsys):
    code, data = result(capsys, "equiv", "--n", "3", "--k", "2", "--fmax", "2")
    assert code == 0 and data["payload"]["suite_a"]["divergences"] == 0
    code, data = result(capsys, "equiv", "--n", "4", "--sample", "50")
    assert code == 0 and set(data["payload"]["suite_b"]) == {"literal", "parity"}
    code, data = result(capsys, "equiv", "--n", "0")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pcfactor", "check", str(FIXTURES / "fig1.ecg")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["proper"] is False
