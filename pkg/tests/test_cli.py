import io
import json

import pytest

from albtwist.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv,code", [
    (["predict", "--n", "3", "--d", "2", "--m", "3"], 0),
    (["predict", "--n", "5", "--d", "2", "--m", "1"], 1),
    (["predict", "--n", "7", "--d", "2", "--m", "1"], 3),
    (["construct", "--f", "y^2-x^3-1", "--n", "2", "--m", "2"], 0),
    (["construct", "--f", "y^2-x^3-", "--n", "2", "--m", "2"], 2),
    (["verify", "membership", "--f", "x^3+y^2+1", "--n", "3", "--m", "2"], 0),
    (["verify", "membership", "--f", "x^3+y^2+1", "--n", "3", "--m", "2", "--corrupt", "scale", "--index", "2"], 1),
    (["verify", "cm", "--target", "E_rho"], 0),
    (["verify", "isogeny", "--target", "E1", "--ell", "2"], 0),
    (["verify", "split", "--target", "C2"], 1),
    (["probe", "--target", "E_rho", "--prime", "7", "--n", "3"], 0),
    (["probe", "--target", "E_rho", "--prime", "3", "--n", "3"], 3),
    (["catalog", "list"], 0),
    (["catalog", "show", "E_tau"], 3),
    (["dual", "--cubic", "fermat_cubic"], 0),
    (["dual", "--cubic", "u2*u0^2 - u1^3 - u1^2*u0"], 3),
    (["frobnicate"], 2),
])
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_error_streams():
    code, out, err = call("construct", "--f", "x^^2", "--n", "2", "--m", "1")
    assert code == 2 and "parse error" in err and not out
    code, _, err = call("catalog", "show", "E_tau")
    assert "E_rho" in err


def test_json_report(tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = call("--json", str(path), "probe", "--target", "E_rho", "--prime", "13", "--prime", "7", "--n", "3")
    assert code == 0 and out
    doc = json.loads(path.read_text())
    assert doc["command"][0] == "probe" and "--json" not in doc["command"]
    assert "timing" not in json.dumps(doc)
    timed = tmp_path / "t.json"
    call("--json", str(timed), "--timing", "probe", "--target", "E_rho", "--prime", "7", "--n", "3")
    assert "seconds" in json.dumps(json.loads(timed.read_text()))


def test_json_deterministic_in_process(tmp_path):
    argv = ["construct", "--f", "x^2+y^3+1", "--n", "3", "--m", "2"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    call("--json", str(a), *argv)
    call("--json", str(b), *argv)
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text() == json.dumps(json.loads(a.read_text()), sort_keys=True, indent=2) + "\n"
