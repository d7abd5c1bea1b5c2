import io
import json
import subprocess
import sys

import pytest

from hyperquat.cli import main


def run(*argv, env_seed=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_repr_lambda_e1():
    code, out, _ = run("repr", "lambda", "e1")
    assert code == 0
    assert out.splitlines() == ["[ 0 -1  0  0]", "[ 1  0  0  0]", "[ 0  0  0 -1]", "[ 0  0  1  0]"]
    code, out, _ = run("repr", "lambda", "e1", "--json")
    assert json.loads(out)["entries"][0] == ["0", "-1", "0", "0"]


def test_repr_gamma_needs_biquat_literal():
    code, _, err = run("repr", "gamma", "1+e1")
    assert code == 2 and "offset 4" in err


def test_det():
    code, out, _ = run("det", "gamma", "0+1e1+1e2+2e3 ; 1+e1+2e2+3e3", "--json")
    assert code == 0 and json.loads(out)["det"] == "180625"


def test_fib_closed_forms():
    code, out, _ = run("fib", "closed-forms", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["det_lambda_F"] == "225" and data["det_gamma_Q"] == "8410000"
    assert all(data["match"].values())


@pytest.mark.parametrize("kind, expected", [
    ("number", "13"), ("quaternion", "13+21e1+34e2+55e3"),
])
def test_fib_values(kind, expected):
    code, out, _ = run("fib", kind, "7")
    assert code == 0 and out.strip() == expected


def test_fib_equation_matrices_json():
    code, out, _ = run("fib", "equation-matrices", "1", "--json")
    data = json.loads(out)
    assert data["B"]["entries"][0] == ["0"] * 8


def test_fib_rejects_negative():
    code, _, err = run("fib", "number", "-1")
    assert code == 2


def test_solve_literals_and_json():
    code, out, _ = run("solve", "1 ; 0", "1 ; 0", "2 ; 4e3", "--json")
    assert code == 0 and json.loads(out) == {
        "kind": "unique", "rank": 8, "solution": "2 ; 4e3", "nullspace": []}
    eq = {"terms": [{"A": "1 ; 0", "B": "1 ; 0"}, {"A": "1 ; 0", "B": "1 ; 0"}], "rhs": "2 ; 0"}
    code, out, _ = run("solve", "--equation", json.dumps(eq), "--json")
    assert json.loads(out)["solution"] == "1 ; 0"


def test_solve_equation_file(tmp_path):
    eq = {"terms": [{"A": "e1 ; 0", "B": "1 ; 0"}], "rhs": "1 ; 0"}
    path = tmp_path / "eq.json"
    path.write_text(json.dumps(eq))
    code, out, _ = run("solve", "--equation", f"@{path}")
    assert code == 0 and "solution: -1e1 ; 0" in out


def test_solve_usage_errors():
    assert run("solve", "1 ; 0")[0] == 2
    assert run("solve", "--equation", "{not json")[0] == 2


def test_collapse():
    assert run("collapse", "1 ; e1")[1].strip() == "0"
    assert run("collapse", "0 ; 1")[1].strip() == "e1"


def test_parse_error_json():
    code, _, err = run("repr", "lambda", "1++e1", "--json")
    assert code == 2
    e = json.loads(err)["error"]
    assert e["kind"] == "parse" and e["offset"] == 2 and "unit" in e["expected"]


def test_usage_error_json():
    code, _, err = run("nope", "--json")
    assert code == 2 and json.loads(err)["error"]["kind"] == "usage"


def test_verify_subset_and_exit_codes():
    code, out, _ = run("verify", "prop_1_1_lambda_multiplicative", "thm_2_7_ii",
                       "--trials", "5", "--json")
    data = json.loads(out)
    assert code == 0
    assert [r["status"] for r in data] == ["holds", "fails"]
    assert run("verify", "bogus")[0] == 2


def test_verify_exit_3_when_expected_identity_breaks(monkeypatch):
    from hyperquat import identities
    monkeypatch.setitem(identities.CATALOG, "prop_2_3_gamma_multiplicative",
                        identities.CATALOG["thm_2_7_ii"].__class__(
                            "prop_2_3_gamma_multiplicative",
                            identities.CATALOG["thm_2_7_ii"].check))
    code, _, _ = run("verify", "prop_2_3_gamma_multiplicative", "--trials", "3")
    assert code == 3


def test_seed_env_override(monkeypatch):
    monkeypatch.setenv("HYPERQUAT_SEED", "5")
    _, out, _ = run("verify", "thm_2_7_ii", "--trials", "2", "--json")
    assert json.loads(out)[0]["seed"] == 5
    _, out, _ = run("verify", "thm_2_7_ii", "--trials", "2", "--seed", "9", "--json")
    assert json.loads(out)[0]["seed"] == 9


def test_verify_list():
    code, out, _ = run("verify", "--list", "--json")
    assert code == 0 and "prop_2_3_gamma_multiplicative" in json.loads(out)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hyperquat", "collapse", "0 ; 1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "e1"
