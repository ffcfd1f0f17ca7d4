import json
import subprocess
import sys

import pytest

from hilbfock.cli import build_parser, main, quasimodular_specs, run


def invoke(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_identity_counts_pairs(capsys):
    code, doc = invoke(capsys, "identity", "--max-size", "3")
    assert code == 0 and doc["pass"]
    assert doc["result"] == {"pairs_checked": 49, "failures": []}


def test_correlation_matches_the_fixture(capsys):
    code, doc = invoke(capsys, "correlation", "--ks", "1,3", "--order", "6")
    coeffs = doc["result"]["coefficients"]
    assert coeffs[2] == "1/2*m^4 - 5/2*m^2 + 2"
    assert coeffs[3] == "-3/2*m^6 + 21*m^4 - 147/2*m^2 + 54"


def test_correlation_fit(capsys):
    code, doc = invoke(capsys, "correlation", "--ks", "2", "--order", "12", "--fit")
    assert code == 0 and doc["result"]["fit"]["m_degree"] <= doc["result"]["fit"]["m_degree_bound"]


def test_jack(capsys):
    code, doc = invoke(capsys, "jack", "--partition", "2")
    assert code == 0
    assert doc["result"]["jack"] == [["2", "-t1^2*t2"], ["1,1", "t1^2*t2^2"]]


def test_fit_builtin_and_file(capsys, tmp_path):
    code, doc = invoke(capsys, "fit", "--series", "theta-w3", "--max-weight", "2", "--order", "10")
    assert code == 0 and doc["result"]["coefficients"] == {"E2": "-1"}
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"coefficients": ["1", "-1", "-1", "0", "0", "1", "0", "1", "0", "0"]}))
    code, doc = invoke(capsys, "fit", "--series", str(path), "--max-weight", "4", "--order", "9")
    assert code == 1 and not doc["pass"]
    assert doc["checks"][0]["counterexample"].startswith("mismatch")


def test_nekrasov(capsys):
    code, doc = invoke(capsys, "nekrasov", "--k", "2", "--m", "3", "--order", "9", "--check-modular")
    assert code == 0
    assert doc["result"]["series"] == "-16*q + 128*q^5 - 320*q^9 + O(q^10)"


def test_gtheta_and_wedge(capsys):
    assert invoke(capsys, "gtheta", "--m", "0", "--order", "3")[0] == 0
    code, doc = invoke(capsys, "wedge-check", "--energy", "3", "--clifford-energy", "3")
    assert code == 0
    assert doc["result"]["literal_2d_plus_h0_vs_odd_degree"]["holds"] is False


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["identity", "--bogus"])
    assert exc.value.code == 2


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "hilbfock", "gtheta", "--m", "0", "--order", "2"], capture_output=True, text=True
    )
    assert out.returncode == 0 and json.loads(out.stdout)["pass"]


def test_output_file_and_config_echo(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, text = run(["identity", "--max-size", "2", "--jobs", "2", "--output", str(path)])
    assert capsys.readouterr().out == ""
    doc = json.loads(path.read_text())
    assert path.read_text() == text
    assert doc["config"] == {"diagonal": None, "max_size": 2}
    assert "timings" not in doc


def test_repeat_runs_are_identical(capsys):
    first = run(["identity", "--max-size", "3", "--diagonal", "4"])[1]
    second = run(["identity", "--max-size", "3", "--diagonal", "4", "--jobs", "3"])[1]
    capsys.readouterr()
    assert first == second


def test_quasimodular_specs():
    specs = quasimodular_specs()
    assert () in specs and (1, 3) in specs and (4, 4) in specs
    assert all(sum(ks) % 2 == 0 and len(ks) <= 2 and max(ks, default=0) <= 4 for ks in specs)
