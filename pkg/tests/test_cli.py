import json

import pytest

from qplane.cli import main, run_check_all, suite_confluence, suite_hopf
from qplane.reports import merge_reports, write_json


def test_normalize_exit_codes(capsys):
    assert main(["normalize", "-p", "LIE", "X*Y"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "Y*X + h*Y"
    assert main(["normalize", "-p", "LIE", "Z"]) == 2
    assert main(["normalize", "-p", "NOPE", "X"]) == 2


def test_normalize_tensor(capsys):
    assert main(["normalize", "-p", "GAMMA", "Y @ eXi + 1 @ Y"]) == 0
    assert capsys.readouterr().out.strip() == "Y @ eXi + 1 @ Y"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as ei:
        main(["no-such-command"])
    assert ei.value.code == 2


def test_confluence_command(capsys):
    assert main(["confluence", "-p", "LIE", "--max-deg", "4"]) == 0
    assert main(["confluence", "-p", "DERIV"]) == 0  # reported as finding
    out = capsys.readouterr().out
    assert "FINDING" in out


def test_hopf_command(capsys):
    assert main(["hopf", "-p", "HN", "--samples", "4"]) == 0


def test_list_presentations(capsys):
    assert main(["list-presentations"]) == 0
    out = capsys.readouterr().out
    assert "PAPER" in out and "DERIVED" in out
    assert "GAMMA" in out and "VECT" in out


def test_solve_ansatz_prints_systems(capsys):
    assert main(["solve-ansatz"]) == 0
    out = capsys.readouterr().out
    assert "consistency system" in out
    assert "B3 = B5 = B8" in out  # the printed display quoted for comparison


def test_json_report_schema_and_determinism(tmp_path, capsys):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["--seed", "3", "--json", str(p1), "hopf", "-p", "LIE",
                 "--samples", "3"]) == 0
    assert main(["--seed", "3", "--json", str(p2), "hopf", "-p", "LIE",
                 "--samples", "3"]) == 0
    assert p1.read_bytes() == p2.read_bytes()
    payload = json.loads(p1.read_text())
    rep = payload[0]
    assert set(rep) == {"suite", "checks", "rules", "timing_ms"}
    assert all(set(c) == {"id", "status", "witness", "residual"}
               for c in rep["checks"])
    assert all(r["provenance"] in ("PAPER", "DERIVED") for r in rep["rules"])


def test_gamma_and_covariance_commands():
    assert main(["gamma-hopf"]) == 0
    assert main(["covariance", "--phiL", "derived"]) == 0
    assert main(["covariance", "--phiL", "both"]) == 0
