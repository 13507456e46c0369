import json
import subprocess
import sys
from pathlib import Path

import pytest

from rlx.cli import main
from rlx.io import load_rlat, parse_rlat

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_ok(capsys):
    code, out, _ = run_cli(capsys, "validate", str(FIXTURES / "pentagon_godel.rlat"))
    assert code == 0
    assert "valid residuated lattice with 5 elements" in out


def test_validate_missing_file(capsys):
    with pytest.raises(SystemExit) as err:
        run_cli(capsys, "validate", str(FIXTURES / "nope.rlat"))
    assert err.value.code == 1


def test_validate_broken_file(tmp_path, capsys):
    bad = tmp_path / "bad.rlat"
    bad.write_text("elements: 0 1\norder: 0<1\nodot:\n0 0\n0 0\nimp: derive\n")
    with pytest.raises(SystemExit) as err:
        run_cli(capsys, "validate", str(bad))
    assert err.value.code == 1


def test_analyze_pentagon(capsys):
    code, out, _ = run_cli(capsys, "analyze", str(FIXTURES / "pentagon_godel.rlat"))
    assert code == 0
    assert "BLP=False" in out and "ILP=True" in out
    assert "{c,1}" in out and "counterexample: a" in out
    assert "gelfand: False" in out


def test_analyze_json_matches_human_verdicts(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--json",
                           str(FIXTURES / "pentagon_stacked.rlat"))
    assert code == 0
    payload = json.loads(out)
    assert payload["lifting"] == {"blp": False, "ilp": True, "rlp": True}
    code, human, _ = run_cli(capsys, "analyze", str(FIXTURES / "pentagon_stacked.rlat"))
    assert f"BLP={payload['lifting']['blp']}" in human
    assert f"ILP={payload['lifting']['ilp']}" in human
    assert payload["spectra"]["max_points"] == ["{a,b,1}", "{a,c,d,1}"]


def test_lp_with_filter(capsys):
    code, out, _ = run_cli(capsys, "lp", str(FIXTURES / "pentagon_godel.rlat"),
                           "--blp", "--filter", "c,1")
    assert code == 0
    assert "False" in out and "counterexample: a" in out


def test_lp_formula_global(capsys):
    code, out, _ = run_cli(capsys, "lp", str(FIXTURES / "pentagon_stacked.rlat"),
                           "--formula", "v^2 = v")
    assert code == 0
    assert "global=True" in out


def test_lp_json(capsys):
    code, out, _ = run_cli(capsys, "lp", str(FIXTURES / "pentagon_godel.rlat"),
                           "--blp", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["global"] is False
    failing = [row for row in payload["filters"] if not row["holds"]]
    assert len(failing) == 1 and failing[0]["filter"] == "{c,1}"


def test_lp_requires_exactly_one_formula(capsys):
    code, _, err = run_cli(capsys, "lp", str(FIXTURES / "b2.rlat"))
    assert code == 1
    code, _, err = run_cli(capsys, "lp", str(FIXTURES / "b2.rlat"),
                           "--blp", "--ilp")
    assert code == 1


def test_lp_bad_formula(capsys):
    code, _, err = run_cli(capsys, "lp", str(FIXTURES / "b2.rlat"),
                           "--formula", "v | = 1")
    assert code == 1
    assert "formula" in err


def test_check_theorems_exit_zero(capsys):
    for name in ("trivial", "b2", "godel3", "luk4", "pentagon_godel", "pentagon_stacked"):
        code, out, _ = run_cli(capsys, "check-theorems",
                               str(FIXTURES / f"{name}.rlat"))
        assert code == 0
        assert "0 disagreements" in out


def test_check_theorems_deterministic(capsys):
    path = str(FIXTURES / "pentagon_stacked.rlat")
    outs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "check-theorems", path, "--json")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_enumerate_command(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("RLX_CORPUS_DIR", str(tmp_path / "cache"))
    out_dir = tmp_path / "corpus"
    code, out, _ = run_cli(capsys, "enumerate", "3", str(out_dir))
    assert code == 0
    files = sorted(out_dir.glob("*.rlat"))
    assert len(files) == 2
    for f in files:
        load_rlat(f)


def test_reticulate_and_verify(tmp_path, capsys):
    out_file = tmp_path / "ret.blat"
    code, out, _ = run_cli(capsys, "reticulate", str(FIXTURES / "luk4.rlat"),
                           "--out", str(out_file), "--verify")
    assert code == 0
    assert out_file.exists()
    from rlx.io import load_blat

    L = load_blat(out_file)
    assert L.size == 2  # nilpotent chain collapses below the top
    assert "property 8: ok" in out


def test_quotient_round_trip(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "quotient", str(FIXTURES / "pentagon_stacked.rlat"),
                           "--filter", "a,1")
    assert code == 0
    Q = parse_rlat(out)
    assert Q.size == 4
    # re-analyzing the emitted file matches the in-memory quotient analysis
    path = tmp_path / "q.rlat"
    path.write_text(out)
    code, report_out, _ = run_cli(capsys, "analyze", "--json", str(path))
    payload = json.loads(report_out)
    assert payload["classes"]["boolean_center"] == payload["elements"]

    from rlx.fixtures import pentagon_stacked
    from rlx.filters import principal_filter, quotient as quot
    from rlx.report import analysis_report

    E2 = pentagon_stacked()
    in_memory = analysis_report(quot(E2, principal_filter(E2, 1)).quotient,
                                include_theorems=False)
    on_disk = analysis_report(Q, include_theorems=False)
    assert in_memory["lifting"] == on_disk["lifting"]
    assert in_memory["hash"] == on_disk["hash"]


def test_cli_entry_point_subprocess():
    # byte-identical output across runs, through the real console script
    cmd = [sys.executable, "-m", "rlx.cli", "check-theorems",
           str(FIXTURES / "pentagon_godel.rlat")]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_quotient_bad_filter(capsys):
    code, _, err = run_cli(capsys, "quotient", str(FIXTURES / "pentagon_stacked.rlat"),
                           "--filter", "b,c")
    assert code == 1
    assert "filter" in err


def test_check_theorems_disagreement_exit_code(capsys, monkeypatch):
    # exit code 2 is reserved for a matrix disagreement (an implementation
    # bug); force one through a stubbed check to pin the plumbing
    from rlx.theorems import TheoremVerdict
    import rlx.cli as cli

    def fake_checks(A):
        return [TheoremVerdict("stub", True, False, False, None)]

    monkeypatch.setattr(cli, "theorem_checks", fake_checks)
    code, out, _ = run_cli(capsys, "check-theorems",
                           str(FIXTURES / "b2.rlat"))
    assert code == 2
    assert "1 disagreements" in out
