import json
import subprocess
import sys

import pytest

from filiform.cli import main
from filiform.serialize import parse_system_doc
from filiform.systems import system_finite


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_text(capsys):
    code, out, err = run(capsys, "gen", "--dim", "9")
    assert code == 0 and err == ""
    assert out.splitlines()[0] == "# M_Fil(9)[x=free]: 1 equations, 9 variables"


def test_gen_is_deterministic(capsys):
    _, first, _ = run(capsys, "gen", "--dim", "12", "--format", "json")
    _, second, _ = run(capsys, "gen", "--dim", "12", "--format", "json")
    assert first == second


def test_gen_json_roundtrip(capsys):
    code, out, _ = run(capsys, "gen", "--dim", "12", "--format", "json")
    assert code == 0
    system = parse_system_doc(json.loads(out))
    reference = system_finite(12, "free")
    assert system.system_id == reference.system_id
    assert system.variables == reference.variables
    assert system.equations == reference.equations


def test_gen_x_modes(capsys):
    code, out, _ = run(capsys, "gen", "--dim", "12", "--x", "1")
    assert code == 0
    assert out.splitlines()[0].startswith("# M_Fil(12)[x=fixed-1]:")
    code, out, _ = run(capsys, "gen", "--dim", "12", "--x", "0")
    assert code == 0
    assert out.splitlines()[0].startswith("# M_Fil(12)[x=fixed-0]:")


def test_gen_truncated(capsys):
    code, out, _ = run(capsys, "gen", "--truncate", "10", "--format", "cas")
    assert code == 0
    assert out.splitlines()[0].startswith("# ring QQ[")


def test_gen_bad_dim(capsys):
    code, out, err = run(capsys, "gen", "--dim", "8")
    assert code == 2 and out == "" and "error:" in err


def test_gen_output_file(capsys, tmp_path):
    target = tmp_path / "system.txt"
    code, out, _ = run(capsys, "gen", "--dim", "9", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("# M_Fil(9)")


def test_gen_output_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "gen", "--dim", "9",
                       "--output", str(tmp_path / "missing" / "out.txt"))
    assert code == 3 and "i/o error:" in err


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "--dim", "12")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "dimension: 12"
    assert lines[1] == "num_vars: 20 (closed form 20, enumerated 20)"
    assert lines[2] == "num_eqs: 8 (closed form 8, enumerated 8)"
    assert lines[3].startswith("h2 by weight: ")
    assert lines[4].startswith("h3 by weight: ")


def test_check_known_families(capsys):
    for extra in (["--known", "m2"], ["--known", "L1"],
                  ["--known", "mk", "--k", "4"]):
        code, out, _ = run(capsys, "check", "--dim", "13", *extra)
        assert code == 0
        report = json.loads(out)
        assert report["verdict"] == "verified"
        assert all(entry["value"] == "0" for entry in report["residuals"])
        assert report["jacobi"] == []


def test_check_mk_needs_k(capsys):
    code, _, err = run(capsys, "check", "--dim", "13", "--known", "mk")
    assert code == 2 and "--k" in err


def test_check_failing_assignment(capsys, tmp_path):
    src = tmp_path / "assign.json"
    src.write_text(json.dumps(
        {"entries": [{"j": 3, "s": 0, "value": "1"}]}))
    report_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "check", "--dim", "9", "--assign", str(src),
                       "--report", str(report_path))
    assert code == 1 and out == ""
    report = json.loads(report_path.read_text())
    assert report["verdict"] == "failed"
    assert report["residuals"] == [{"label": [2, 3, 0], "value": "3"}]
    assert report["jacobi"][0]["triple"] == [2, 3, 4]


def test_check_bad_assignment_file(capsys, tmp_path):
    src = tmp_path / "assign.json"
    src.write_text("{not json")
    code, _, err = run(capsys, "check", "--dim", "9", "--assign", str(src))
    assert code == 2 and "not valid JSON" in err

    src.write_text(json.dumps({"entries": [{"j": 1, "s": 0, "value": "1"}]}))
    code, _, err = run(capsys, "check", "--dim", "9", "--assign", str(src))
    assert code == 2 and "error:" in err


def test_check_missing_assignment_file(capsys, tmp_path):
    code, _, err = run(capsys, "check", "--dim", "9",
                       "--assign", str(tmp_path / "nope.json"))
    assert code == 3 and "i/o error:" in err


def test_verify_oracle_truncated(capsys):
    code, out, _ = run(capsys, "verify-oracle", "--max-total", "9")
    assert code == 0
    assert out == "# truncated(9): 1 labels compared, 0 diffs\n"


def test_verify_oracle_finite(capsys):
    code, out, _ = run(capsys, "verify-oracle", "--dim", "12")
    assert code == 0
    assert out == "# M_Fil(12)[x=free]: 8 labels compared, 0 diffs\n"


def test_fixture(capsys):
    code, out, _ = run(capsys, "fixture", "--name", "mk", "--dim", "12",
                       "--k", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["name"] == "m4(12)"
    code, out, _ = run(capsys, "fixture", "--name", "lacuna-of", "--dim", "9",
                       "--s", "2", "--base", "L1")
    assert code == 0
    assert json.loads(out)["name"] == "lacuna2-of-L1(9)"


def test_fixture_errors(capsys):
    code, _, err = run(capsys, "fixture", "--name", "m9", "--dim", "9")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "fixture", "--name", "mk", "--dim", "12")
    assert code == 2


def test_argparse_usage_errors():
    with pytest.raises(SystemExit) as info:
        main(["gen"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["check", "--dim", "9", "--known", "m2", "--assign", "f.json"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "filiform.cli", "dims", "--dim", "9"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("dimension: 9")
