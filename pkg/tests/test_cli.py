import json
import subprocess
import sys

import pytest

from doublesym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.mark.parametrize("argv,expected", [
    (["lr", "--lambda", "2", "--mu", "1", "--nu", "2"], "a[-1] - a[1]"),
    (["duallr", "--lambda", "1", "--mu", "2", "--nu", "2,2", "--method", "tableau"], "a[0] - a[1]"),
    (["double-schur", "--lambda", "1,1,1", "--nx", "2"], "0"),
    (["kostka", "--dual", "--lambda", "3,2", "--mu", "3,2,1"], "2*a[-2] - a[1] - a[2]"),
    (["char", "--lambda", "3,2", "--mu", "2,1,1,1"], "1"),
    (["char", "--lambda", "3,2", "--mu", "2,1,1,1", "--spec", "shifted"], "1"),
    (["lr", "--lambda", "2", "--mu", "1", "--nu", "2", "--spec", "shifted"], "2"),
    (["monomial", "--lambda", "2"], "s(2) - s(1,1)"),
    (["dual-schur", "--mu", "2,1", "--degree", "4", "--basis", "dual"], "S(2,1)"),
])
def test_examples(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


@pytest.mark.parametrize("method", ["skew", "tableau", "classical"])
def test_duallr_methods(capsys, method):
    assert run(capsys, "duallr", "--lambda", "1", "--mu", "2", "--nu", "2,2", "--method", method)[1] == "a[0] - a[1]"


def test_json_output_is_versioned(capsys):
    code, out, _ = run(capsys, "dual-schur", "--mu", "2,1", "--degree", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1
    assert data["series"]["basis"] == "schur" and data["series"]["degree"] == 3
    code, out, _ = run(capsys, "lr", "--lambda", "2", "--mu", "1", "--nu", "2", "--json")
    assert json.loads(out)["schema"] == 1


def test_output_is_deterministic(capsys):
    argv = ["double-schur", "--lambda", "2,1", "--nx", "3", "--method", "tableau"]
    first = run(capsys, *argv)[1]
    assert all(run(capsys, *argv)[1] == first for _ in range(3))
    assert run(capsys, "double-schur", "--lambda", "2,1", "--nx", "3", "--method", "jacobi_trudi")[1] == first


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "dual-schur", "--mu", "3", "--degree", "2")
    assert code == 1
    assert err.startswith("TruncationTooSmall")
    assert "3" in err


def test_bad_partition_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["lr", "--lambda", "1,2", "--mu", "1", "--nu", "2"])
    assert exc.value.code == 2
    assert "not a partition" in capsys.readouterr().err


def test_missing_flags_are_usage_errors(capsys):
    code, _, err = run(capsys, "kostka", "--lambda", "2")
    assert code == 2 and "--table" in err
    with pytest.raises(SystemExit) as exc:
        main(["lr", "--lambda", "2"])
    assert exc.value.code == 2


def test_skew_and_eval(capsys):
    code, out, _ = run(capsys, "skew", "--outer", "2,1", "--inner", "1", "--nx", "2", "--method", "rho_sum")
    assert code == 0
    assert out == run(capsys, "skew", "--outer", "2,1", "--inner", "1", "--nx", "2")[1]
    code, out, _ = run(capsys, "eval", "--kind", "lr", "--lambda", "2", "--mu", "1", "--nu", "2", "--spec", "shifted")
    assert code == 0 and out == "2"


def test_custom_spec_file(tmp_path, capsys):
    f = tmp_path / "spec.txt"
    f.write_text("default = i\n")
    code, out, _ = run(capsys, "lr", "--lambda", "2", "--mu", "1", "--nu", "2", "--spec", f"custom:{f}")
    assert code == 0 and out == "-2"


def test_expand(tmp_path, capsys):
    f = tmp_path / "p.txt"
    f.write_text("n = 2\nx1^2 + x1*x2 + x2^2\n")
    code, out, _ = run(capsys, "expand", "--input", str(f))
    assert code == 0
    assert out.startswith("s(2)")
    f.write_text("x1 + x2\n")
    assert run(capsys, "expand", "--input", str(f))[0] == 2


def test_hook_identities_and_cauchy(capsys):
    code, out, _ = run(capsys, "hook-identities", "--lambda", "3,2", "--mu", "2,1,1,1")
    assert code == 0 and out.splitlines()[0].startswith("character: 1")
    code, out, _ = run(capsys, "cauchy", "--n", "1", "--degree", "2")
    assert code == 0 and "FAIL" not in out


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "2")
    assert code == 0 and out.startswith("criterion 2: PASS")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "doublesym", "lr", "--lambda", "1", "--mu", "1", "--nu", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "a[0] - a[1]"
