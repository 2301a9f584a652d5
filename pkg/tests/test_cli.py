import json
import subprocess
import sys

import pytest

from permbij.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_apply(capsys):
    assert invoke(capsys, "apply", "simion-schmidt", "6743152") == (0, "6743125\n", "")


def test_invert(capsys):
    assert invoke(capsys, "invert", "phi", "2163475")[:2] == (0, "5213476\n")


def test_stat(capsys):
    assert invoke(capsys, "stat", "comp", "213645")[:2] == (0, "3\n")


def test_domain_error_exit_code(capsys):
    code, out, err = invoke(capsys, "apply", "knuth", "321")
    assert code == 3 and out == ""
    assert "contains 321; knuth expects a 321-avoider" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["apply", "nope", "12"],
        ["stat", "lmn", "12"],
        ["apply", "knuth", "1224"],
        ["enumerate", "3", "111"],
        ["verify", "thm4"],
        ["roundtrip", "nope"],
        ["verify", "thm1", "--max-len", "0"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert invoke(capsys, *argv)[0] == 2


def test_json_output_is_versioned(capsys):
    code, out, _ = invoke(capsys, "apply", "knuth", "3156247", "--output", "json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == "1" and data["output"] == [7, 5, 6, 4, 2, 1, 3]


def test_csv_output(capsys):
    code, out, _ = invoke(capsys, "enumerate", "3", "321", "--output", "csv")
    assert out.splitlines() == ["permutation", "123", "132", "213", "231", "312"]


def test_catalog_export(capsys, tmp_path):
    target = tmp_path / "stat.json"
    code, out, _ = invoke(capsys, "catalog", "--export", str(target))
    assert code == 0 and out.startswith("156 classes")
    rows = json.loads(target.read_text())
    assert len(rows) == 156 and rows[0]["modifier"] in {"plain", "n", "m"}


def test_discover(capsys):
    code, out, _ = invoke(capsys, "discover", "elizalde-deutsch")
    assert code == 0 and "fp -> fp" in out.splitlines()


def test_roundtrip(capsys):
    code, out, _ = invoke(capsys, "roundtrip", "all", "--max-len", "6")
    assert code == 0 and out.count("VERIFIED") == 10


def test_verify_relations(capsys):
    code, out, _ = invoke(capsys, "verify", "thm2", "--max-len", "6")
    assert code == 0
    verified = [line for line in out.splitlines() if line.startswith("VERIFIED")]
    assert len(verified) == 5
    assert "Reifegerste = i∘Knuth-Rotem∘i" in verified[-1]


def test_verify_condensed_rows(capsys):
    code, out, _ = invoke(capsys, "verify", "thm3", "--max-len", "7", "--preserve-len", "7")
    assert code == 0
    assert out.splitlines()[-1] == "10 of 10 rows verified"


def test_verify_reports_failing_rows(capsys):
    code, out, _ = invoke(capsys, "verify", "thm1", "--preserve-len", "7", "--output", "json")
    data = json.loads(out)
    failing = {row["row"] for row in data["rows"] if not row["passed"]}
    assert code == 1
    assert failing == {"knuth-richards", "knuth-rotem"}


def test_maximality_needs_length_seven(capsys):
    # Knuth preserves the cycle count on every 321-avoider of length at most 6
    code, out, _ = invoke(capsys, "verify", "thm3", "--max-len", "6", "--preserve-len", "6")
    assert code == 1 and "pair=['cyc', 'cyc']" in out


def test_output_is_deterministic(capsys):
    first = invoke(capsys, "discover", "west", "--max-len", "5")
    second = invoke(capsys, "discover", "west", "--max-len", "5")
    assert first == second


def test_module_entry_point():
    done = subprocess.run(
        [sys.executable, "-m", "permbij", "apply", "reifegerste", "13256847"], capture_output=True, text=True
    )
    assert done.returncode == 0 and done.stdout == "78564213\n"
