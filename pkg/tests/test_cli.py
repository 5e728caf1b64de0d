import json
import subprocess
import sys
from fractions import Fraction

import pytest

from tripledimer import fixtures as F
from tripledimer.cli import main
from tripledimer.graph import dumps


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_prob_json_round_trip(capsys):
    code, out, _ = run(capsys, "prob", "4node", "--colors", "1,1,1,1", "--output", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"classes", "z", "delta"}
    probs = [Fraction(c["prob"]) for c in data["classes"]]
    assert sum(probs) == 1 and probs == [Fraction(1, 2)] * 2
    for c in data["classes"]:
        assert set(c) == {"code", "p_value", "trace", "prob"}
        Fraction(c["p_value"])


def test_validate_balance_violation(tmp_path, capsys):
    bad = dumps(F.four_node()).replace("vertex W3 w", "vertex W3 w\nvertex W9 w")
    p = tmp_path / "bad.graph"
    p.write_text(bad)
    code, out, _ = run(capsys, "validate", str(p))
    assert code == 1
    assert "balance" in out


def test_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", str(F.fixture_path("wbwbwb")))
    assert code == 0 and "OK" in out


def test_domain_errors(tmp_path, capsys):
    code, _, err = run(capsys, "prob", "4node", "--colors", "1,2,1,2")
    assert code == 1 and "infeasible" in err
    code, _, err = run(capsys, "prob", str(tmp_path / "missing.graph"))
    assert code == 1
    p = tmp_path / "junk.graph"
    p.write_text("not a graph\n")
    code, _, err = run(capsys, "xmatrix", str(p))
    assert code == 1 and "malformed" in err


def test_usage_errors(capsys):
    for argv in (["frobnicate"], ["prob"], ["prob", "4node", "--colors", "x"], ["halfplane"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


@pytest.mark.parametrize("argv", [
    ["xmatrix", "4node"],
    ["classes", "--type", "bwwww"],
    ["reduction-matrix", "wbwbwb"],
    ["pairing-matrices", "--type", "wbwbwb"],
    ["special", "lgv", "wbwbwb", "--start", "1"],
    ["special", "crossbar", "wbbbww", "--bars", "1,2"],
    ["special", "honeycomb", "www", "--variant", "Tprime"],
    ["oracle-check", "2by3"],
    ["sample", "4node", "-n", "200", "--seed", "1"],
    ["halfplane", "--points", "0,1,2,3,4,5"],
    ["fixtures"],
])
def test_commands_succeed(argv, capsys):
    code, out, _ = run(capsys, *argv, "--output", "json")
    assert code == 0
    json.loads(out)


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "tripledimer.cli", "halfplane", "--points", "0,1,2,3",
                        "--formula", "fourpoint"], capture_output=True, text=True)
    assert r.returncode == 0 and "0.75" in r.stdout
