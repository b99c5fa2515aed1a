import io
import json
import subprocess
import sys

import pytest

from artifact.cli import COMMANDS, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_lines_table():
    code, out, _ = call("lines")
    assert code == 0
    assert out.split()[-3:] == ["147", "216", "144"]


def test_instantons_json_shape():
    code, out, _ = call("instantons", "--dmax", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["n", "weights"]
    assert data["n"] == ["147", "756", "5283"]
    assert all(isinstance(w, str) for w in data["weights"])


def test_csv_output():
    code, out, _ = call("conics", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "type,X,Y,Z"
    assert lines[-1] == "total,756,1674,504"


def test_weights_change_only_the_weights_field():
    _, a, _ = call("two-point", "--format", "json")
    _, b, _ = call("two-point", "--format", "json", "--weights", "-12,16,-16")
    da, db = json.loads(a), json.loads(b)
    assert da["weights"] != db["weights"]
    da.pop("weights"), db.pop("weights")
    assert da == db


def test_seed_selects_weights():
    _, a, _ = call("monomials", "--format", "json", "--seed", "1")
    assert json.loads(a)["weights"] == ["-12", "16", "-16"]


def test_degenerate_weights_report_fixpoint():
    code, _, err = call("two-point", "--weights", "1,1,1")
    assert code == 1
    assert "degenerate at fixpoint" in err


@pytest.mark.parametrize("argv", [["bogus"], ["lines", "--format", "xml"], ["lines", "--frobnicate"], ["lines", "--weights", "1,2"], ["lines", "1,2"], ["instantons", "--dmax", "0"]])
def test_usage_errors_exit_1(argv):
    assert call(*argv)[0] == 1


def test_help_exits_0():
    assert call("--help")[0] == 0


def test_verification_failure_exits_2(monkeypatch):
    from artifact import intersection_counts as ic

    monkeypatch.setattr(ic, "line_counts", lambda: (147, 216, 145))
    code, _, err = call("lines")
    assert code == 2 and "verification failed" in err


def test_picard_fuchs_output():
    code, out, _ = call("picard-fuchs", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["order"] == "12" and data["q_degree"] == "3" and data["minimal_order"] == "10"
    assert data["blocks"][0][:8] == ["0"] * 7 + ["-907"]


def test_am_with_explicit_values():
    code, out, _ = call("am", "147,756", "--format", "json")
    assert code == 0 and json.loads(out)["N"] == ["147", "6195/8"]
    assert call("am", "1,x")[0] == 1


@pytest.mark.parametrize("cmd", [c for c in COMMANDS if c not in ("check",)])
def test_every_command_succeeds(cmd):
    code, out, _ = call(cmd, "--dmax", "4", "--format", "json")
    assert code == 0
    json.loads(out)


def test_dump_fixpoints_counts():
    _, out, _ = call("dump-fixpoints")
    assert out.split()[-8:] == ["N", "13", "lines", "27", "M02", "108", "M11", "144"]


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "artifact", "lines", "--format", "json"], capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout) == {"lines": {"X": "147", "Y": "216", "Z": "144"}}
