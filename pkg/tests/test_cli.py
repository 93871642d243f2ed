import io
import json
import subprocess
import sys

import pytest

import potent.verify as verify_mod
from potent.characterize import PotentialVerdict
from potent.cli import run_command
from potent.sequence import enumerate_graphic


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run_command(list(argv), out, err)
    return status, out.getvalue(), err.getvalue()


def run_json(*argv):
    status, out, err = run(*argv, "--format", "json")
    return status, (json.loads(out) if out else None), err


def test_check():
    status, doc, _ = run_json("check", "--graphic", "3^6")
    assert status == 0 and doc["graphic"] is True and doc["sigma"] == 18
    status, doc, _ = run_json("check", "3^7", "--method", "kleitman_wang")
    assert status == 1 and doc["graphic"] is False
    status, out, _ = run("check", "2 2 1 1")
    assert status == 0 and "is graphic" in out


def test_potential():
    status, doc, _ = run_json("potential", "--target", "k33", "4^6")
    assert status == 1
    assert doc["potential"] is False
    assert doc["violated"] == [{"theorem": "K33", "condition": 9, "bindings": {"entry": 2}}]
    status, doc, _ = run_json("potential", "--target", "k6c6", "4^6")
    assert status == 0 and doc["potential"] is True and doc["violated"] == []
    status, out, _ = run("potential", "--target", "k5p4", "5 3 2^4")
    assert status == 1 and "K5minusP4/2 [k=3, t=4]" in out


def test_oracle_command():
    status, doc, _ = run_json("oracle", "--target", "k6c6", "4^6", "--mode", "top-degree")
    assert status == 0 and doc["potential"] is True and doc["mode"] == "top_degree"
    assert doc["graph"]["n"] == 6 and sorted(doc["embedding"]) == [1, 2, 3, 4, 5, 6]
    status, doc, _ = run_json("oracle", "--target", "k33", "4^6")
    assert status == 1 and doc["exhausted"] is True and doc["states_explored"] > 0
    status, out, _ = run("oracle", "--target", "k23", "3 3 2 2 2")
    assert status == 0 and "embedding (1-based)" in out


def test_oracle_cap():
    status, _, err = run("oracle", "--target", "k33", "3^12")
    assert status == 2 and "cap" in err
    status, _, err = run("oracle", "--target", "k33", "3^6", "--max-n", "17")
    assert status == 2 and "--max-n" in err
    status, doc, _ = run_json("oracle", "--target", "k33", "3^6", "--max-n", "6")
    assert status == 0 and doc["potential"] is True


def test_lay_off():
    status, doc, _ = run_json("lay-off", "3^6")
    assert status == 0 and doc == {"sequence": "3^6", "k": 6, "residual": "3^2 2^3"}
    status, doc, _ = run_json("lay-off", "--k", "1", "3^4")
    assert status == 0 and doc["residual"] == "2^3"
    status, doc, _ = run_json("lay-off", "--k", "1", "3 1")
    assert status == 1 and doc["residual"] is None
    status, _, _ = run("lay-off", "--k", "5", "1 1")
    assert status == 2


def test_enumerate():
    status, doc, _ = run_json("enumerate", "--n", "3", "--positive")
    assert status == 0 and doc["sequences"] == ["2^3", "2 1^2"] and doc["count"] == 2
    status, doc, _ = run_json("enumerate", "--n", "6")
    assert doc["count"] == sum(1 for _ in enumerate_graphic(6, positive_only=False))
    assert run("enumerate", "--n", "0")[0] == 2


def test_sigma_and_extremal():
    status, doc, _ = run_json("sigma", "--target", "k6c6", "--n", "6")
    assert status == 0 and doc["sigma"] == 26 and doc["closed_form"] == 26 and doc["formula_holds"] is True
    status, doc, _ = run_json("sigma", "--target", "k33", "--n", "8")
    assert status == 0 and doc["sigma"] == 40 and doc["closed_form"] is None and "formula_holds" not in doc
    status, doc, _ = run_json("sigma", "--target", "k6c6", "--n", "6", "--method", "oracle")
    assert status == 0 and doc["sigma"] == 26 and doc["method"] == "oracle"
    status, doc, _ = run_json("extremal", "--target", "k33", "--n", "11")
    assert status == 0
    assert doc == {"target": "K33", "n": 11, "sequence": "10^2 4^3 3^6", "sigma": 50,
                   "graphic": True, "potential": False}
    assert run("extremal", "--target", "k33", "--n", "9")[0] == 2


def test_verify():
    status, doc, _ = run_json("verify", "--target", "k33", "--n-min", "6", "--n-max", "6")
    assert status == 0 and doc["mismatches"] == []
    assert doc["agreements"] == doc["sequences_tested"] == sum(1 for _ in enumerate_graphic(6))
    status, doc, _ = run_json("verify", "--target", "k23", "--n-min", "5", "--n-max", "6")
    assert status == 0 and doc["mismatches"] == []
    assert run("verify", "--target", "k33", "--n-min", "5", "--n-max", "6")[0] == 2
    assert run("verify", "--target", "k33", "--n-min", "6", "--n-max", "11")[0] == 2


def test_verify_report_is_byte_identical_across_worker_counts():
    outputs = set()
    for workers in ("1", "2", "4"):
        status, out, _ = run("verify", "--target", "k6c6", "--n-min", "6", "--n-max", "7",
                             "--workers", workers, "--format", "json")
        assert status == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_verify_mismatch_carries_certificate(monkeypatch):
    # a deliberately wrong predicate makes every potential sequence a mismatch
    monkeypatch.setattr(verify_mod, "predicate_for", lambda tag: lambda seq: PotentialVerdict(()))
    status, doc, _ = run_json("verify", "--target", "k33", "--n-min", "6", "--n-max", "6", "--mode", "top-degree")
    assert status == 1 and doc["mismatches"]
    first = doc["mismatches"][0]
    assert set(first) == {"sequence", "predicate_verdict", "oracle_result"}
    assert first["oracle_result"]["potential"] is False and first["oracle_result"]["exhausted"] is True
    assert doc["agreements"] + len(doc["mismatches"]) == doc["sequences_tested"]


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["check", "3^0"],
        ["check", "x"],
        ["potential", "--target", "k4", "3^6"],
        ["potential", "--target", "k33", "3^7"],
        ["potential", "--target", "k33", "3^6 0"],
        ["potential", "--target", "k33", "3 3 2 2 2"],
        ["oracle", "--target", "k33", "3 1"],
        ["sigma", "--target", "k33", "--n", "4"],
        [],
    ],
)
def test_errors_exit_two_with_one_line(argv):
    status, out, err = run(*argv)
    assert status == 2 and out == ""
    assert err.startswith("potent: error:") and err.count("\n") == 1


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "potent.cli", "potential", "--target", "k33", "4^6", "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["violated"][0]["condition"] == 9
