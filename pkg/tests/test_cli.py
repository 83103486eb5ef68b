from __future__ import annotations

import json
import subprocess
import sys

import pytest

from coxorbit.cli import main


def run_cli(args, tmp_path=None):
    proc = subprocess.run([sys.executable, "-m", "coxorbit", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_roots_a2(capsys):
    assert main(["roots", "A2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["roots"]) == 6


def test_roots_h4_golden_pairs(capsys):
    assert main(["roots", "H4"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["roots"]) == 120
    assert all(isinstance(x, list) and len(x) == 2 for r in doc["roots"] for x in r)


def test_roots_unknown():
    code, _, err = run_cli(["roots", "Z9"])
    assert code == 2 and "Z9" in err


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--types", "Z9"],
        ["verify", "--checks", "nope"],
        ["verify", "--format", "xml"],
        ["verify", "--jobs", "0"],
        ["verify", "--max-rank", "0"],
        ["frobnicate"],
    ],
)
def test_usage_errors(args):
    code, _, _ = run_cli(args)
    assert code == 2


def test_prop_a_summary(capsys):
    assert main(["verify", "--checks", "prop-a", "--types", "A3", "--format", "summary"]) == 0
    lines = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert lines == [{"summary": True, "label": "A3", "check": "prop-a", "pass": 62, "fail": 0, "skipped": 34}]


def test_counterexample_default_types(capsys):
    assert main(["verify", "--checks", "counterexample-a3", "--format", "summary"]) == 0
    lines = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert lines == [{"summary": True, "label": "A3", "check": "counterexample-a3", "pass": 1, "fail": 0, "skipped": 0}]


def test_folding_alias(capsys):
    assert main(["verify", "--checks", "folding", "--types", "H3"]) == 0
    recs = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    certs = [r for r in recs if not r.get("summary")]
    fold_type = next(r for r in certs if r["check"] == "fold-type")
    assert fold_type["detail"]["identified"] == "D6"
    assert {r["check"] for r in certs} >= {"fold-table", "fold-length"}
    assert all(r["status"] == "pass" for r in certs)


def test_summary_counts_match_stream(capsys):
    assert main(["verify", "--checks", "prop-a,prop-b,dihedral", "--types", "G2,A2"]) == 0
    recs = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    certs = [r for r in recs if not r.get("summary")]
    summaries = [r for r in recs if r.get("summary")]
    assert recs[-len(summaries):] == summaries
    for s in summaries:
        mine = [c for c in certs if c["label"] == s["label"] and c["check"] == s["check"]]
        for status in ("pass", "fail", "skipped"):
            assert s[status] == sum(c["status"] == status for c in mine)


def test_csv(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["verify", "--checks", "prop-b", "--types", "B2", "--format", "csv", "--output", str(out)]) == 0
    rows = out.read_text().splitlines()
    assert rows[0] == "label,check,J,alpha,status,witness"
    assert len(rows) == 1 + 4


def test_max_rank_filter(capsys):
    assert main(["verify", "--checks", "prop-b", "--max-rank", "2", "--format", "summary"]) == 0
    labels = {json.loads(x)["label"] for x in capsys.readouterr().out.splitlines()}
    assert labels == {"A1", "A2", "B2", "G2", "I2(5)", "A1xA1"}


def test_deterministic_output(tmp_path):
    args = ["verify", "--checks", "prop-c,chamber-vector,fold-phi", "--types", "B3,H3", "--seed", "5"]
    a, b, c = tmp_path / "a", tmp_path / "b", tmp_path / "c"
    assert main(args + ["--output", str(a)]) == 0
    assert main(args + ["--output", str(b)]) == 0
    assert main(args + ["--output", str(c), "--jobs", "2"]) == 0
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()
    d = tmp_path / "d"
    assert main(["verify", "--checks", "prop-c", "--types", "B3", "--seed", "6", "--output", str(d)]) == 0
    assert d.read_bytes() != a.read_bytes()


def test_failure_exit_code(monkeypatch, capsys):
    from coxorbit import suites
    from coxorbit.certificate import FAIL, Certificate

    def broken(s, opts):
        yield Certificate(s.label, "prop-a", FAIL, (), s.roots[0], witness={"beta": s.roots[0]})

    monkeypatch.setitem(suites.BY_NAME, "prop-a", suites.Suite("prop-a", lambda lab: True, broken))
    assert main(["verify", "--checks", "prop-a", "--types", "A2"]) == 1
