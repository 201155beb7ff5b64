import csv
import io
import json
import subprocess
import sys

import pytest

from eqproj.cli import run
from eqproj.gkm import LocalizedClass
from eqproj.canonical import schubert_class


def ok(*argv):
    status, out, err = run(list(argv))
    assert status == 0, err
    return out


def test_structconst_row_json():
    data = json.loads(ok("structconst", "--n", "2", "--i", "1", "--j", "1", "--format", "json"))
    assert data["row"] == {"1": "t0 - t1", "2": "1"}
    assert [e["alpha"] for e in data["entries"]] == ["a0", "1"]


def test_structconst_table_csv_and_latex():
    rows = list(csv.DictReader(io.StringIO(ok("structconst", "--n", "4", "--format", "csv"))))
    assert list(rows[0]) == ["i", "j", "k", "degree", "polynomial", "alpha", "nonneg"]
    hit = [r for r in rows if (r["i"], r["j"], r["k"]) == ("2", "2", "3")]
    assert hit[0]["polynomial"] == "t0 + t1 - t2 - t3"
    assert hit[0]["alpha"] == "a0 + 2*a1 + a2"
    assert all(r["nonneg"] == "True" for r in rows)
    latex = ok("structconst", "--n", "2", "--format", "latex")
    assert latex.startswith("\\begin{tabular}") and "t_{0} - t_{1}" in latex


def test_kappa():
    assert ok("kappa", "--lambda", "1,2,3", "--i", "1") == "6\n"
    data = json.loads(ok("kappa", "--lambda", "1,2,3", "--format", "json"))
    assert [d["kappa"] for d in data] == ["1", "6", "6"]


def test_check_gkm_zero_class(tmp_path):
    path = tmp_path / "zero.json"
    path.write_text(json.dumps(LocalizedClass.zero(2).to_json()))
    status, out, _ = run(["check-gkm", "--lambda", "1,1,1", "--mu", "1,1,1", "--ring", "integers", "--input", str(path)])
    assert status == 0 and "member: true" in out


def test_check_gkm_false_verdict_exits_3(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "parts": [[], [{"coeff": "1", "exps": [1, 0, 0]}], []]}))
    status, out, _ = run(["check-gkm", "--n", "2", "--input", str(path), "--format", "json"])
    data = json.loads(out)
    assert status == 3 and data["member"] is False and data["failing_edge"] == [0, 1]


def test_check_gkm_labels_formal_checks(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps(LocalizedClass.zero(1).to_json()))
    out = ok("check-gkm", "--lambda", "1,2", "--mu", "1,2", "--input", str(path))
    assert "formal divisibility check, not a cohomology computation" in out


def test_unreadable_input_exits_2(tmp_path):
    status, _, err = run(["check-gkm", "--n", "1", "--input", str(tmp_path / "missing.json")])
    assert status == 2 and "--input" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["check-gkm", "--n", "1", "--input", str(bad)])[0] == 2


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["kappa", "--lambda", "1,0,2"], "--lambda"),
        (["kappa", "--lambda", "1,x"], "--lambda"),
        (["edge-weights", "--lambda", "1,2", "--mu", "1,1,1"], "--mu"),
        (["structconst", "--n", "2", "--i", "3", "--j", "1"], "--i"),
        (["weighted-class", "--lambda", "1,2"], "--i"),
        (["schubert"], "--n"),
    ],
)
def test_validation_errors_name_the_flag(argv, flag):
    status, _, err = run(argv)
    assert status == 2 and flag in err


def test_invariant_violation_exits_4():
    status, out, err = run(["weighted-class", "--lambda", "1,2,3", "--i", "2"])
    assert status == 4 and "not integral" in err


def test_weighted_class_json():
    data = json.loads(ok("weighted-class", "--lambda", "1,2,2", "--i", "1", "--format", "json"))
    assert data["kappa"] == "2" and data["lambda"] == [1, 2, 2]
    assert LocalizedClass.from_json(data["class"]).parts[1].to_text() == "2*t0 - t1"


def test_schubert_json_round_trip():
    data = json.loads(ok("schubert", "--n", "3", "--i", "2", "--format", "json"))
    assert LocalizedClass.from_json(data["class"]) == schubert_class(2, 3)


def test_edge_weights():
    assert ok("edge-weights", "--lambda", "2,3", "--mu", "2,3") == "O_01: 6*t0 - 6*t1\n"
    assert ok("edge-weights", "--lambda", "1,2") == "O_01: 2*t0 - t1\n"


def test_weighted_structconst():
    data = json.loads(ok("weighted-structconst", "--lambda", "1,2,2", "--i", "1", "--j", "1", "--format", "json"))
    by_k = {e["k"]: e for e in data["entries"]}
    assert by_k[1]["image"] == "2*t0 - 2*t1" and by_k[1]["native"] == "2*t0 - t1"
    assert by_k[2]["native"] == "1"


def test_output_is_deterministic():
    argv = ["structconst", "--n", "5", "--format", "json"]
    assert run(argv) == run(argv)


def test_verify_small_scale():
    status, out, _ = run(["verify", "--max-n", "3"])
    lines = [l for l in out.splitlines() if l.startswith("[")]
    assert len(lines) == 9
    # weighted classes with kappa scaling are not always integral, e.g. lambda = (1,1,2)
    assert [l for l in lines if l.startswith("[FAIL]")] == [l for l in lines if "weighted canonical classes" in l]
    assert status == 3


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "eqproj.cli", "kappa", "--lambda", "2,4", "--i", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "4\n"
