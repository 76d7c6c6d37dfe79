import json
import subprocess
import sys

import pytest

from stylemetric.attributes import StyleAttribute
from stylemetric.cli import main

from conftest import DATA

PAIR = DATA / "css_pair"
CLEAN = "public class Clean {\n  private int count;\n\n  int get() {\n    return count;\n  }\n}\n"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def clean(tmp_path):
    p = tmp_path / "Clean.java"
    p.write_text(CLEAN)
    return p


def test_check_clean_exit_zero(capsys, clean):
    code, out, _ = run(capsys, "check", clean)
    assert code == 0 and json.loads(out)["violations"] == []


def test_check_one_violation(capsys, tmp_path):
    p = tmp_path / "A.java"
    p.write_text(CLEAN.replace("private int count;", "private long count = 1l;"))
    code, out, _ = run(capsys, "check", p)
    rows = out.splitlines()
    assert code == 1 and len(rows) == 1
    assert [v["attribute"] for v in json.loads(rows[0])["violations"]] == ["UpperEll"]


def test_check_text_format(capsys, tmp_path):
    p = tmp_path / "A.java"
    p.write_text(CLEAN.replace("private int count;", "private long count = 1l;"))
    _, out, _ = run(capsys, "check", "--format", "text", p)
    assert out.strip() == f"{p}:2:24: [UpperEll] Should use uppercase 'L'."


def test_check_directory_rows(capsys):
    code, out, _ = run(capsys, "check", DATA / "java_corpus")
    rows = [json.loads(r) for r in out.splitlines()]
    assert len(rows) == 50 and code == 1
    assert [r["file"] for r in rows] == sorted(r["file"] for r in rows)


def test_check_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "check", tmp_path / "nope.java")
    assert code == 2 and "nope.java" in err


def test_jobs_env_same_output(capsys, monkeypatch):
    _, serial, _ = run(capsys, "vector", DATA / "java_corpus")
    monkeypatch.setenv("STYLEMETRIC_JOBS", "3")
    _, parallel, _ = run(capsys, "vector", "--jobs", "1", DATA / "java_corpus")
    assert serial == parallel
    monkeypatch.setenv("STYLEMETRIC_JOBS", "x")
    assert run(capsys, "vector", DATA / "java_corpus")[0] == 2


def test_vector_json(capsys):
    _, out, _ = run(capsys, "vector", PAIR / "Gen.java")
    vec = json.loads(out)["vector"]
    assert len(vec) == 24 and "Indentation" not in vec
    assert {k for k, v in vec.items() if v} == {"UpperEll", "MissingSwitchDefault"}


def test_css_same_file(capsys):
    code, out, _ = run(capsys, "css", PAIR / "Gen.java", PAIR / "Gen.java")
    assert code == 0 and out == "1.000000\n"


def test_css_hand_built_pair(capsys):
    # normalised vectors (½, ½) vs (1, 0): 1 − JS = 0.6887219; default smoothing over 24 dims shifts it slightly
    assert run(capsys, "css", "--eps", "1e-12", PAIR / "Gen.java", PAIR / "Ref.java")[1] == "0.688722\n"
    assert run(capsys, "css", PAIR / "Gen.java", PAIR / "Ref.java")[1] == "0.688736\n"


def test_css_unparseable(capsys, tmp_path):
    bad = tmp_path / "Bad.java"
    bad.write_text("class Bad {\n")
    code, _, err = run(capsys, "css", bad, PAIR / "Ref.java")
    assert code == 2 and "Bad.java" in err


def test_css_bad_eps(capsys):
    assert run(capsys, "css", "--eps", "0", PAIR / "Gen.java", PAIR / "Ref.java")[0] == 2


def test_profile(capsys):
    code, out, _ = run(capsys, "profile", DATA / "synthetic_corpus.jsonl", "--user", "u01")
    assert code == 0 and len(json.loads(out)["vector"]) == 24
    code, _, err = run(capsys, "profile", DATA / "synthetic_corpus.jsonl", "--user", "ghost")
    assert code == 2 and "ghost" in err


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", DATA / "synthetic_corpus.jsonl")
    assert code == 0 and json.loads(out)["records"] == 200


def test_evaluate(capsys, tmp_path):
    out = tmp_path / "scores.json"
    assert run(capsys, "evaluate", DATA / "eval_pairs" / "manifest.jsonl", "-o", out)[0] == 0
    report = json.loads(out.read_text())
    assert report["aggregates"]["count"] == 20 and len(report["rows"]) == 20


def test_dataset_rows_satisfy_invariants(capsys, tmp_path):
    out, ev = tmp_path / "ds.jsonl", tmp_path / "eval.jsonl"
    code, _, _ = run(capsys, "dataset", DATA / "synthetic_corpus.jsonl", "-o", out, "--eval-output", ev,
                     "--sample-eval", "5")
    assert code == 0
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    assert rows
    for r in rows:
        assert set(r) == {"prompt", "target", "residual_attribute", "attrs_1", "attrs_2", "source_ids"}
        a1, a2 = set(r["attrs_1"]), set(r["attrs_2"])
        assert a1 < a2 and a2 - a1 == {r["residual_attribute"]} and len(a2) <= 5
        assert StyleAttribute(r["residual_attribute"])
    hist = {}
    for line in ev.read_text().splitlines():
        a = json.loads(line)["residual_attribute"]
        hist[a] = hist.get(a, 0) + 1
    assert max(hist.values()) <= 5


def test_split(capsys, tmp_path):
    code, out, _ = run(capsys, "split", DATA / "synthetic_corpus.jsonl", "--out-dir", tmp_path, "--seed", "1")
    assert code == 0
    summary = json.loads(out)
    assert sum(v["problems"] for v in summary.values()) == 50
    probs = [{json.loads(l)["problem_id"] for l in (tmp_path / f"{n}.jsonl").read_text().splitlines()}
             for n in ("train", "valid", "test")]
    assert not (probs[0] & probs[1] or probs[0] & probs[2] or probs[1] & probs[2])


def test_adapter_demo(capsys):
    code, out, _ = run(capsys, "adapter", "demo", "--seed", "3")
    trace = json.loads(out)
    assert code == 0 and len(trace["steps"]) == 6
    for s in trace["steps"]:
        assert abs(sum(s["P"]) - 1) < 1e-9 and len(s["P_s"]) == 16 and all(0 < g < 1 for g in s["g"])


def test_adapter_grad_check(capsys):
    code, out, _ = run(capsys, "adapter", "grad-check", "--points", "2", "--hidden", "4", "--vocab", "6", "--m", "2")
    res = json.loads(out)
    assert code == 0 and res["ok"] and res["max_rel_error"] < 1e-5


def test_adapter_grad_check_fails_above_tolerance(capsys):
    code, out, _ = run(capsys, "adapter", "grad-check", "--points", "1", "--hidden", "3", "--vocab", "4",
                       "--m", "1", "--tolerance", "1e-30")
    assert code == 1 and json.loads(out)["ok"] is False


def test_console_script_exit_code():
    res = subprocess.run([sys.executable, "-m", "stylemetric.cli", "css", str(PAIR / "Gen.java"),
                          str(PAIR / "Gen.java")], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "1.000000\n"
