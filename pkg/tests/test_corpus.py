import json
import logging

import numpy as np
import pytest

from stylemetric.attributes import CSS_ORDER, StyleAttribute as A
from stylemetric.corpus import (Corpus, CorpusError, UserRecord, build_corpus, corpus_stats, load_corpus,
                                split_by_problem, user_profile)

from conftest import DATA

LL = CSS_ORDER.index(A.LineLength)


def _code(long_lines: int, total: int = 10) -> str:
    body = ["class A {"] + ["  // " + "x" * 110] * long_lines + ["  // ok"] * (total - 2 - long_lines) + ["}"]
    return "\n".join(body) + "\n"


def write(tmp_path, rows):
    p = tmp_path / "c.jsonl"
    p.write_text("".join((r if isinstance(r, str) else json.dumps(r)) + "\n" for r in rows))
    return p


def rec(u, p, code="class A {\n}\n"):
    return {"user_id": u, "problem_id": p, "question": "q", "code": code}


def test_load_two(tmp_path):
    c = load_corpus(write(tmp_path, [rec("u1", "p1"), rec("u1", "p2")]))
    assert len(c) == 2 and c.users == ["u1"] and c.problems == ["p1", "p2"]


def test_duplicates_keep_first(tmp_path, caplog):
    with caplog.at_level(logging.WARNING):
        c = load_corpus(write(tmp_path, [rec("u1", "p1", "class A {\n}\n"), rec("u1", "p1", "class B {\n}\n")]))
    assert len(c) == 1 and c.duplicates == 1 and "class A" in c.records[0].code
    assert sum("duplicate" in r.message for r in caplog.records) == 1


def test_missing_key(tmp_path):
    row = rec("u1", "p1")
    del row["code"]
    with pytest.raises(CorpusError, match=r"line 2: missing key 'code'"):
        load_corpus(write(tmp_path, [rec("u0", "p0"), row]))


def test_malformed_line(tmp_path):
    with pytest.raises(CorpusError, match="line 1"):
        load_corpus(write(tmp_path, ["{not json"]))


def test_empty_ids_rejected(tmp_path):
    with pytest.raises(CorpusError, match="user_id"):
        load_corpus(write(tmp_path, [rec("", "p1")]))


def test_profile_single_and_mean():
    c = build_corpus([UserRecord("a", "p1", "", _code(2)), UserRecord("b", "p1", "", _code(2)),
                      UserRecord("b", "p2", "", _code(4))])
    assert user_profile(c, "a")[LL] == pytest.approx(0.2)
    assert user_profile(c, "b")[LL] == pytest.approx(0.3)


def test_profile_skips_unparseable_and_errors():
    c = build_corpus([UserRecord("a", "p1", "", _code(2)), UserRecord("a", "p2", "", "class A {"),
                      UserRecord("z", "p1", "", "class {")])
    assert user_profile(c, "a")[LL] == pytest.approx(0.2)
    with pytest.raises(CorpusError, match="no parseable"):
        user_profile(c, "z")
    with pytest.raises(CorpusError, match="unknown user"):
        user_profile(c, "nobody")


def test_profile_matches_oracle_vectors():
    # user "u01" in the synthetic corpus: mean of per-record ratios, derived by hand from the fragment table
    c = load_corpus(DATA / "synthetic_corpus.jsonl")
    from stylemetric.checks import run_all
    from stylemetric.css import style_vector
    vs = [style_vector(run_all(r.code)) for r in c.by_user["u01"]]
    np.testing.assert_allclose(user_profile(c, "u01"), np.mean(vs, axis=0), atol=1e-15)


def _synthetic(problems: int, per_problem: int = 2) -> Corpus:
    return build_corpus([UserRecord(f"u{k}", f"p{p}", "", "class A {\n}\n")
                         for p in range(problems) for k in range(per_problem)])


def test_split_ten():
    train, valid, test = split_by_problem(_synthetic(10), (0.8, 0.1, 0.1), seed=3)
    assert [len(x.by_problem) for x in (train, valid, test)] == [8, 1, 1]


def test_split_seeded():
    a = split_by_problem(_synthetic(30), seed=5)
    b = split_by_problem(_synthetic(30), seed=5)
    assert [x.problems for x in a] == [x.problems for x in b]


def test_split_thousand_no_overlap():
    parts = split_by_problem(_synthetic(1000, 1), (0.8, 0.1, 0.1), seed=0)
    sets = [set(x.problems) for x in parts]
    assert [len(s) for s in sets] == [800, 100, 100]
    assert not (sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2])


def test_split_errors():
    with pytest.raises(CorpusError):
        split_by_problem(_synthetic(2), seed=0)
    with pytest.raises(CorpusError):
        split_by_problem(_synthetic(10), (0.5, 0.5, 0.5), seed=0)


def test_stats():
    s = corpus_stats(load_corpus(DATA / "synthetic_corpus.jsonl"))
    assert s["records"] == 200 and s["users"] == 20 and s["problems"] == 50
