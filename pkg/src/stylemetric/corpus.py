"""User-record corpora: JSONL ingestion, per-user style profiles, problem-level splits."""

from __future__ import annotations

import json
import logging
import random
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .checks import run_all
from .css import UnparseableSource, style_vector

log = logging.getLogger(__name__)

RECORD_KEYS = ("user_id", "problem_id", "question", "code")


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class UserRecord:
    user_id: str
    problem_id: str
    question: str
    code: str

    @property
    def key(self) -> tuple[str, str]:
        return (self.user_id, self.problem_id)

    def to_dict(self) -> dict:
        return {"user_id": self.user_id, "problem_id": self.problem_id,
                "question": self.question, "code": self.code}


@dataclass
class Corpus:
    records: list[UserRecord] = field(default_factory=list)
    duplicates: int = 0

    def __post_init__(self):
        self.by_user: dict[str, list[UserRecord]] = defaultdict(list)
        self.by_problem: dict[str, list[UserRecord]] = defaultdict(list)
        for r in self.records:
            self.by_user[r.user_id].append(r)
            self.by_problem[r.problem_id].append(r)

    def __len__(self) -> int:
        return len(self.records)

    @property
    def users(self) -> list[str]:
        return sorted(self.by_user)

    @property
    def problems(self) -> list[str]:
        return sorted(self.by_problem)

    def write(self, path: Path) -> None:
        with open(path, "w", encoding="utf-8") as f:
            for r in self.records:
                f.write(json.dumps(r.to_dict(), ensure_ascii=False, sort_keys=True) + "\n")


def parse_record(obj, lineno: int = 0) -> UserRecord:
    if not isinstance(obj, dict):
        raise CorpusError(f"line {lineno}: expected a JSON object")
    for key in RECORD_KEYS:
        if key not in obj:
            raise CorpusError(f"line {lineno}: missing key {key!r}")
        if not isinstance(obj[key], str):
            raise CorpusError(f"line {lineno}: key {key!r} must be a string")
    for key in ("user_id", "problem_id", "code"):
        if not obj[key]:
            raise CorpusError(f"line {lineno}: key {key!r} must be non-empty")
    return UserRecord(*(obj[k] for k in RECORD_KEYS))


def build_corpus(records) -> Corpus:
    """Deduplicate (user, problem) keeping the first occurrence."""
    seen = set()
    kept = []
    dups = 0
    for r in records:
        if r.key in seen:
            dups += 1
            log.warning("duplicate record for user %r problem %r; keeping the first", *r.key)
            continue
        seen.add(r.key)
        kept.append(r)
    return Corpus(kept, dups)


def load_corpus(path) -> Corpus:
    records = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"line {lineno}: malformed JSON ({exc.msg})") from None
            records.append(parse_record(obj, lineno))
    return build_corpus(records)


def user_profile(corpus: Corpus, user_id: str) -> np.ndarray:
    """Mean style vector over the user's parseable records."""
    if user_id not in corpus.by_user:
        raise CorpusError(f"unknown user {user_id!r}")
    vectors = []
    for r in corpus.by_user[user_id]:
        try:
            vectors.append(style_vector(run_all(r.code, f"{r.user_id}/{r.problem_id}")))
        except UnparseableSource:
            continue
    if not vectors:
        raise CorpusError(f"user {user_id!r} has no parseable records")
    return np.mean(vectors, axis=0)


def split_by_problem(corpus: Corpus, ratios=(0.8, 0.1, 0.1), seed: int = 0) -> tuple[Corpus, Corpus, Corpus]:
    """Seeded split where each problem lands in exactly one part."""
    if len(ratios) != 3 or any(r <= 0 for r in ratios) or abs(sum(ratios) - 1.0) > 1e-9:
        raise CorpusError("ratios must be three positive numbers summing to 1")
    problems = corpus.problems
    if len(problems) < 3:
        raise CorpusError(f"need at least 3 problems to split, found {len(problems)}")
    random.Random(seed).shuffle(problems)
    n = len(problems)
    n_train = round(ratios[0] * n)
    n_valid = round(ratios[1] * n)
    # every part keeps at least one problem
    n_train = min(max(1, n_train), n - 2)
    n_valid = min(max(1, n_valid), n - n_train - 1)
    parts = (problems[:n_train], problems[n_train:n_train + n_valid], problems[n_train + n_valid:])
    out = []
    for part in parts:
        keep = set(part)
        out.append(Corpus([r for r in corpus.records if r.problem_id in keep]))
    return tuple(out)


def corpus_stats(corpus: Corpus) -> dict:
    per_user = [len(v) for v in corpus.by_user.values()]
    lines = [len(r.code.splitlines()) for r in corpus.records]
    return {
        "records": len(corpus),
        "users": len(corpus.by_user),
        "problems": len(corpus.by_problem),
        "duplicates_dropped": corpus.duplicates,
        "records_per_user_mean": float(np.mean(per_user)) if per_user else 0.0,
        "records_per_user_max": max(per_user, default=0),
        "code_lines_mean": float(np.mean(lines)) if lines else 0.0,
    }
