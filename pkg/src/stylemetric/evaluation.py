"""Generated-vs-reference scoring: CSS, BLEU-4 and Rouge-1/2 over Java lexer tokens."""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import asdict, dataclass
from pathlib import Path

from .checks import run_all
from .css import UnparseableSource, css, style_vector
from .lexer import LexError, tokenize

METRICS = ("css", "bleu4", "rouge1", "rouge2")


def code_tokens(text: str) -> list[str]:
    """Token texts without whitespace or comments; falls back to whitespace split if lexing fails."""
    try:
        return [t.text for t in tokenize(text) if not t.is_trivia]
    except LexError:
        return text.split()


def _ngrams(tokens: list[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def bleu_tokens(candidate: list[str], reference: list[str], max_n: int = 4) -> float:
    """Sentence BLEU, uniform weights, brevity penalty, no smoothing."""
    c, r = len(candidate), len(reference)
    if c == 0:
        return 0.0
    log_p = 0.0
    for n in range(1, max_n + 1):
        cand = _ngrams(candidate, n)
        ref = _ngrams(reference, n)
        total = max(1, sum(cand.values()))
        match = sum(min(k, ref[g]) for g, k in cand.items())
        if match == 0:
            return 0.0
        log_p += math.log(match / total) / max_n
    bp = 1.0 if c > r else math.exp(1 - r / c)
    return bp * math.exp(log_p)


def rouge_tokens(candidate: list[str], reference: list[str], n: int) -> float:
    """Rouge-N F1."""
    cand, ref = _ngrams(candidate, n), _ngrams(reference, n)
    if not cand or not ref:
        return 0.0
    overlap = sum(min(k, ref[g]) for g, k in cand.items())
    if overlap == 0:
        return 0.0
    p = overlap / sum(cand.values())
    r = overlap / sum(ref.values())
    return 2 * p * r / (p + r)


def bleu4(candidate: str, reference: str) -> float:
    return bleu_tokens(code_tokens(candidate), code_tokens(reference))


def rouge_n(candidate: str, reference: str, n: int = 1) -> float:
    if n not in (1, 2):
        raise ValueError("n must be 1 or 2")
    return rouge_tokens(code_tokens(candidate), code_tokens(reference), n)


@dataclass
class EvalRow:
    user_id: str
    problem_id: str
    css: float | None
    bleu4: float
    rouge1: float
    rouge2: float


@dataclass
class EvalReport:
    rows: list[EvalRow]

    @property
    def aggregates(self) -> dict:
        agg: dict = {"count": len(self.rows)}
        scored = [r.css for r in self.rows if r.css is not None]
        agg["skipped_unparseable"] = len(self.rows) - len(scored)
        agg["css"] = sum(scored) / len(scored) if scored else None
        for m in METRICS[1:]:
            agg[m] = sum(getattr(r, m) for r in self.rows) / len(self.rows)
        return agg

    def to_dict(self) -> dict:
        return {"rows": [asdict(r) for r in self.rows], "aggregates": self.aggregates}


def score_pair(generated: str, reference: str, user_id: str = "", problem_id: str = "") -> EvalRow:
    try:
        c = css(style_vector(run_all(generated, "generated")), style_vector(run_all(reference, "reference")))
    except UnparseableSource:
        c = None
    g, r = code_tokens(generated), code_tokens(reference)
    return EvalRow(user_id, problem_id, c, bleu_tokens(g, r), rouge_tokens(g, r, 1), rouge_tokens(g, r, 2))


def evaluate_pairs(pairs, jobs: int = 1) -> EvalReport:
    """pairs: iterable of (generated, reference, (user_id, problem_id))."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("no pairs to evaluate")
    args = [(g, r, ids[0], ids[1]) for g, r, ids in pairs]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as ex:
            rows = list(ex.map(score_pair, *zip(*args)))
    else:
        rows = [score_pair(*a) for a in args]
    return EvalReport(rows)


def load_manifest(path) -> list[tuple[str, str, tuple[str, str]]]:
    """Manifest JSONL rows: generated_path, reference_path, user_id, problem_id (paths relative to the manifest)."""
    base = Path(path).parent
    pairs = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"line {lineno}: malformed JSON ({exc.msg})") from None
            for key in ("generated_path", "reference_path", "user_id", "problem_id"):
                if key not in obj:
                    raise ValueError(f"line {lineno}: missing key {key!r}")
            gen = (base / obj["generated_path"]).read_text(encoding="utf-8")
            ref = (base / obj["reference_path"]).read_text(encoding="utf-8")
            pairs.append((gen, ref, (str(obj["user_id"]), str(obj["problem_id"]))))
    return pairs
