"""Build the committed evaluation pairs and score them with reference implementations.

BLEU-4 comes from nltk's sentence_bleu (no smoothing) and Rouge-1/2 F1 from
Google's rouge_score; both are fed the same Java token stream the package
uses. These libraries are needed only to regenerate the goldens:

    pip install nltk rouge_score
    python tools/make_eval_goldens.py tests/data/java_corpus tests/data/eval_pairs
"""

from __future__ import annotations

import argparse
import json
import warnings
from pathlib import Path

from nltk.translate.bleu_score import sentence_bleu
from rouge_score import rouge_scorer

from stylemetric.evaluation import code_tokens

EXTRA_PAIRS = [
    # no shared 4-gram but shared unigrams
    ("class A { int x ; }", "int x ; class B { }"),
    # candidate shorter than four tokens
    ("return x;", "return x + 1;"),
    # candidate longer than the reference
    ("int a = 1; int b = 2; int c = a + b; return c;", "int a = 1; return a;"),
    # completely disjoint
    ("foo bar", "1 2 3 + -"),
]


class _Tok:
    def tokenize(self, text):
        return code_tokens(text)


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("corpus", type=Path)
    ap.add_argument("out", type=Path)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    files = sorted(args.corpus.glob("Solution*.java"), key=lambda p: int(p.stem[8:]))
    pairs = [(files[i].read_text(), files[i + 1].read_text()) for i in range(0, 32, 2)] + EXTRA_PAIRS
    scorer = rouge_scorer.RougeScorer(["rouge1", "rouge2"], tokenizer=_Tok())
    manifest, golden = [], []
    for k, (gen, ref) in enumerate(pairs):
        g, r = f"pair{k:02d}_gen.java", f"pair{k:02d}_ref.java"
        (args.out / g).write_text(gen)
        (args.out / r).write_text(ref)
        manifest.append({"generated_path": g, "reference_path": r, "user_id": f"u{k % 4}", "problem_id": f"p{k:02d}"})
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            bleu = sentence_bleu([code_tokens(ref)], code_tokens(gen))
        rouge = scorer.score(ref, gen)
        golden.append({"pair": k, "bleu4": float(bleu), "rouge1": rouge["rouge1"].fmeasure,
                       "rouge2": rouge["rouge2"].fmeasure})
    (args.out / "manifest.jsonl").write_text("".join(json.dumps(m, sort_keys=True) + "\n" for m in manifest))
    (args.out / "golden_scores.json").write_text(json.dumps(golden, indent=1) + "\n")


if __name__ == "__main__":
    main()
