"""Command-line entry point: stylemetric {check,vector,css,profile,evaluate,dataset,split,stats,adapter}.

Exit codes: 0 clean, 1 findings (violations / failed gradient check), 2 errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .attributes import CSS_ORDER
from .checks import run_all
from .corpus import CorpusError, corpus_stats, load_corpus, split_by_problem, user_profile
from .css import EPSILON, UnparseableSource, css, style_vector
from .evaluation import evaluate_pairs, load_manifest

EXIT_OK, EXIT_FINDINGS, EXIT_ERROR = 0, 1, 2


@dataclass(frozen=True)
class Config:
    eps: float = EPSILON
    tau: float = 0.5
    alpha: float = 0.55
    cap: int = 600
    max_attrs: int = 5
    m: int = 5
    seed: int = 0
    format: str = "json"

    def validate(self) -> None:
        if self.eps <= 0 or self.tau <= 0:
            raise ValueError("eps and tau must be positive")
        if self.cap < 1 or self.max_attrs < 1 or self.m < 1:
            raise ValueError("cap, max-attrs and m must be >= 1")


class CliError(Exception):
    pass


def _jobs(args) -> int:
    env = os.environ.get("STYLEMETRIC_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise CliError(f"STYLEMETRIC_JOBS must be an integer, got {env!r}") from None
    return max(1, getattr(args, "jobs", 1) or 1)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _java_files(paths: list[str]) -> list[Path]:
    out = []
    for p in map(Path, paths):
        if p.is_dir():
            out.extend(sorted(p.rglob("*.java")))
        else:
            out.append(p)
    return out


def _check_one(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        return None, f"{path}: {exc}"
    return run_all(text, str(path)), None


def _map(fn, items, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def cmd_check(args) -> int:
    results = _map(_check_one, _java_files(args.paths), _jobs(args))
    code = EXIT_OK
    for report, err in results:
        if err:
            print(err, file=sys.stderr)
            code = EXIT_ERROR
            continue
        if args.format == "json":
            print(_dumps(report.to_dict()))
        else:
            if report.unparseable:
                print(f"{report.file}: unparseable ({report.diagnostic})")
            for v in report.violations:
                print(f"{report.file}:{v.line}:{v.column}: [{v.attribute.value}] {v.message}")
        if report.violations and code == EXIT_OK:
            code = EXIT_FINDINGS
    return code


def cmd_vector(args) -> int:
    code = EXIT_OK
    for report, err in _map(_check_one, _java_files(args.paths), _jobs(args)):
        if err:
            print(err, file=sys.stderr)
            code = EXIT_ERROR
            continue
        try:
            v = style_vector(report)
        except UnparseableSource as exc:
            print(f"unparseable: {exc}", file=sys.stderr)
            code = EXIT_ERROR
            continue
        if args.format == "json":
            print(_dumps({"file": report.file, "vector": {a.value: float(x) for a, x in zip(CSS_ORDER, v)}}))
        else:
            print(report.file + " " + " ".join(f"{x:.6f}" for x in v))
    return code


def _vector_of(path: str) -> np.ndarray:
    report, err = _check_one(Path(path))
    if err:
        raise CliError(err)
    try:
        return style_vector(report)
    except UnparseableSource:
        raise CliError(f"{path}: unparseable ({report.diagnostic})") from None


def cmd_css(args) -> int:
    score = css(_vector_of(args.generated), _vector_of(args.reference), args.eps)
    print(f"{score:.6f}")
    return EXIT_OK


def cmd_profile(args) -> int:
    corpus = load_corpus(args.corpus)
    v = user_profile(corpus, args.user)
    if args.format == "json":
        print(_dumps({"user_id": args.user, "vector": {a.value: float(x) for a, x in zip(CSS_ORDER, v)}}))
    else:
        print(args.user + " " + " ".join(f"{x:.6f}" for x in v))
    return EXIT_OK


def _write_or_print(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_evaluate(args) -> int:
    report = evaluate_pairs(load_manifest(args.manifest), jobs=_jobs(args))
    if args.format == "json":
        text = json.dumps(report.to_dict(), sort_keys=True, indent=1) + "\n"
    else:
        agg = report.aggregates
        text = "".join(f"{k}\t{agg[k]}\n" for k in sorted(agg))
    _write_or_print(text, args.output)
    return EXIT_OK


def cmd_dataset(args) -> int:
    from .residual import build_dataset, sample_eval
    corpus = load_corpus(args.corpus)
    records = build_dataset(corpus, args.max_attrs, args.cap, args.seed, jobs=_jobs(args))
    _write_or_print("".join(r.to_json() + "\n" for r in records), args.output)
    if args.eval_output:
        subset = sample_eval(records, args.sample_eval, args.seed)
        Path(args.eval_output).write_text("".join(r.to_json() + "\n" for r in subset), encoding="utf-8")
    print(f"{len(records)} records", file=sys.stderr)
    return EXIT_OK


def cmd_split(args) -> int:
    corpus = load_corpus(args.corpus)
    parts = split_by_problem(corpus, tuple(args.ratios), args.seed)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    summary = {}
    for name, part in zip(("train", "valid", "test"), parts):
        part.write(out / f"{name}.jsonl")
        summary[name] = {"records": len(part), "problems": len(part.by_problem)}
    print(_dumps(summary))
    return EXIT_OK


def cmd_stats(args) -> int:
    stats = corpus_stats(load_corpus(args.corpus))
    if args.format == "json":
        print(_dumps(stats))
    else:
        for k in sorted(stats):
            print(f"{k}\t{stats[k]}")
    return EXIT_OK


def _problem(args, seed: int):
    from .adapter import make_problem
    return make_problem(H=args.hidden, V=args.vocab, m=args.m, users=args.users, n=args.tokens, seed=seed,
                        alpha=args.alpha, tau=args.tau, include_positive=not args.exclude_positive,
                        renormalize=not args.raw_merge)


def cmd_adapter_demo(args) -> int:
    from .adapter import demo_trace
    trace = demo_trace(_problem(args, args.seed), args.user)
    _write_or_print(json.dumps(trace, sort_keys=True, indent=1) + "\n", args.output)
    return EXIT_OK


def cmd_adapter_grad_check(args) -> int:
    from .adapter import grad_check
    seeds = np.random.SeedSequence(args.seed).generate_state(args.points)
    worst = 0.0
    nudged = 0
    for s in seeds:
        r = grad_check(_problem(args, int(s)), step=args.step)
        worst = max(worst, float(r.max_rel_error))
        nudged += r.nudged
    ok = bool(worst < args.tolerance)
    result = {"points": args.points, "max_rel_error": worst, "tolerance": args.tolerance,
              "nudged_points": nudged, "ok": ok}
    if args.format == "json":
        print(_dumps(result))
    else:
        print(f"max relative error {worst:.3e} over {args.points} points ({'ok' if ok else 'FAIL'})")
    return EXIT_OK if ok else EXIT_FINDINGS


def build_parser() -> argparse.ArgumentParser:
    d = Config()
    ap = argparse.ArgumentParser(prog="stylemetric", description="Java coding-style metrics toolkit.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, jobs=False):
        p.add_argument("--format", choices=("json", "text"), default=d.format)
        if jobs:
            p.add_argument("--jobs", type=int, default=1, help="worker processes (env STYLEMETRIC_JOBS wins)")
        return p

    p = common(sub.add_parser("check", help="run the style checks"), jobs=True)
    p.add_argument("paths", nargs="+")
    p.set_defaults(func=cmd_check)

    p = common(sub.add_parser("vector", help="emit 24-dim style vectors"), jobs=True)
    p.add_argument("paths", nargs="+")
    p.set_defaults(func=cmd_vector)

    p = sub.add_parser("css", help="code style similarity of two files")
    p.add_argument("generated")
    p.add_argument("reference")
    p.add_argument("--eps", type=float, default=d.eps)
    p.set_defaults(func=cmd_css)

    p = common(sub.add_parser("profile", help="mean style vector of one user"))
    p.add_argument("corpus")
    p.add_argument("--user", required=True)
    p.set_defaults(func=cmd_profile)

    p = common(sub.add_parser("evaluate", help="score generated vs reference code"), jobs=True)
    p.add_argument("manifest")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("dataset", help="build the attribute-residual dataset")
    p.add_argument("corpus")
    p.add_argument("--output", "-o")
    p.add_argument("--max-attrs", type=int, default=d.max_attrs)
    p.add_argument("--cap", type=int, default=d.cap)
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--sample-eval", type=int, default=75, help="per-attribute evaluation cap")
    p.add_argument("--eval-output", help="also write the evaluation subset here")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_dataset)

    p = sub.add_parser("split", help="split a corpus 8/1/1 by problem")
    p.add_argument("corpus")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--ratios", type=float, nargs=3, default=(0.8, 0.1, 0.1))
    p.add_argument("--seed", type=int, default=d.seed)
    p.set_defaults(func=cmd_split)

    p = common(sub.add_parser("stats", help="corpus statistics"))
    p.add_argument("corpus")
    p.set_defaults(func=cmd_stats)

    ad = sub.add_parser("adapter", help="style adapter demos").add_subparsers(dest="adapter_command", required=True)
    for name, func, help_ in (("demo", cmd_adapter_demo, "JSON trace of P_s, g and merged P"),
                              ("grad-check", cmd_adapter_grad_check, "analytic vs finite-difference gradients")):
        p = common(ad.add_parser(name, help=help_))
        p.add_argument("--seed", type=int, default=d.seed)
        p.add_argument("--hidden", type=int, default=8)
        p.add_argument("--vocab", type=int, default=16)
        p.add_argument("--m", type=int, default=d.m)
        p.add_argument("--users", type=int, default=3)
        p.add_argument("--tokens", type=int, default=6)
        p.add_argument("--alpha", type=float, default=d.alpha)
        p.add_argument("--tau", type=float, default=d.tau)
        p.add_argument("--exclude-positive", action="store_true",
                       help="contrastive denominator over other users only")
        p.add_argument("--raw-merge", action="store_true", help="do not renormalize the merged distribution")
        p.set_defaults(func=func)
    ad.choices["demo"].add_argument("--user", type=int, default=0)
    ad.choices["demo"].add_argument("--output", "-o")
    ad.choices["grad-check"].add_argument("--points", type=int, default=20)
    ad.choices["grad-check"].add_argument("--step", type=float, default=1e-5)
    ad.choices["grad-check"].add_argument("--tolerance", type=float, default=1e-5)
    return ap


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        Config(eps=getattr(args, "eps", EPSILON), tau=getattr(args, "tau", 0.5),
               cap=getattr(args, "cap", 600), max_attrs=getattr(args, "max_attrs", 5),
               m=getattr(args, "m", 5)).validate()
        return args.func(args)
    except (CliError, CorpusError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
