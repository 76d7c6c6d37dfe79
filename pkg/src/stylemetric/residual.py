"""Attribute-residual dataset: code pairs whose attribute sets differ by one attribute."""

from __future__ import annotations

import json
import random
import re
from collections import defaultdict
from dataclasses import dataclass

from .attributes import AttributeCatalog, StyleAttribute
from .checks import extract_attributes, run_all
from .corpus import Corpus, UserRecord

ATTR_ORDER = {a: k for k, a in enumerate(StyleAttribute)}

RESIDUAL_INSTRUCTION = (
    "You are given two pieces of code, <c1> and <c2>, along with their corresponding lists of style "
    "conventions, A_c1 and A_c2. Please identify and explain the style conventions in A_c2 that are "
    "not present in A_c1."
)
RESIDUAL_TARGET = "{name} is present in A_c2 but not in A_c1; the style convention of {name} indicates {explanation}."
SINGLE_INSTRUCTION = (
    "You are given one piece of code <c> along with their corresponding style convention <A_u>. "
    "Please identify and explain the style convention."
)
SINGLE_TARGET = "{name} is present in code; the style convention of {name} indicates {explanation}."


@dataclass(frozen=True)
class AttributedRecord:
    record: UserRecord
    attrs: frozenset[StyleAttribute]

    @property
    def source_id(self) -> str:
        return f"{self.record.user_id}/{self.record.problem_id}"


@dataclass(frozen=True)
class ResidualPair:
    first: AttributedRecord
    second: AttributedRecord
    residual: StyleAttribute


@dataclass
class ResidualRecord:
    code_1: str
    code_2: str | None
    attrs_1: frozenset[StyleAttribute]
    attrs_2: frozenset[StyleAttribute]
    residual: StyleAttribute
    prompt: str
    target: str
    source_ids: tuple[str, ...]

    def to_json(self) -> str:
        row = {
            "prompt": self.prompt,
            "target": self.target,
            "residual_attribute": self.residual.value,
            "attrs_1": ordered_names(self.attrs_1),
            "attrs_2": ordered_names(self.attrs_2),
            "source_ids": list(self.source_ids),
        }
        return json.dumps(row, ensure_ascii=False, sort_keys=True)


def ordered(attrs) -> list[StyleAttribute]:
    return sorted(attrs, key=ATTR_ORDER.__getitem__)


def ordered_names(attrs) -> list[str]:
    return [a.value for a in ordered(attrs)]


def _annotate_one(record: UserRecord) -> AttributedRecord | None:
    report = run_all(record.code, f"{record.user_id}/{record.problem_id}")
    if report.unparseable:
        return None
    return AttributedRecord(record, frozenset(extract_attributes(report)))


def annotate(corpus: Corpus, jobs: int = 1) -> list[AttributedRecord]:
    """Attribute sets for every parseable record, in corpus order."""
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as ex:
            out = list(ex.map(_annotate_one, corpus.records, chunksize=16))
    else:
        out = [_annotate_one(r) for r in corpus.records]
    return [a for a in out if a is not None]


def find_residual_pairs(items: list[AttributedRecord], max_attrs: int = 5) -> list[ResidualPair]:
    """All ordered pairs with A₁ ⊂ A₂, |A₂ \\ A₁| = 1, |A₂| ≤ max_attrs, sorted by record keys."""
    if max_attrs < 1:
        raise ValueError("max_attrs must be >= 1")
    by_set: dict[frozenset, list[AttributedRecord]] = defaultdict(list)
    for it in items:
        by_set[it.attrs].append(it)
    pairs = []
    for attrs2, seconds in by_set.items():
        if not attrs2 or len(attrs2) > max_attrs:
            continue
        for residual in attrs2:
            firsts = by_set.get(attrs2 - {residual})
            if not firsts:
                continue
            for a in firsts:
                for b in seconds:
                    pairs.append(ResidualPair(a, b, residual))
    pairs.sort(key=lambda p: (p.first.record.key, p.second.record.key))
    return pairs


def _fence(code: str) -> str:
    return "```java\n" + code.rstrip("\n") + "\n```"


def _names(attrs, catalog: AttributeCatalog) -> str:
    return "[" + ", ".join(catalog.name(a) for a in ordered(attrs)) + "]"


def _explanation(catalog: AttributeCatalog, attr: StyleAttribute) -> str:
    return catalog.explanation(attr).strip().rstrip(".")


def render_record(pair: ResidualPair, catalog: AttributeCatalog | None = None) -> ResidualRecord:
    catalog = catalog or AttributeCatalog()
    a, b = pair.first, pair.second
    prompt = "\n".join([
        RESIDUAL_INSTRUCTION,
        "<c1>:", _fence(a.record.code),
        "<c2>:", _fence(b.record.code),
        "A_c1: " + _names(a.attrs, catalog),
        "A_c2: " + _names(b.attrs, catalog),
    ])
    name = catalog.name(pair.residual)
    target = RESIDUAL_TARGET.format(name=name, explanation=_explanation(catalog, pair.residual))
    return ResidualRecord(a.record.code, b.record.code, a.attrs, b.attrs, pair.residual, prompt, target,
                          (a.source_id, b.source_id))


def render_no_residual(item: AttributedRecord, catalog: AttributeCatalog | None = None) -> ResidualRecord:
    catalog = catalog or AttributeCatalog()
    if len(item.attrs) != 1:
        raise ValueError(f"expected exactly one attribute, found {len(item.attrs)}")
    (attr,) = item.attrs
    prompt = "\n".join([
        SINGLE_INSTRUCTION,
        "<c>:", _fence(item.record.code),
        "A_u: " + _names(item.attrs, catalog),
    ])
    name = catalog.name(attr)
    target = SINGLE_TARGET.format(name=name, explanation=_explanation(catalog, attr))
    return ResidualRecord(item.record.code, None, frozenset(), item.attrs, attr, prompt, target,
                          (item.source_id,))


_LIST_LINE = re.compile(r"^(A_c1|A_c2|A_u): \[(.*)\]$", re.M)


def parse_prompt_lists(prompt: str, catalog: AttributeCatalog | None = None) -> dict[str, frozenset]:
    """Recover the attribute lists from a rendered prompt (used for round-trip checks)."""
    catalog = catalog or AttributeCatalog()
    out = {}
    for label, body in _LIST_LINE.findall(prompt):
        names = [n for n in body.split(", ") if n]
        out[label] = frozenset(catalog.attribute_for_name(n) for n in names)
    return out


def balance(records: list[ResidualRecord], cap: int = 600, seed: int = 0) -> list[ResidualRecord]:
    """Keep at most `cap` records per residual attribute (seeded sample), preserving order."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    rng = random.Random(seed)
    by_attr: dict[StyleAttribute, list[int]] = defaultdict(list)
    for k, r in enumerate(records):
        by_attr[r.residual].append(k)
    keep: set[int] = set()
    for attr in ordered(by_attr):
        idx = by_attr[attr]
        keep.update(idx if len(idx) <= cap else rng.sample(idx, cap))
    return [r for k, r in enumerate(records) if k in keep]


def sample_eval(records: list[ResidualRecord], per_attribute: int = 75, seed: int = 0) -> list[ResidualRecord]:
    """Evaluation subset: at most `per_attribute` records per residual attribute."""
    return balance(records, per_attribute, seed)


def build_dataset(corpus: Corpus, max_attrs: int = 5, cap: int = 600, seed: int = 0,
                  catalog: AttributeCatalog | None = None, jobs: int = 1) -> list[ResidualRecord]:
    items = annotate(corpus, jobs)
    rendered = [render_record(p, catalog) for p in find_residual_pairs(items, max_attrs)]
    return balance(rendered, cap, seed)
