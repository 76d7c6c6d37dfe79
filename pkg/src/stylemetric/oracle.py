"""Compare checker output with recorded Checkstyle findings, cell by cell.

A cell is one (file, criterion) pair; it agrees when both tools flag the
same set of lines.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .attributes import SYNTAX_CRITERIA, StyleAttribute
from .checks import run_all

_ID_PREFIXES = sorted((a.value for a in StyleAttribute), key=len, reverse=True)


def attribute_for_check_id(check_id: str) -> StyleAttribute | None:
    """Map a Checkstyle check id (e.g. 'RightCurlySame') to an attribute."""
    for name in _ID_PREFIXES:
        if check_id == name or (check_id.startswith(name) and check_id[len(name)].isupper()):
            return StyleAttribute(name)
    return None


@dataclass(frozen=True)
class CellDiff:
    file: str
    attribute: StyleAttribute
    ours: tuple[int, ...]
    oracle: tuple[int, ...]

    def render(self) -> str:
        missing = sorted(set(self.oracle) - set(self.ours))
        extra = sorted(set(self.ours) - set(self.oracle))
        return f"{self.file}\t{self.attribute.value}\tmissing={missing}\textra={extra}"


@dataclass
class Agreement:
    cells: int
    agreeing: int
    diffs: list[CellDiff]

    @property
    def rate(self) -> float:
        return self.agreeing / self.cells if self.cells else 1.0


def oracle_lines(findings: list[dict]) -> dict[StyleAttribute, set[int]]:
    out: dict[StyleAttribute, set[int]] = {}
    for f in findings:
        attr = attribute_for_check_id(f["check"])
        if attr is not None:
            out.setdefault(attr, set()).add(int(f["line"]))
    return out


def compare(corpus_dir: Path, oracle_json: Path,
            criteria: tuple[StyleAttribute, ...] = SYNTAX_CRITERIA) -> Agreement:
    recorded = json.loads(Path(oracle_json).read_text())["files"]
    cells = agreeing = 0
    diffs = []
    for name in sorted(recorded):
        source = (Path(corpus_dir) / name).read_text()
        report = run_all(source, name)
        theirs = oracle_lines(recorded[name])
        for attr in criteria:
            cells += 1
            a = tuple(sorted(report.lines(attr)))
            b = tuple(sorted(theirs.get(attr, set())))
            if a == b:
                agreeing += 1
            else:
                diffs.append(CellDiff(name, attr, a, b))
    return Agreement(cells, agreeing, diffs)


def render_diff(agreement: Agreement) -> str:
    head = [f"# cells={agreement.cells} agreeing={agreement.agreeing} rate={agreement.rate:.4f}"]
    return "\n".join(head + [d.render() for d in agreement.diffs]) + "\n"
