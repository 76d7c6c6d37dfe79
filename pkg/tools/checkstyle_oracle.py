"""Run Checkstyle 8.24 (Google configuration) and record its findings as JSON.

Requires the checkstyle-8.24-all.jar and a Java runtime (jdk4py works).
The output is committed so the test-suite never needs Java:

    python tools/checkstyle_oracle.py tests/data/java_corpus tests/data/checkstyle_oracle.json
"""

from __future__ import annotations

import argparse
import json
import os
import re
import subprocess
import sys
import tempfile
from pathlib import Path

DEFAULT_JAR = os.environ.get("CHECKSTYLE_JAR", "/root/tools/checkstyle-8.24-all.jar")
LINE = re.compile(r"^\[(\w+)\] (.*?):(\d+)(?::(\d+))?: (.*) \[(\w+)\]$")


def java_binary() -> str:
    try:
        import jdk4py
        return str(jdk4py.JAVA)
    except ImportError:
        return "java"


def run_paths(paths: list[Path], jar: str = DEFAULT_JAR) -> dict[str, list[tuple[int, int, str, str]]]:
    out = subprocess.run([java_binary(), "-jar", jar, "-c", "/google_checks.xml", *map(str, paths)],
                         capture_output=True, text=True)
    if out.stderr.strip():
        print(out.stderr[:3000], file=sys.stderr)
    by_abs = {str(p.resolve()): p.name for p in paths}
    res: dict[str, list] = {p.name: [] for p in paths}
    for line in out.stdout.splitlines():
        m = LINE.match(line)
        if m:
            name = by_abs.get(str(Path(m.group(2)).resolve()), Path(m.group(2)).name)
            res[name].append((int(m.group(3)), int(m.group(4) or 0), m.group(6), m.group(5)))
    return res


def run(snippets: dict[str, str], jar: str = DEFAULT_JAR) -> dict[str, list]:
    """Check in-memory sources (name -> text)."""
    with tempfile.TemporaryDirectory() as d:
        paths = []
        for name, src in snippets.items():
            p = Path(d) / f"{name}.java"
            p.write_text(src)
            paths.append(p)
        raw = run_paths(paths, jar)
        return {p.stem: raw[p.name] for p in paths}


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("corpus", type=Path)
    ap.add_argument("output", type=Path)
    ap.add_argument("--jar", default=DEFAULT_JAR)
    args = ap.parse_args(argv)
    paths = sorted(args.corpus.glob("*.java"))
    res = run_paths(paths, args.jar)
    payload = {
        "tool": "checkstyle-8.24",
        "config": "google_checks.xml",
        "files": {name: [{"line": l, "column": c, "check": k, "message": m} for l, c, k, m in sorted(v)]
                  for name, v in sorted(res.items())},
    }
    args.output.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
