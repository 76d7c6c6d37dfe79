"""Generate a synthetic user-record corpus (JSONL) with controlled style deviations.

Every record is a clean Google-style class plus a seeded subset of fragments,
each fragment introducing (mostly) one style attribute, so that attribute sets
stay small and residual pairs are plentiful.
"""

from __future__ import annotations

import argparse
import json
import random

HEADER = "import java.util.List;\n\n"

# (imports, fields, methods, statements) contributions per fragment
FRAGMENTS = {
    "upper_ell": ("", "", "", "    long big = 10l;\n"),
    "need_braces": ("", "", "", "    if (n > 3) n--;\n"),
    "no_default": ("", "", "", "    switch (n) {\n      case 1:\n        n++;\n        break;\n    }\n"),
    "one_stmt": ("", "", "", "    n++; n--;\n"),
    "multi_decl": ("", "", "", "    int a = 1, b = 2;\n"),
    "local_name": ("", "", "", "    int Bad = 1;\n"),
    "ws_around": ("", "", "", "    n = n+1;\n"),
    "empty_block": ("", "", "", "    if (n > 5) {\n    }\n"),
    "op_wrap": ("", "", "", "    int w = n +\n        1;\n"),
    "generic_ws": ("", "", "", "    List <String> xs = null;\n"),
    "long_line": ("", "", "", "    // " + "x" * 110 + "\n"),
    "fall_through": ("", "", "", "    switch (n) {\n      case 1:\n        n++;\n      default:\n        break;\n    }\n"),
    "member_name": ("", "  private int Bad_;\n\n", "", ""),
    "modifier_order": ("", "  static private int order;\n\n", "", ""),
    "method_name": ("", "", "  void Foo() {\n    order();\n  }\n\n", ""),
    "param_name": ("", "", "  void take(int P) {\n    order();\n  }\n\n", ""),
    "star_import": ("import java.util.*;\n", "", "", ""),
    "no_blank": ("", "", "  void first() {\n    order();\n  }\n  void second() {\n    order();\n  }\n\n", ""),
}


def render(chosen: list[str], cls: str) -> str:
    imports = "".join(FRAGMENTS[f][0] for f in chosen)
    fields = "".join(FRAGMENTS[f][1] for f in chosen)
    methods = "".join(FRAGMENTS[f][2] for f in chosen)
    stmts = "".join(FRAGMENTS[f][3] for f in chosen)
    return (
        (imports + "\n" if imports else "") + HEADER
        + f"public class {cls} {{\n"
        + fields
        + methods
        + "  int solve(int n) {\n"
        + stmts
        + "    return n;\n"
        + "  }\n\n"
        + "  void order() {\n"
        + "    return;\n"
        + "  }\n"
        + "}\n"
    )


def generate(n_records: int = 200, n_users: int = 20, n_problems: int = 50, seed: int = 0,
             max_fragments: int = 3) -> list[dict]:
    rng = random.Random(seed)
    names = sorted(FRAGMENTS)
    keys = [(u, p) for u in range(n_users) for p in range(n_problems)]
    rng.shuffle(keys)
    out = []
    for u, p in sorted(keys[:n_records]):
        chosen = sorted(rng.sample(names, rng.randint(0, max_fragments)))
        out.append({"user_id": f"u{u:02d}", "problem_id": f"p{p:02d}",
                    "question": f"Problem {p}: transform n.", "code": render(chosen, "Main")})
    return out


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("output")
    ap.add_argument("--records", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    with open(args.output, "w", encoding="utf-8") as f:
        for rec in generate(args.records, seed=args.seed):
            f.write(json.dumps(rec, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
