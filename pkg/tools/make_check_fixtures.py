"""Record Checkstyle's flagged lines for small targeted snippets (frozen test fixture).

    python tools/make_check_fixtures.py tests/data/check_snippets.json
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
from checkstyle_oracle import run  # noqa: E402

SNIPPETS = {
    "clean": "public class Clean {\n  private int count;\n\n  int get() {\n    return count;\n  }\n}\n",
    "upper_ell": "class A {\n  long a = 10l;\n  long b = 10L;\n  long c = 0x1fl;\n}\n",
    "star_import": "import java.util.*;\nimport static java.lang.Math.*;\nimport java.io.File;\n\nclass A {\n}\n",
    "wrapped_import": "package a.\n    b;\n\nimport java.util\n    .List;\n\nclass A {\n}\n",
    "two_types": "class A {\n}\n\nclass B {\n}\n\ninterface C {\n}\n",
    "two_types_public": "class A {\n}\n\npublic class B {\n}\n\nenum C { X }\n",
    "right_curly": (
        "class A {\n  void f(int x) {\n    if (x > 0) {\n      x++;\n    }\n    else {\n      x--;\n    }\n"
        "    try {\n      x++;\n    }\n    catch (RuntimeException e) {\n      x--;\n    } finally { x = 0; }\n"
        "    do {\n      x++;\n    }\n    while (x < 3);\n    for (;;) {\n      break; }\n    if (x > 1) { x = 2; } x++;\n"
        "  } }\n"
    ),
    "left_curly": (
        "class A\n{\n  void f(int x)\n  {\n    if (x > 0) { x++;\n    }\n    while (x > 0)\n    {\n      x--;\n    }\n"
        "    Runnable r = () ->\n    {\n    };\n  }\n}\n"
    ),
    "whitespace_around": (
        "class A {\n  int f(int x) {\n    x=x+1;\n    x += 2;\n    if(x>1) {\n      return x;\n    }\n"
        "    for (int i = 0; i<3; i++) {\n      x++;\n    }\n    boolean b = x>1&&x<5;\n    x = b ? 1:2;\n"
        "    while (x > 0){\n      x--;\n    }\n    return x;\n  }\n\n  void g() {}\n}\n"
    ),
    "generic_whitespace": (
        "import java.util.List;\nimport java.util.Map;\n\nclass A {\n  List <String> a;\n  List< String> b;\n"
        "  List<String > c;\n  Map<String, List<Integer>> d;\n  public <T>T id(T t) {\n    return t;\n  }\n"
        "  public<T> void g(T t) {\n  }\n}\n"
    ),
    "operator_wrap": (
        "class A {\n  int f(int x) {\n    int y = x +\n        1;\n    int z = x\n        + 1;\n"
        "    boolean b = x > 1 &&\n        y > 1;\n    int t = b ?\n        1 : 2;\n    return y + z + t;\n  }\n}\n"
    ),
    "separator_wrap": (
        "class A {\n  String f(String s) {\n    String t = s.\n        trim();\n    String u = s\n        .trim();\n"
        "    g(1\n        , 2);\n    g(1,\n        2);\n    return t + u;\n  }\n\n  void g(int a, int b) {\n  }\n}\n"
    ),
    "empty_block": (
        "class A {\n  void f(int x) {\n    if (x > 0) {\n    }\n    if (x > 1) {\n      // note\n    }\n"
        "    try {\n    } finally {\n    }\n    switch (x) {\n    }\n    while (x > 0) {\n    }\n  }\n}\n"
    ),
    "need_braces": (
        "class A {\n  void f(int x) {\n    if (x > 0) x++;\n    if (x > 1)\n      x--;\n    else\n      x++;\n"
        "    for (int i = 0; i < 3; i++) x++;\n    while (x > 5) x--;\n    do x++; while (x < 3);\n"
        "    if (x > 0) {\n      x++;\n    } else if (x < 0) {\n      x--;\n    }\n  }\n}\n"
    ),
    "multiple_vars": (
        "class A {\n  int a, b;\n  int c; int d;\n\n  void f() {\n    int x = 1, y = 2;\n    int p = 0; int q = 1;\n"
        "    for (int i = 0, j = 1; i < j; i++) {\n      x++;\n    }\n  }\n}\n"
    ),
    "one_statement": (
        "class A {\n  int a; int b;\n\n  void f(int x) {\n    x++; x--;\n    x++;\n    for (int i = 0; i < 2; i++) {\n"
        "      x++;\n    }\n    Runnable r = () -> { int y = 1; y++; };\n  }\n}\n"
    ),
    "modifier_order": (
        "abstract public class A {\n  static public final int X = 1;\n  public static final int Y = 2;\n"
        "  final static private int z = 3;\n\n  @Override\n  public String toString() {\n    return \"\";\n  }\n\n"
        "  public @Deprecated void g() {\n  }\n\n  synchronized public void h() {\n  }\n}\n"
    ),
    "switches": (
        "class A {\n  void f(int x) {\n    switch (x) {\n      case 1:\n        x++;\n      case 2:\n        x++;\n"
        "        // fall through\n      case 3:\n        x++;\n        break;\n      case 4:\n        return;\n"
        "      default:\n        x--;\n    }\n    switch (x) {\n      case 1:\n        break;\n    }\n  }\n}\n"
    ),
    "naming": (
        "class bad_Type {\n  private int Member;\n  private int okMember;\n  static int StaticOk;\n"
        "  static final int CONSTANT = 1;\n\n  void Method(int Param, int okParam) {\n    int Local = 1;\n"
        "    final int FinalLocal = 2;\n    int ok = 3;\n    for (int I = 0; I < 1; I++) {\n      ok++;\n    }\n  }\n\n"
        "  void bad_type() {\n  }\n\n  void aB() {\n  }\n}\n"
    ),
    "empty_line_separator": (
        "package a;\nimport java.util.List;\nclass A {\n  int x;\n  int y;\n  void f() {\n  }\n  void g() {\n  }\n\n"
        "  A() {\n  }\n}\n"
    ),
    "line_length": (
        "class A {\n  // " + "x" * 100 + "\n  // http://example.com/" + "y" * 100 + "\n  int a;\n}\n"
    ),
}


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("output", type=Path)
    args = ap.parse_args(argv)
    found = run(SNIPPETS)
    out = {}
    for name, src in SNIPPETS.items():
        lines: dict[str, list[int]] = {}
        for line, _col, check, _msg in found[name]:
            lines.setdefault(check, [])
            if line not in lines[check]:
                lines[check].append(line)
        out[name] = {"source": src, "checkstyle": {k: sorted(v) for k, v in sorted(lines.items())}}
    args.output.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
