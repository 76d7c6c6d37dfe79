"""Generate the seeded Java corpus used for the checker-vs-Checkstyle comparison.

Each file is a small solution-style program whose formatting is perturbed by
random style knobs, so that every syntax criterion is both satisfied and
violated somewhere in the corpus.
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path


class Emitter:
    def __init__(self, rng: random.Random, unit: str):
        self.rng = rng
        self.unit = unit
        self.depth = 0
        self.out: list[str] = []

    def line(self, text: str = "") -> None:
        self.out.append((self.unit * self.depth + text) if text else "")

    def open(self, head: str, allman: bool = False) -> None:
        if allman:
            self.line(head)
            self.line("{")
        else:
            sep = "" if self.rng.random() < 0.05 else " "
            self.line(head + sep + "{")
        self.depth += 1

    def close(self, tail: str = "") -> None:
        self.depth -= 1
        self.line("}" + tail)


class Style:
    """Per-file probabilities of deviating from the Google conventions."""

    def __init__(self, rng: random.Random):
        sloppy = rng.random()
        self.p = {k: sloppy * rng.uniform(0.0, 0.6) for k in (
            "allman", "else_newline", "op_space", "generic_space", "op_wrap", "sep_wrap",
            "need_braces", "empty_block", "multi_decl", "one_stmt", "upper_ell", "mod_order",
            "fallthrough", "no_default", "bad_name", "blank_line", "star_import", "wrap_import",
            "long_line", "two_classes", "rcurly_alone", "kw_space",
        )}
        self.rng = rng

    def __call__(self, knob: str) -> bool:
        return self.rng.random() < self.p[knob]


def ident(rng: random.Random, st: Style, base: str, kind: str) -> str:
    if not st("bad_name"):
        return base
    if kind == "type":
        return rng.choice([base.lower(), base + "_x", base.upper()[:1] + "_" + base[1:]])
    if kind == "method":
        return rng.choice([base[:1].upper() + base[1:], base + "_v2", "f", base.upper()])
    if kind == "member":
        return rng.choice([base + "_", "m" + base[:1].upper() + base[1:], base[:1].upper() + base[1:], "x"])
    return rng.choice([base[:1].upper() + base[1:], base + "_tmp", "aB" + base, base.upper()])


def op(st: Style, o: str) -> str:
    return o if st("op_space") else f" {o} "


def kw(st: Style, word: str) -> str:
    return word if st("kw_space") else word + " "


def mods(st: Style, rng: random.Random, words: list[str]) -> str:
    words = list(words)
    if len(words) >= 2 and st("mod_order"):
        rng.shuffle(words)
        if words == sorted(words):
            words.reverse()
    return " ".join(words) + (" " if words else "")


def gen_type(st: Style, rng: random.Random, inner: str) -> str:
    sp = " " if st("generic_space") else ""
    return f"List{sp}<{sp}{inner}{sp}>"


def emit_statements(e: Emitter, st: Style, rng: random.Random, names: dict, budget: int) -> None:
    i_name = names["i"]
    for _ in range(budget):
        choice = rng.randrange(12)
        if choice == 0:
            a, b = names["a"], names["b"]
            if st("multi_decl"):
                e.line(f"int {a} = 0, {b} = 1;")
            else:
                e.line(f"int {a}{op(st, '=')}0;")
                e.line(f"int {b}{op(st, '=')}1;")
            if st("one_stmt"):
                e.line(f"{a}++; {b}--;")
            else:
                e.line(f"{a}{op(st, '+=')}{b};")
        elif choice == 1:
            e.open(f"{kw(st, 'for')}(int {i_name}{op(st, '=')}0; {i_name}{op(st, '<')}n; {i_name}++)",
                   st("allman"))
            e.line(f"total{op(st, '+=')}values[{i_name}]{op(st, '*')}2;")
            e.close()
        elif choice == 2:
            cond = f"total{op(st, '>')}limit"
            if st("need_braces"):
                e.line(f"{kw(st, 'if')}({cond}) total{op(st, '=')}limit;")
            else:
                e.open(f"{kw(st, 'if')}({cond})", st("allman"))
                if not st("empty_block"):
                    e.line(f"total{op(st, '-=')}limit;")
                if st("else_newline"):
                    e.close()
                    e.open("else", st("allman"))
                else:
                    e.depth -= 1
                    e.open("} else", False)
                e.line("total++;")
                e.close()
        elif choice == 3:
            e.open(f"{kw(st, 'switch')}(total{op(st, '%')}3)", st("allman"))
            e.line("case 0:")
            e.depth += 1
            e.line("total++;")
            if st("fallthrough"):
                if rng.random() < 0.3:
                    e.line("// fall through")
            else:
                e.line("break;")
            e.depth -= 1
            e.line("case 1:")
            e.depth += 1
            e.line("total--;")
            e.line("break;")
            e.depth -= 1
            if not st("no_default"):
                e.line("default:")
                e.depth += 1
                e.line("break;")
                e.depth -= 1
            e.close()
        elif choice == 4:
            big = rng.choice(["100000L", "100000l", "7L"]) if st("upper_ell") else "100000L"
            if big.endswith("L") and st("upper_ell"):
                big = big[:-1] + "l"
            e.line(f"long big{op(st, '=')}{big};")
            e.line("total += (int) (big % 7);")
        elif choice == 5:
            if st("op_wrap"):
                e.line(f"int mixed = total +")
                e.line(f"    limit * 2 -")
                e.line(f"    n;")
            else:
                e.line("int mixed = total")
                e.line("    + limit * 2")
                e.line("    - n;")
            e.line("total = mixed;")
        elif choice == 6:
            if st("sep_wrap"):
                e.line("String text = String.valueOf(total).")
                e.line("    trim()")
                e.line("    , unused = \"\";")
            else:
                e.line("String text = String.valueOf(total)")
                e.line("    .trim();")
            e.line("total += text.length();")
        elif choice == 7:
            e.open(f"{kw(st, 'while')}(total{op(st, '>')}1000)", st("allman"))
            e.line(f"total{op(st, '/=')}2;")
            if st("rcurly_alone"):
                e.depth -= 1
                e.line("total--; }")
            else:
                e.close()
        elif choice == 8:
            e.open(kw(st, "try").rstrip(), st("allman"))
            e.line("total = Integer.parseInt(\"\" + total);")
            if st("else_newline"):
                e.close()
                e.open("catch (NumberFormatException ex)", st("allman"))
            else:
                e.depth -= 1
                e.open("} catch (NumberFormatException ex)", False)
            if not st("empty_block"):
                e.line("total = 0;")
            e.close()
        elif choice == 9:
            lst = names["list"]
            e.line(f"{gen_type(st, rng, 'Integer')} {lst}{op(st, '=')}new ArrayList<>();")
            e.line(f"{lst}.add(total);")
            e.line(f"total{op(st, '+=')}{lst}.size(){op(st, '>')}0 ? 1 : 0;")
        elif choice == 10:
            e.open(f"{kw(st, 'do')}".rstrip(), st("allman"))
            e.line("total--;")
            if st("else_newline"):
                e.close()
                e.line(f"{kw(st, 'while')}(total{op(st, '>')}limit);")
            else:
                e.close(f" {kw(st, 'while')}(total{op(st, '>')}limit);")
        else:
            if st("long_line"):
                e.line("total += compute(total, limit, n) + compute(limit, total, n) + compute(n, limit, total)"
                       " + compute(total, total, total);")
            else:
                e.line("total += compute(total, limit, n);")


def gen_file(seed: int, idx: int) -> tuple[str, str]:
    rng = random.Random(seed * 1000 + idx)
    st = Style(rng)
    e = Emitter(rng, rng.choice(["  ", "  ", "  ", "    ", "\t"]))
    cls = ident(rng, st, f"Solution{idx}", "type")
    if rng.random() < 0.5:
        e.line(f"package org.example.p{idx};")
        if not st("blank_line"):
            e.line()
    if st("star_import"):
        e.line("import java.util.*;")
    else:
        if st("wrap_import"):
            e.line("import java.util.")
            e.line("    List;")
        else:
            e.line("import java.util.List;")
        e.line("import java.util.ArrayList;")
    if not st("blank_line"):
        e.line()
    pub = "public " if rng.random() < 0.8 else ""
    e.open(f"{pub}class {cls}", st("allman"))
    member = ident(rng, st, "count", "member")
    e.line(f"{mods(st, rng, ['private', 'static', 'final'])}int LIMIT = {rng.randint(1, 99)};")
    if st("multi_decl"):
        e.line(f"private int {member}, other;")
    else:
        e.line(f"private int {member};")
    if not st("blank_line"):
        e.line()
    names = {
        "a": ident(rng, st, "first", "local"),
        "b": ident(rng, st, "second", "local"),
        "i": ident(rng, st, "i", "local") if rng.random() < 0.3 else "i",
        "list": ident(rng, st, "items", "local"),
    }
    for m in range(rng.randint(1, 3)):
        name = ident(rng, st, f"solve{m}", "method")
        param = ident(rng, st, "values", "param") if rng.random() < 0.5 else "values"
        e.open(f"{mods(st, rng, ['public', 'static'])}int {name}(int[] {param}, int n, int limit)", st("allman"))
        e.line(f"int total{op(st, '=')}0;")
        if param != "values":
            e.line(f"int[] values = {param};")
        emit_statements(e, st, rng, names, rng.randint(2, 6))
        e.line("return total;")
        e.close()
        if not st("blank_line"):
            e.line()
    e.open("private static int compute(int x, int y, int z)", st("allman"))
    e.line("return x + y - z;")
    e.close()
    e.close()
    if st("two_classes"):
        e.line()
        e.open(f"class Helper{idx}", st("allman"))
        e.line("int value;")
        e.close()
    return f"Solution{idx}", "\n".join(e.out) + "\n"


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", type=Path)
    ap.add_argument("--count", type=int, default=47)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    for idx in range(args.count):
        name, text = gen_file(args.seed, idx)
        (args.out / f"{name}.java").write_text(text)


if __name__ == "__main__":
    main()
