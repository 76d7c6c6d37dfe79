"""Style checks following Checkstyle 8.24 semantics under the Google configuration.

Each check returns its violations plus an opportunity count (how many
constructs the rule looked at) so that violation rates can be formed.
A check reports at most one violation per construct; where Checkstyle
would print two messages for the same token they are joined.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

from .attributes import StyleAttribute
from .lexer import LexError, Token, tokenize
from .structure import Block, Declaration, Member, Stmt, StructureTree, parse_structure, split_lines

A = StyleAttribute

MAX_LINE_LENGTH = 100
TAB_WIDTH = 8
LINE_LENGTH_IGNORE = re.compile(r"^package.*|^import.*|a href|href|http://|https://|ftp://")
_PACKAGE_OR_IMPORT = re.compile(r"^(package|import) .*")
FALL_THROUGH_RELIEF = re.compile(r"fallthru|falls? ?through", re.IGNORECASE)

TYPE_NAME = re.compile(r"^[A-Z][a-zA-Z0-9]*$")
METHOD_NAME = re.compile(r"^[a-z][a-z0-9][a-zA-Z0-9_]*$")
MEMBER_NAME = re.compile(r"^[a-z][a-z0-9][a-zA-Z0-9]*$")
PARAMETER_NAME = re.compile(r"^[a-z]([a-z0-9][a-zA-Z0-9]*)?$")
LOCAL_VARIABLE_NAME = re.compile(r"^[a-z]([a-z0-9][a-zA-Z0-9]*)?$")

JLS_ORDER = (
    "public protected private abstract default static final transient volatile "
    "synchronized native strictfp"
).split()

# checks that only need the raw lines / tokens
TEXT_ONLY = frozenset({A.LineLength})
TOKEN_ONLY = frozenset({A.UpperEll})

_ASSIGN_OPS = frozenset("= += -= *= /= %= &= |= ^= <<= >>= >>>=".split())
_WS_AROUND_OPS = _ASSIGN_OPS | frozenset("& | ^ / % == != <= >= && || << >> >>> ->".split())
_WS_AROUND_KEYWORDS = frozenset(
    "if else for while do try catch finally switch synchronized return assert".split()
)
_OP_WRAP = frozenset("& | >>> ^ / == >= && <= instanceof || != % << >> ::".split())
_PRECEDENCE = [
    ("||",), ("&&",), ("|",), ("^",), ("&",), ("==", "!="), ("<", ">", "<=", ">=", "instanceof"),
    ("<<", ">>", ">>>"), ("+", "-"), ("*", "/", "%"),
]
_JAVA_WS = frozenset(" \t\n\x0b\f\r\x1c\x1d\x1e\x1f")


def _is_ws(ch: str) -> bool:
    return ch in _JAVA_WS or (ch.isspace() and ch not in "\xa0  ")


def _jtrim(s: str) -> str:
    """Java String.trim(): strip every char <= U+0020."""
    i, j = 0, len(s)
    while i < j and s[i] <= " ":
        i += 1
    while j > i and s[j - 1] <= " ":
        j -= 1
    return s[i:j]


def _blank(s: str) -> bool:
    return all(_is_ws(c) for c in s)


def expanded_length(line: str, tab_width: int = TAB_WIDTH) -> int:
    n = 0
    for ch in line:
        n = (n // tab_width + 1) * tab_width if ch == "\t" else n + 1
    return n


@dataclass(frozen=True, order=True)
class Violation:
    line: int
    column: int
    attribute: StyleAttribute
    message: str

    def to_dict(self) -> dict:
        return {"attribute": self.attribute.value, "line": self.line, "column": self.column,
                "message": self.message}


@dataclass
class CheckReport:
    file: str
    violations: list[Violation] = field(default_factory=list)
    opportunities: dict[StyleAttribute, int] = field(default_factory=dict)
    unparseable: bool = False
    diagnostic: str | None = None
    partial: bool = False

    def count(self, attr: StyleAttribute) -> int:
        return sum(1 for v in self.violations if v.attribute is attr)

    def lines(self, attr: StyleAttribute) -> set[int]:
        return {v.line for v in self.violations if v.attribute is attr}

    def to_dict(self) -> dict:
        return {
            "file": self.file,
            "unparseable": self.unparseable,
            "diagnostic": self.diagnostic,
            "partial": self.partial,
            "violations": [v.to_dict() for v in self.violations],
            "opportunities": {a.value: self.opportunities.get(a, 0) for a in A},
        }


class Context:
    """Source text plus structure, with the lookups the checks share."""

    def __init__(self, source: str, tree: StructureTree, tokens: list[Token] | None = None,
                 tab_width: int = TAB_WIDTH):
        self.source = source
        self.tree = tree
        self.sig = tree.sig
        self.lines = tree.lines or split_lines(source)
        self.tokens = tokens
        self.tab_width = tab_width

    def line(self, i: int) -> int:
        return self.sig[i].line

    def col0(self, i: int) -> int:
        return self.sig[i].column - 1

    def text_of_line(self, n: int) -> str:
        return self.lines[n - 1] if 0 < n <= len(self.lines) else ""

    def next_sig(self, i: int) -> int | None:
        return i + 1 if i + 1 < len(self.sig) else None

    def v(self, attr: StyleAttribute, i: int, message: str) -> Violation:
        t = self.sig[i]
        return Violation(t.line, t.column, attr, message)

    def blank_line(self, n: int) -> bool:
        return _jtrim(self.text_of_line(n)) == ""

    def only_ws_before(self, i: int) -> bool:
        return _blank(self.text_of_line(self.line(i))[: self.col0(i)])

    def rest_after(self, i: int) -> str:
        t = self.sig[i]
        return self.text_of_line(t.line)[t.column - 1 + len(t.text):]

    @cached_property
    def comments(self) -> list[tuple[int, int, int, int]]:
        """(start line, start col0, end line, end col0 inclusive) of every comment."""
        out = []
        for t in self.tokens or []:
            if t.kind != "comment":
                continue
            body = t.text
            end_line = t.end_line
            if end_line == t.line:
                end_col = t.column - 1 + len(body) - 1
            else:
                last = max(body.rfind("\n"), body.rfind("\r"))
                end_col = len(body) - last - 2
            out.append((t.line, t.column - 1, end_line, end_col))
        return out

    def in_comment(self, line: int, c0: int, c1: int) -> bool:
        for sl, sc, el, ec in self.comments:
            if (sl, sc) <= (line, c1) and (line, c0) <= (el, ec):
                return True
        return False

    @cached_property
    def block_of_open(self) -> dict[int, Block]:
        return {b.open: b for b in self.tree.blocks}

    @cached_property
    def block_of_close(self) -> dict[int, Block]:
        return {b.close: b for b in self.tree.blocks}

    @cached_property
    def all_stmts(self) -> list[Stmt]:
        seen = {id(s): s for s in self.tree.statements}
        for s in self.tree.block_stmt.values():
            seen.setdefault(id(s), s)
        return sorted(seen.values(), key=lambda s: (s.start, s.end))

    @cached_property
    def stmt_lists(self) -> list[list[Stmt]]:
        out = [s.stmts for s in self.tree.block_stmt.values()]
        for _, sw in self.tree.switches:
            out.extend(arm.stmts for arm in sw.arms)
        return out

    # expression anchors ------------------------------------------------
    def root_line(self, i: int, j: int) -> int:
        """Line of the node Checkstyle would use as the root of expression sig[i:j]."""
        if i >= j:
            return self.line(min(i, len(self.sig) - 1))
        sig, roles, match = self.sig, self.tree.roles, self.tree.match
        top: list[int] = []
        k = i
        while k < j:
            x = sig[k].text
            if x in ("(", "[", "{") and k in match and match[k] < j:
                top.append(k)
                k = match[k] + 1
                continue
            top.append(k)
            k += 1
        for k in top:
            if sig[k].text == "->":
                return self.line(k)
        for k in top:
            if sig[k].text in _ASSIGN_OPS:
                return self.line(k)
        for k in top:
            if sig[k].text == "?" and roles.get(k) == "ternary":
                return self.line(k)
        for group in _PRECEDENCE:
            for k in reversed(top):
                x = sig[k].text
                if x in group and roles.get(k) not in ("generic", "unary", "wildcard", "type-bound"):
                    if x in ("+", "-") and roles.get(k) != "binary":
                        continue
                    return self.line(k)
        last = top[-1]
        x = sig[last].text
        if x in ("++", "--") and roles.get(last) == "postfix":
            return self.line(last)
        if x == "(" and last in match:
            open_ = last
            if open_ == i:
                return self.root_line(open_ + 1, match[open_])
            if roles.get(match[open_]) == "cast":
                return self.line(i)
            if any(sig[k].text == "new" for k in top if k < open_) and not any(
                sig[k].text == "." for k in top if k < open_ and sig[i].text == "new"
            ) and sig[i].text == "new":
                return self.line(i)
            return self.line(open_)
        if x in ("[", "{"):
            if sig[i].text == "new":
                return self.line(i)
            return self.line(last)
        if len(top) >= 2 and sig[top[-2]].text == ".":
            return self.line(top[-2])
        return self.line(i)


# ---------------------------------------------------------------------------
# individual checks


def check_line_length(ctx: Context):
    out = []
    for n, line in enumerate(ctx.lines, start=1):
        length = expanded_length(line, ctx.tab_width)
        if length > MAX_LINE_LENGTH and not _PACKAGE_OR_IMPORT.match(line) \
                and not LINE_LENGTH_IGNORE.search(line):
            out.append(Violation(n, 1, A.LineLength,
                                 f"Line is longer than {MAX_LINE_LENGTH} characters (found {length})."))
    return out, len(ctx.lines)


def check_upper_ell(ctx: Context):
    out = []
    longs = [i for i, t in enumerate(ctx.sig) if t.kind == "literal-long"]
    for i in longs:
        if ctx.sig[i].text.endswith("l"):
            out.append(ctx.v(A.UpperEll, i, "Should use uppercase 'L'."))
    return out, len(longs)


def _import_like(ctx: Context) -> list[tuple[int, int]]:
    items = []
    if ctx.tree.package is not None:
        items.append(ctx.tree.package)
    items.extend((imp.start, imp.end) for imp in ctx.tree.imports)
    return items


def check_no_line_wrap(ctx: Context):
    out = []
    items = _import_like(ctx)
    for start, end in items:
        if ctx.line(start) != ctx.line(end):
            out.append(ctx.v(A.NoLineWrap, start, f"{ctx.sig[start].text} statement should not be line-wrapped."))
    return out, len(items)


def check_avoid_star_import(ctx: Context):
    out = []
    for imp in ctx.tree.imports:
        if imp.is_star:
            dot = imp.end - 2
            out.append(ctx.v(A.AvoidStarImport, dot,
                             f"Using the '.*' form of import should be avoided - {imp.path}.*."))
    return out, len(_import_like(ctx))


def check_one_top_level_class(ctx: Context):
    types = [m.decl for m in ctx.tree.top_level
             if m.kind == "type" and m.decl.type_kind in ("class", "interface", "enum")]
    public_found = False
    by_line: dict[int, Declaration] = {}
    for d in types:
        if d.has_modifier(ctx.tree, "public"):
            public_found = True
        else:
            by_line.setdefault(ctx.line(d.start), d)
    out = []
    keys = sorted(by_line)
    if not public_found and keys:
        keys = keys[1:]
    for ln in keys:
        d = by_line[ln]
        name = ctx.sig[d.name].text
        out.append(Violation(ln, ctx.sig[d.start].column, A.OneTopLevelClass,
                             f"Top-level class {name} has to reside in its own source file."))
    return out, len(types)


# EmptyLineSeparator -----------------------------------------------------

_ELS_VISITED = {"package", "import", "type", "static-init", "instance-init", "method", "ctor", "field"}


def _member_end_line(ctx: Context, m: Member) -> int:
    if m.kind == "field" and ctx.sig[m.end].text == ",":
        d = m.decl
        if d is not None and ctx.sig[d.name + 1].text == "=":
            return ctx.root_line(d.name + 2, m.end)
        return ctx.line(d.name if d is not None else m.end)
    return ctx.line(m.end)


def _has_empty_line_between(ctx: Context, first: int, last: int) -> bool:
    return any(ctx.blank_line(n) for n in range(first, last + 1))


def _els_sequence(ctx: Context, members: list[Member], type_fields: bool, out: list, counter: list):
    for idx, m in enumerate(members):
        if m.kind not in _ELS_VISITED:
            continue
        if m.kind == "type" and m.decl is not None and m.decl.type_kind == "annotation":
            continue
        counter[0] += 1
        nxt = members[idx + 1] if idx + 1 < len(members) else None
        if m.kind == "package":
            ln = ctx.line(m.start)
            if ln > 1 and not ctx.blank_line(ln - 1):
                out.append(Violation(ln, ctx.sig[m.start].column, A.EmptyLineSeparator,
                                     "'package' should be separated from previous statement."))
        if nxt is None:
            continue
        empty_after = _has_empty_line_between(ctx, _member_end_line(ctx, m) + 1, ctx.line(nxt.start) - 1)
        if empty_after:
            continue
        if m.kind == "field":
            if not type_fields or nxt.kind == "field":
                continue
        elif m.kind == "import":
            if nxt.kind == "import":
                continue
        out.append(ctx.v(A.EmptyLineSeparator, nxt.start,
                         f"'{ctx.sig[nxt.start].text}' should be separated from previous statement."))


def check_empty_line_separator(ctx: Context):
    out: list[Violation] = []
    counter = [0]
    _els_sequence(ctx, ctx.tree.top_level, False, out, counter)
    for b in ctx.tree.blocks:
        if b.tag == "class-body":
            _els_sequence(ctx, b.members, b.detail == "class", out, counter)
    # local classes are followed by ordinary statements
    for stmts in ctx.stmt_lists:
        for k, s in enumerate(stmts):
            if s.kind != "local-class":
                continue
            counter[0] += 1
            if k + 1 < len(stmts):
                nxt = stmts[k + 1]
                if not _has_empty_line_between(ctx, ctx.line(s.end) + 1, ctx.line(nxt.start) - 1):
                    out.append(ctx.v(A.EmptyLineSeparator, nxt.start,
                                     f"'{ctx.sig[nxt.start].text}' should be separated from previous statement."))
    return out, counter[0]


# braces -----------------------------------------------------------------


def _stmt_node_line(ctx: Context, s: Stmt) -> int:
    """Line Checkstyle associates with a statement node inside a block."""
    if s.kind in ("expression", "local-var", "unknown"):
        return ctx.line(s.end)
    return ctx.line(s.start)


def _first_child_line(ctx: Context, s: Stmt) -> int:
    if s.kind == "expression":
        return ctx.root_line(s.start, s.end)
    return ctx.line(s.start)


def _right_curly_constructs(ctx: Context):
    """Yield (rcurly, lcurly, next_token, policy, should_check_last)."""
    tree = ctx.tree

    def after(i: int) -> int | None:
        return ctx.next_sig(i)

    for s in ctx.all_stmts:
        if s.kind == "if":
            if s.body is not None and s.body.kind == "block":
                if s.orelse is not None:
                    yield s.body.end, s.body.start, s.orelse.start, "same", False, s.body
                else:
                    yield s.body.end, s.body.start, after(s.end), "same", True, s.body
            if s.orelse is not None and s.orelse.body is not None and s.orelse.body.kind == "block":
                b = s.orelse.body
                yield b.end, b.start, after(s.end), "same", True, b
        elif s.kind == "try":
            parts: list[Stmt] = [s.body] + [c.body for c in s.catches]
            heads: list[int] = [c.start for c in s.catches]
            if s.final is not None:
                parts.append(s.final.body)
                heads.append(s.final.start)
            for k, b in enumerate(parts):
                if b is None or b.kind != "block":
                    continue
                if k < len(heads):
                    yield b.end, b.start, heads[k], "same", False, b
                else:
                    yield b.end, b.start, after(s.end), "same", True, b
        elif s.kind == "do":
            if s.body is not None and s.body.kind == "block":
                while_kw = s.body.end + 1
                yield s.body.end, s.body.start, while_kw, "same", False, s.body
        elif s.kind in ("for", "foreach", "while"):
            if s.body is not None and s.body.kind == "block":
                yield s.body.end, s.body.start, after(s.end), "alone", False, s.body
    for b in tree.blocks:
        if b.tag == "class-body" and b.detail == "class":
            yield b.close, b.open, after(b.close), "alone", False, None
        elif b.tag == "method-body" or (b.tag == "control-body" and b.detail in ("static-init", "instance-init")):
            yield b.close, b.open, after(b.close), "alone", False, tree.block_stmt.get(b.open)


def check_right_curly(ctx: Context):
    out = []
    seen = set()
    count = 0
    for rc, lc, nxt, policy, check_last, block_stmt in _right_curly_constructs(ctx):
        if rc in seen:
            continue
        seen.add(rc)
        count += 1
        rline = ctx.line(rc)
        col = ctx.sig[rc].column
        msg = None
        if policy == "same":
            stmts = block_stmt.stmts if block_stmt is not None else []
            line_break_before = not stmts or _stmt_node_line(ctx, stmts[-1]) != rline
            if not line_break_before and ctx.line(lc) != rline:
                msg = f"'}}' at column {col} should have line break before."
            elif check_last:
                if nxt is not None and ctx.line(nxt) == rline:
                    msg = f"'}}' at column {col} should be alone on a line."
            elif nxt is not None and ctx.line(nxt) != rline:
                msg = (f"'}}' at column {col} should be on the same line as the next part of a "
                       "multi-block statement (one that directly contains multiple blocks: "
                       "if/else-if/else, do/while or try/catch/finally).")
        else:
            alone = (nxt is None or ctx.line(nxt) != rline) and ctx.only_ws_before(rc)
            if not alone:
                msg = f"'}}' at column {col} should be alone on a line."
        if msg:
            out.append(ctx.v(A.RightCurly, rc, msg))
    return out, count


def _left_curly_braces(ctx: Context):
    """Yield (brace index, is_slist, first statement or None)."""
    tree = ctx.tree
    for b in tree.blocks:
        if b.tag == "class-body":
            yield b.open, False, None
        elif b.tag == "switch-body":
            yield b.open, False, None
        elif b.tag in ("method-body", "control-body"):
            if b.detail == "instance-init":
                continue
            st = tree.block_stmt.get(b.open)
            yield b.open, True, (st.stmts[0] if st is not None and st.stmts else None)
    # a block that is the first statement of a switch arm belongs to the last case label
    for _, sw in tree.switches:
        for arm in sw.arms:
            if arm.stmts and arm.stmts[0].kind == "block":
                st = arm.stmts[0]
                yield st.start, True, (st.stmts[0] if st.stmts else None)


def check_left_curly(ctx: Context):
    out = []
    count = 0
    seen = set()
    for brace, is_slist, first in _left_curly_braces(ctx):
        if brace in seen:
            continue
        seen.add(brace)
        count += 1
        line = ctx.text_of_line(ctx.line(brace))
        c = ctx.col0(brace)
        if c + 1 < len(line) and line[c + 1] == "}":
            continue
        msgs = []
        col = c + 1
        if _blank(line[:c]):
            msgs.append(f"'{{' at column {col} should be on the previous line.")
        if is_slist and first is not None and _first_child_line(ctx, first) == ctx.line(brace):
            msgs.append(f"'{{' at column {col} should have line break after.")
        if msgs:
            out.append(ctx.v(A.LeftCurly, brace, " ".join(msgs)))
    return out, count


# whitespace ---------------------------------------------------------------

_EMPTY_OK_DETAILS = frozenset({"method", "ctor", "for", "while", "do", "lambda"})


def _brace_exempt(ctx: Context, i: int) -> bool | None:
    """None when the brace is not checked at all, True when exempt as empty."""
    tree = ctx.tree
    if tree.roles.get(i) == "array-init":
        return None
    b = ctx.block_of_open.get(i) or ctx.block_of_close.get(i)
    if b is None:
        return None
    if b.detail == "array-init":
        return None
    empty = b.close == b.open + 1
    if not empty:
        return False
    if b.tag in ("class-body", "switch-body"):
        return True
    return b.detail in _EMPTY_OK_DETAILS


def _ws_candidates(ctx: Context):
    roles = ctx.tree.roles
    for i, t in enumerate(ctx.sig):
        x = t.text
        r = roles.get(i)
        if t.kind == "keyword":
            if x in _WS_AROUND_KEYWORDS:
                yield i
            continue
        if t.kind not in ("operator", "separator"):
            continue
        if x in _WS_AROUND_OPS:
            if x in (">>", ">>>") and r == "generic":
                continue
            yield i
        elif x == "*":
            if r != "star-import":
                yield i
        elif x in ("<", ">"):
            if r not in ("generic",):
                yield i
        elif x in ("+", "-"):
            if r == "binary":
                yield i
        elif x == "?":
            if r == "ternary":
                yield i
        elif x == ":":
            if r in ("ternary", "assert"):
                yield i
        elif x in ("{", "}"):
            if _brace_exempt(ctx, i) is not None:
                yield i


def check_whitespace_around(ctx: Context):
    out = []
    count = 0
    for i in _ws_candidates(ctx):
        count += 1
        t = ctx.sig[i]
        if t.text in ("{", "}") and _brace_exempt(ctx, i):
            continue
        line = ctx.text_of_line(t.line)
        c = t.column - 1
        before, after = c - 1, c + len(t.text)
        msgs = []
        if before >= 0 and not _is_ws(line[before]) and not _double_brace_prev(ctx, i):
            msgs.append(f"WhitespaceAround: '{t.text}' is not preceded with whitespace.")
        if after < len(line):
            nc = line[after]
            skip = (t.text == "return" and ctx.next_sig(i) is not None and ctx.sig[i + 1].text == ";") \
                or (t.text == "}" and nc in ");,.") or _double_brace_next(ctx, i)
            if not skip and not _is_ws(nc):
                msgs.append(
                    f"WhitespaceAround: '{t.text}' is not followed by whitespace. Empty blocks may only be "
                    "represented as '{}' when not part of a multi-block statement (4.1.3)")
        if msgs:
            out.append(ctx.v(A.WhitespaceAround, i, " ".join(msgs)))
    return out, count


def _double_brace_prev(ctx: Context, i: int) -> bool:
    t = ctx.sig[i]
    if t.text == "{":
        b = ctx.block_of_open.get(i)
        prev = ctx.block_of_open.get(i - 1)
        return b is not None and b.detail == "instance-init" and prev is not None and prev.detail == "anon"
    if t.text == "}":
        b = ctx.block_of_close.get(i)
        prev = ctx.block_of_close.get(i - 1)
        return b is not None and b.detail == "anon" and prev is not None and prev.detail == "instance-init"
    return False


def _double_brace_next(ctx: Context, i: int) -> bool:
    t = ctx.sig[i]
    if t.text == "{":
        b = ctx.block_of_open.get(i)
        nxt = ctx.block_of_open.get(i + 1)
        return b is not None and b.detail == "anon" and nxt is not None and nxt.detail == "instance-init"
    if t.text == "}":
        b = ctx.block_of_close.get(i)
        nxt = ctx.block_of_close.get(i + 1)
        return b is not None and b.detail == "instance-init" and nxt is not None and nxt.detail == "anon"
    return False


def check_generic_whitespace(ctx: Context):
    out = []
    roles = ctx.tree.roles
    gens = [i for i, t in enumerate(ctx.sig) if roles.get(i) == "generic" and t.text in ("<", ">")]
    depth = 0
    stack: list[int] = []
    for i in gens:
        t = ctx.sig[i]
        line = ctx.text_of_line(t.line)
        c = t.column - 1
        msgs = []
        if t.text == "<":
            if c - 1 >= 0:
                if i in ctx.tree.type_param_opens:
                    if not _is_ws(line[c - 1]):
                        msgs.append("GenericWhitespace '<' is not preceded with whitespace.")
                elif _is_ws(line[c - 1]) and not _blank(line[:c - 1]):
                    msgs.append("GenericWhitespace '<' is preceded with whitespace.")
            if c + 1 < len(line) and _is_ws(line[c + 1]):
                msgs.append("GenericWhitespace '<' is followed by whitespace.")
            stack.append(i)
            depth += 1
        else:
            opener = stack.pop() if stack else None
            if c - 1 >= 0 and _is_ws(line[c - 1]) and not _blank(line[:c - 1]):
                msgs.append("GenericWhitespace '>' is preceded with whitespace.")
            after = c + 1
            if after < len(line):
                if depth == 1:
                    before_method = opener is not None and opener > 0 and ctx.sig[opener - 1].text in (".", "::")
                    ch = line[after]
                    if before_method:
                        if _is_ws(ch):
                            msgs.append("GenericWhitespace '>' is followed by whitespace.")
                    elif not (ch in "(),[.:;" or _is_ws(ch)):
                        msgs.append("GenericWhitespace '>' should followed by whitespace.")
                else:
                    amp = line.find("&", after)
                    if amp >= 1 and _blank(line[after:amp]):
                        if amp == after:
                            msgs.append("GenericWhitespace '&' is not preceded with whitespace.")
                        elif amp - after != 1:
                            msgs.append("GenericWhitespace '>' is followed by whitespace.")
                    elif line[after] == " ":
                        msgs.append("GenericWhitespace '>' is followed by whitespace.")
            depth -= 1
        if msgs:
            out.append(ctx.v(A.GenericWhitespace, i, " ".join(msgs)))
    return out, len(gens)


def _op_wrap_candidates(ctx: Context):
    roles = ctx.tree.roles
    for i, t in enumerate(ctx.sig):
        x = t.text
        r = roles.get(i)
        if x in _OP_WRAP:
            if x == "&" and r == "type-bound":
                continue
            if x in (">>", ">>>") and r == "generic":
                continue
            yield i
        elif x == "*" and r != "star-import":
            yield i
        elif x in ("<", ">") and r != "generic":
            yield i
        elif x in ("+", "-") and r == "binary":
            yield i
        elif x == "?" and r == "ternary":
            yield i


def check_operator_wrap(ctx: Context):
    out = []
    count = 0
    for i in _op_wrap_candidates(ctx):
        count += 1
        t = ctx.sig[i]
        line = ctx.text_of_line(t.line)
        if t.text != _jtrim(line) and _blank(ctx.rest_after(i)):
            out.append(ctx.v(A.OperatorWrap, i, f"'{t.text}' should be on a new line."))
    return out, count


def check_separator_wrap(ctx: Context):
    out = []
    count = 0
    roles = ctx.tree.roles
    for i, t in enumerate(ctx.sig):
        x = t.text
        if x in (".", "::"):
            count += 1
            if _jtrim(ctx.rest_after(i)) == "":
                out.append(ctx.v(A.SeparatorWrap, i, f"'{x}' should be on a new line."))
        elif x in (",", "...") or (x == "[" and roles.get(i) == "array-declarator"):
            count += 1
            line = ctx.text_of_line(t.line)
            if _jtrim(line[: t.column - 1]) == "":
                out.append(ctx.v(A.SeparatorWrap, i, f"'{x}' should be on the previous line."))
    return out, count


# control statements -------------------------------------------------------

_CONTROL_KINDS = {"if", "for", "foreach", "while", "do", "try", "switch", "sync"}


def _control_count(ctx: Context) -> int:
    n = 0
    for s in ctx.tree.statements:
        if s.kind in _CONTROL_KINDS:
            n += 1
            if s.kind == "if" and s.orelse is not None:
                n += 1
            if s.kind == "try":
                n += len(s.catches) + (s.final is not None)
    return n


def _block_has_text(ctx: Context, open_: int, close: int) -> bool:
    lo, hi = ctx.sig[open_], ctx.sig[close]
    if lo.line == hi.line:
        return not _blank(ctx.text_of_line(lo.line)[lo.column:hi.column - 1])
    first = ctx.text_of_line(lo.line)[lo.column:]
    last = ctx.text_of_line(hi.line)[:hi.column - 1]
    if not (_blank(first) and _blank(last)):
        return True
    return not all(_blank(ctx.text_of_line(n)) for n in range(lo.line + 1, hi.line))


def check_empty_block(ctx: Context):
    out = []
    targets = []
    for s in ctx.tree.statements:
        if s.kind == "if":
            if s.body is not None and s.body.kind == "block":
                targets.append(("if", s.body.start, s.body.end))
            if s.orelse is not None and s.orelse.body is not None and s.orelse.body.kind == "block":
                targets.append(("else", s.orelse.body.start, s.orelse.body.end))
        elif s.kind == "try":
            if s.body is not None:
                targets.append(("try", s.body.start, s.body.end))
            if s.final is not None:
                targets.append(("finally", s.final.body.start, s.final.body.end))
        elif s.kind == "switch":
            b = next((bb for bb in ctx.tree.blocks if bb.tag == "switch-body" and s.start < bb.open <= s.end), None)
            if b is not None:
                targets.append(("switch", b.open, b.close))
    for kw, o, c in targets:
        if not _block_has_text(ctx, o, c):
            out.append(ctx.v(A.EmptyBlock, o, f"Empty {kw} block."))
    return out, _control_count(ctx)


def check_need_braces(ctx: Context):
    out = []
    for s in ctx.tree.statements:
        kw = ctx.sig[s.start].text
        if s.kind in ("if", "for", "foreach", "while", "do"):
            if s.body is None or s.body.kind != "block":
                out.append(ctx.v(A.NeedBraces, s.start, f"'{kw}' construct must use '{{}}'s."))
        if s.kind == "if" and s.orelse is not None:
            inner = s.orelse.body
            if inner is not None and inner.kind not in ("block", "if"):
                out.append(ctx.v(A.NeedBraces, s.orelse.start, "'else' construct must use '{}'s."))
    return out, _control_count(ctx)


# statements ----------------------------------------------------------------


def _semicolons(ctx: Context) -> list[int]:
    roles = ctx.tree.roles
    return [i for i, t in enumerate(ctx.sig) if t.text == ";" and roles.get(i) != "empty-statement"]


def check_multiple_variable_declarations(ctx: Context):
    flagged: dict[int, Violation] = {}

    def flag(start: int, msg: str) -> None:
        if start not in flagged:
            flagged[start] = ctx.v(A.MultipleVariableDeclarations, start, msg)

    comma_msg = "Each variable declaration must be in its own statement."
    line_msg = "Only one variable definition per line allowed."
    # fields
    for b in ctx.tree.blocks:
        if b.tag != "class-body":
            continue
        ms = [m for m in b.members]
        for k, m in enumerate(ms):
            if m.kind != "field":
                continue
            nxt = ms[k + 1] if k + 1 < len(ms) else None
            group_start = m.decl.start
            if nxt is not None and nxt.kind == "comma":
                flag(group_start, comma_msg)
            elif nxt is not None and nxt.kind == "field":
                if ctx.line(m.end) == ctx.line(nxt.decl.start):
                    flag(group_start, line_msg)
    # locals
    for stmts in ctx.stmt_lists:
        for k, s in enumerate(stmts):
            if s.kind != "local-var":
                continue
            if len(s.decls) > 1:
                flag(s.start, comma_msg)
            nxt = stmts[k + 1] if k + 1 < len(stmts) else None
            if nxt is not None and nxt.kind == "local-var" and ctx.line(s.end - 1) == ctx.line(nxt.start):
                flag(s.start, line_msg)
    out = [flagged[k] for k in sorted(flagged)]
    return out, len(_semicolons(ctx))


def _semi_anchor_lines(ctx: Context) -> dict[int, int]:
    """For each statement-terminating ';', the line Checkstyle treats as the statement line."""
    sig = ctx.sig
    anchors: dict[int, int] = {}
    for s in ctx.all_stmts:
        if s.end >= len(sig) or sig[s.end].text != ";":
            continue
        if s.kind == "expression":
            anchors[s.end] = ctx.root_line(s.start, s.end)
        elif s.kind == "local-var":
            anchors[s.end] = ctx.line(s.decls[-1].start) if s.decls else ctx.line(s.start)
        elif s.kind in ("return", "throw", "assert"):
            if s.end - s.start > 1:
                lo = s.start + 1
                if s.kind == "assert":
                    colon = next((k for k in range(lo, s.end) if ctx.tree.roles.get(k) == "assert"), None)
                    if colon is not None:
                        lo = colon + 1
                anchors[s.end] = ctx.root_line(lo, s.end)
        elif s.kind in ("break", "continue", "do"):
            if s.end - 1 > s.start:
                anchors[s.end] = ctx.line(s.end - 1)
    for d in ctx.tree.declarations:
        if d.kind in ("member-field", "constant") and sig[d.end].text == ";":
            eq = d.name + 1
            while eq < d.end and sig[eq].text == "[":
                eq += 2
            anchors[d.end] = ctx.line(eq) if sig[eq].text == "=" else ctx.line(d.name)
    return anchors


def check_one_statement_per_line(ctx: Context):
    sig = ctx.sig
    roles = ctx.tree.roles
    anchors = _semi_anchor_lines(ctx)
    for_init_at: dict[int, int] = {}
    for_iter_at: dict[int, int] = {}
    for_iter_end: dict[int, int] = {}
    for kw, iter_start, close in ctx.tree.for_headers:
        for_init_at[kw + 2] = kw
        for_iter_at[iter_start] = ctx.line(iter_start)
        for_iter_end[close] = kw
    lam_start = {a for a, _ in ctx.tree.lambdas}
    lam_end: dict[int, list[int]] = {}
    for a, e in ctx.tree.lambdas:
        if e >= 0:
            lam_end.setdefault(e, []).append(a)

    out = []
    count = 0
    last_end = -1
    for_end = 0
    lambda_end = 0
    in_for_header = False
    lambda_counts: list[int] = []
    for i, t in enumerate(sig):
        if i in for_init_at:
            in_for_header = True
        if i in for_iter_at:
            for_end = for_iter_at[i]
        if i in for_iter_end:
            in_for_header = False
        if i in lam_start:
            lambda_counts.append(0)
        if t.text == ";" and roles.get(i) != "empty-statement":
            count += 1
            line = anchors.get(i, t.line)
            same = last_end == line and for_end != line and lambda_end != line
            if lambda_counts:
                lambda_counts[-1] += 1
                if not in_for_header and lambda_counts[-1] > 1 and same:
                    out.append(ctx.v(A.OneStatementPerLine, i, "Only one statement per line allowed."))
            elif roles.get(i) == "resource":
                pass
            elif not in_for_header and same:
                out.append(ctx.v(A.OneStatementPerLine, i, "Only one statement per line allowed."))
            last_end = t.line
            for_end = 0
            lambda_end = 0
        for a in lam_end.get(i, ()):
            if lambda_counts:
                lambda_counts.pop()
            lambda_end = ctx.line(a)
    return out, count


# modifiers ------------------------------------------------------------------


def _annotation_on_type(ctx: Context, d: Declaration) -> bool:
    if d.kind in ("member-field", "constant", "local-variable", "parameter", "ctor", "catch-parameter",
                  "resource"):
        return True
    if d.kind == "method":
        # the return type is the token before the name (skipping array dims)
        k = d.name - 1
        while k > 0 and ctx.sig[k].text in ("[", "]"):
            k -= 1
        return ctx.sig[k].text != "void"
    return False


def check_modifier_order(ctx: Context):
    out = []
    count = 0
    seen = set()
    for d in ctx.tree.declarations:
        mods = d.modifiers
        # declarators sharing one statement share one modifier list
        if not mods or mods in seen:
            continue
        seen.add(mods)
        if len(mods) >= 2:
            count += 1
        roles = ctx.tree.roles
        k = 0
        while k < len(mods) and roles.get(mods[k]) == "annotation":
            k += 1
        if k == len(mods):
            continue
        idx = 0
        offending = None
        while k < len(mods):
            m = mods[k]
            if roles.get(m) == "annotation":
                if not _annotation_on_type(ctx, d):
                    offending = m
                break
            text = ctx.sig[m].text
            while idx < len(JLS_ORDER) and JLS_ORDER[idx] != text:
                idx += 1
            if idx == len(JLS_ORDER):
                offending = m
                break
            k += 1
        if offending is not None:
            if roles.get(offending) == "annotation":
                name = ctx.sig[offending + 1].text
                msg = f"'@{name}' annotation modifier does not precede non-annotation modifiers."
            else:
                msg = f"'{ctx.sig[offending].text}' modifier out of order with the JLS suggestions."
            out.append(ctx.v(A.ModifierOrder, offending, msg))
    return out, count


# switch -------------------------------------------------------------------


def _terminated(s: Stmt | None, use_break: bool, use_continue: bool) -> bool:
    if s is None:
        return False
    k = s.kind
    if k in ("return", "throw"):
        return True
    if k == "break":
        return use_break
    if k == "continue":
        return use_continue
    if k == "block":
        return bool(s.stmts) and _terminated(s.stmts[-1], use_break, use_continue)
    if k == "if":
        return s.orelse is not None and _terminated(s.body, use_break, use_continue) \
            and _terminated(s.orelse.body, use_break, use_continue)
    if k in ("for", "foreach", "while", "do"):
        return _terminated(s.body, False, False)
    if k == "try":
        if s.final is not None and _terminated(s.final.body, use_break, use_continue):
            return True
        ok = _terminated(s.body, use_break, use_continue)
        for c in s.catches:
            if not ok:
                break
            ok = _terminated(c.body, use_break, use_continue)
        return ok
    if k == "switch":
        if not s.arms:
            return False
        return all(arm.stmts and _terminated(arm.stmts[-1], False, use_continue) for arm in s.arms)
    if k == "sync":
        return _terminated(s.body, use_break, use_continue)
    return False


def _relief_comment(ctx: Context, text: str, line: int) -> bool:
    m = FALL_THROUGH_RELIEF.search(text)
    return bool(m) and ctx.in_comment(line, m.start(), m.end() - 1)


def check_fall_through(ctx: Context):
    out = []
    count = 0
    for _, sw in ctx.tree.switches:
        arms = sw.arms
        count += len(arms)
        for k in range(len(arms) - 1):
            arm, nxt = arms[k], arms[k + 1]
            if arm.stmts and _terminated(arm.stmts[-1], True, True):
                continue
            nxt_kw = nxt.labels[0][1]
            end_line, end_col = ctx.line(nxt_kw), ctx.col0(nxt_kw)
            if _relief_comment(ctx, ctx.text_of_line(end_line)[:end_col], end_line):
                continue
            start_line = ctx.line(arm.labels[0][1])
            relieved = False
            for n in range(end_line - 1, start_line, -1):
                text = ctx.text_of_line(n)
                if not _blank(text):
                    relieved = _relief_comment(ctx, text, n)
                    break
            if not relieved:
                out.append(ctx.v(A.FallThrough, nxt_kw, "Fall through from previous branch of the switch statement."))
    return out, count


def check_missing_switch_default(ctx: Context):
    out = []
    for kw, sw in ctx.tree.switches:
        if not any(label == "default" for arm in sw.arms for label, _ in arm.labels):
            out.append(ctx.v(A.MissingSwitchDefault, kw, "switch without \"default\" clause."))
    return out, len(ctx.tree.switches)


# naming ------------------------------------------------------------------


def _owner_type_name(ctx: Context, d: Declaration) -> str | None:
    if d.block is None:
        return None
    b = ctx.tree.blocks[d.block]
    if b.owner is None:
        return None
    return ctx.sig[b.owner.name].text


def _has_annotation(ctx: Context, d: Declaration, names: tuple[str, ...]) -> bool:
    for m in d.modifiers:
        if ctx.tree.roles.get(m) == "annotation":
            k = m + 1
            parts = [ctx.sig[k].text]
            while k + 2 < len(ctx.sig) and ctx.sig[k + 1].text == "." and ctx.sig[k + 2].kind == "identifier":
                k += 2
                parts.append(ctx.sig[k].text)
            if ".".join(parts) in names:
                return True
    return False


def _naming(ctx: Context, attr: StyleAttribute, decls, pattern: re.Pattern, label: str):
    out = []
    n = 0
    for d in decls:
        n += 1
        name = ctx.sig[d.name].text
        if not pattern.match(name):
            out.append(ctx.v(attr, d.name, f"{label} name '{name}' must match pattern '{pattern.pattern}'."))
    return out, n


def check_type_name(ctx: Context):
    decls = [d for d in ctx.tree.declarations if d.kind == "type"]
    return _naming(ctx, A.TypeName, decls, TYPE_NAME, "Type")


def check_method_name(ctx: Context):
    out = []
    n = 0
    for d in ctx.tree.declarations:
        if d.kind != "method":
            continue
        n += 1
        name = ctx.sig[d.name].text
        msgs = []
        if not _has_annotation(ctx, d, ("Override", "java.lang.Override")) and not METHOD_NAME.match(name):
            msgs.append(f"Method name '{name}' must match pattern '{METHOD_NAME.pattern}'.")
        if name == _owner_type_name(ctx, d):
            msgs.append(f"Method Name {name} must not equal the enclosing class name.")
        if msgs:
            out.append(ctx.v(A.MethodName, d.name, " ".join(msgs)))
    return out, n


def check_member_name(ctx: Context):
    decls = [d for d in ctx.tree.declarations
             if d.kind == "member-field" and not d.has_modifier(ctx.tree, "static")
             and d.context not in ("interface", "annotation")]
    return _naming(ctx, A.MemberName, decls, MEMBER_NAME, "Member")


def check_parameter_name(ctx: Context):
    decls = [d for d in ctx.tree.declarations if d.kind == "parameter"]
    return _naming(ctx, A.ParameterName, decls, PARAMETER_NAME, "Parameter")


def check_local_variable_name(ctx: Context):
    decls = [d for d in ctx.tree.declarations
             if d.kind == "local-variable" and not d.has_modifier(ctx.tree, "final")]
    return _naming(ctx, A.LocalVariableName, decls, LOCAL_VARIABLE_NAME, "Local variable")


# indentation (approximate) --------------------------------------------------


def check_indentation(ctx: Context):
    """Approximate Google indentation: 2 per block level, 2 for case labels,
    at least 4 extra for continuation lines."""
    sig = ctx.sig
    tree = ctx.tree
    level_at = [0] * len(sig)
    stmt_starts: set[int] = set()
    for s in ctx.all_stmts:
        stmt_starts.add(s.start)
    for d in tree.declarations:
        if d.kind in ("type", "method", "ctor", "member-field", "constant", "enum-constant"):
            stmt_starts.update(range(d.start, d.name + 1))
    for b in tree.blocks:
        for m in b.members:
            stmt_starts.add(m.start)
    for m in tree.top_level:
        stmt_starts.add(m.start)
    labels: set[int] = set()
    for _, sw in tree.switches:
        for arm in sw.arms:
            labels.update(k for _, k in arm.labels)
    # block nesting: +1 per block, switch bodies +2 (labels sit at +1)
    depth = 0
    closes: dict[int, int] = {}
    for b in tree.blocks:
        if b.detail == "array-init":
            continue
        closes[b.close] = 2 if b.tag == "switch-body" else 1
    opens = {b.open: (2 if b.tag == "switch-body" else 1) for b in tree.blocks if b.detail != "array-init"}
    for i in range(len(sig)):
        if i in closes:
            depth -= closes[i]
        level_at[i] = depth
        if i in opens:
            depth += opens[i]
    out = []
    seen_lines = set()
    for i, t in enumerate(sig):
        if t.line in seen_lines:
            continue
        seen_lines.add(t.line)
        line = ctx.text_of_line(t.line)
        if not _blank(line[: t.column - 1]):
            continue
        actual = expanded_length(line[: t.column - 1], ctx.tab_width)
        expected = 2 * level_at[i]
        if i in labels:
            expected -= 2
        if t.text == "}" and i in closes or i in stmt_starts or i in labels \
                or t.text in ("else", "catch", "finally") or tree.roles.get(i) == "do-while":
            ok = actual == expected
        else:
            ok = actual >= expected + 4 or t.text in ("{",) and actual == expected
        if not ok:
            out.append(ctx.v(A.Indentation, i,
                             f"'{t.text}' has incorrect indentation level {actual}, expected level should be {expected}."))
    return out, len(ctx.lines)


CHECKS = {
    A.NoLineWrap: check_no_line_wrap,
    A.AvoidStarImport: check_avoid_star_import,
    A.OneTopLevelClass: check_one_top_level_class,
    A.EmptyLineSeparator: check_empty_line_separator,
    A.RightCurly: check_right_curly,
    A.SeparatorWrap: check_separator_wrap,
    A.WhitespaceAround: check_whitespace_around,
    A.GenericWhitespace: check_generic_whitespace,
    A.OperatorWrap: check_operator_wrap,
    A.LineLength: check_line_length,
    A.LeftCurly: check_left_curly,
    A.EmptyBlock: check_empty_block,
    A.NeedBraces: check_need_braces,
    A.MultipleVariableDeclarations: check_multiple_variable_declarations,
    A.OneStatementPerLine: check_one_statement_per_line,
    A.UpperEll: check_upper_ell,
    A.ModifierOrder: check_modifier_order,
    A.FallThrough: check_fall_through,
    A.MissingSwitchDefault: check_missing_switch_default,
    A.TypeName: check_type_name,
    A.MethodName: check_method_name,
    A.MemberName: check_member_name,
    A.ParameterName: check_parameter_name,
    A.LocalVariableName: check_local_variable_name,
    A.Indentation: check_indentation,
}


def _context_for(source: str, tree: StructureTree, tab_width: int) -> Context:
    try:
        tokens = tokenize(source)
    except LexError:
        tokens = None
    return Context(source, tree, tokens, tab_width)


def run_check(attribute: StyleAttribute, source: str, tree: StructureTree,
              tab_width: int = TAB_WIDTH, _ctx: Context | None = None) -> tuple[list[Violation], int]:
    """Run one check; structure-dependent checks on an unbalanced tree give ([], 0)."""
    ctx = _ctx or _context_for(source, tree, tab_width)
    if tree.unbalanced and attribute not in TEXT_ONLY and attribute not in TOKEN_ONLY:
        return [], 0
    violations, opportunities = CHECKS[attribute](ctx)
    return sorted(violations), opportunities


def run_all(source: str, file: str = "<string>", tab_width: int = TAB_WIDTH) -> CheckReport:
    report = CheckReport(file=file)
    try:
        tokens = tokenize(source)
    except LexError as exc:
        report.unparseable = True
        report.diagnostic = str(exc)
        tree = StructureTree(sig=[], lines=split_lines(source), unbalanced=True)
        ctx = Context(source, tree, None, tab_width)
        for attr in A:
            if attr in TEXT_ONLY:
                vs, n = CHECKS[attr](ctx)
                report.violations.extend(vs)
                report.opportunities[attr] = n
            else:
                report.opportunities[attr] = 0
        report.violations.sort()
        return report
    tree = parse_structure(tokens, source)
    ctx = Context(source, tree, tokens, tab_width)
    if tree.unbalanced:
        report.unparseable = True
        report.diagnostic = "unbalanced brackets"
    report.partial = tree.recovered
    for attr in A:
        vs, n = run_check(attr, source, tree, tab_width, _ctx=ctx)
        report.violations.extend(vs)
        report.opportunities[attr] = n
    report.violations.sort()
    return report


def extract_attributes(report: CheckReport) -> set[StyleAttribute]:
    """Attributes the report flags at least once."""
    return {v.attribute for v in report.violations}
