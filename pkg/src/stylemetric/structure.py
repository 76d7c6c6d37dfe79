"""Lightweight structural view of a Java compilation unit.

This is not a Java grammar. It recognises what the style checks need:
brace blocks and what opens them, declarations with their modifiers,
imports, statements (as a shallow tree, so switch arms can be analysed for
fall-through) and the role of ambiguous punctuation such as ``<``, ``:`` or
unary ``-``.

Positions are indices into ``StructureTree.sig``, the list of significant
tokens (no whitespace, newlines or comments). ``>>`` and ``>>>`` that close
nested type arguments are split into single ``>`` tokens in ``sig``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lexer import MODIFIERS, PRIMITIVES, Token

BLOCK_TAGS = ("class-body", "method-body", "control-body", "switch-body", "other")

_CONTROL = frozenset("if else for while do try catch finally synchronized".split())

# tokens that may appear between a generic '<' and its closing '>'
_GENERIC_INNER = frozenset({".", ",", "?", "&", "[", "]", "@", "extends", "super"})
_GENERIC_FOLLOW = frozenset(
    {"(", ")", "[", "]", ".", "...", "::", ",", ">", "{", ";", "&", "}", ":", "=", "?", "|"}
)

_UNARY_CONTEXT = frozenset(
    """( [ , = += -= *= /= %= &= |= ^= <<= >>= >>>= ? : { ; -> ! ~ && || + - * / % < > <= >=
    == != & | ^ << >> >>> return case throw assert yield""".split()
)


class ParseError(ValueError):
    """Raised internally when the token stream does not fit the expected shape."""


@dataclass
class Block:
    tag: str
    detail: str
    open: int
    close: int
    parent: int | None
    members: list = field(default_factory=list)
    owner: "Declaration | None" = None


@dataclass
class Declaration:
    kind: str
    name: int
    modifiers: tuple[int, ...]
    start: int
    end: int
    block: int | None = None
    type_kind: str | None = None
    group: int = 0
    context: str = ""

    def has_modifier(self, tree: "StructureTree", word: str) -> bool:
        return any(tree.sig[i].text == word for i in self.modifiers)


@dataclass
class Import:
    path: str
    is_star: bool
    is_static: bool
    line: int
    start: int
    end: int


@dataclass
class Member:
    kind: str
    start: int
    end: int
    decl: Declaration | None = None


@dataclass
class Stmt:
    kind: str
    start: int
    end: int
    block: int | None = None
    body: "Stmt | None" = None
    orelse: "Stmt | None" = None
    stmts: list["Stmt"] = field(default_factory=list)
    catches: list["Stmt"] = field(default_factory=list)
    final: "Stmt | None" = None
    arms: list["SwitchArm"] = field(default_factory=list)
    decls: list[Declaration] = field(default_factory=list)


@dataclass
class SwitchArm:
    labels: list[tuple[str, int]]
    stmts: list[Stmt]
    start: int
    end: int


@dataclass
class StructureTree:
    sig: list[Token]
    lines: list[str]
    unbalanced: bool = False
    recovered: bool = False
    blocks: list[Block] = field(default_factory=list)
    declarations: list[Declaration] = field(default_factory=list)
    imports: list[Import] = field(default_factory=list)
    package: tuple[int, int] | None = None
    statements: list[Stmt] = field(default_factory=list)
    switches: list[tuple[int, Stmt]] = field(default_factory=list)
    top_level: list[Member] = field(default_factory=list)
    roles: dict[int, str] = field(default_factory=dict)
    match: dict[int, int] = field(default_factory=dict)
    block_at: dict[int, int] = field(default_factory=dict)
    for_headers: list[tuple[int, int, int]] = field(default_factory=list)
    lambdas: list[tuple[int, int]] = field(default_factory=list)
    type_param_opens: set[int] = field(default_factory=set)
    block_stmt: dict[int, "Stmt"] = field(default_factory=dict)

    @property
    def switch_arms(self) -> list[list[SwitchArm]]:
        return [stmt.arms for _, stmt in self.switches]

    def role(self, i: int) -> str | None:
        return self.roles.get(i)

    def block_for_open(self, i: int) -> Block | None:
        b = self.block_at.get(i)
        return None if b is None else self.blocks[b]


def split_lines(source: str) -> list[str]:
    """Split on \\n, \\r\\n or \\r the way Checkstyle numbers lines."""
    if not source:
        return []
    lines = source.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _split_token(tok: Token, parts: int) -> list[Token]:
    if parts == 1:
        return [tok]
    size = len(tok.text) // parts if parts else 1
    out = []
    for k in range(parts):
        text = tok.text[k * size:(k + 1) * size] if k < parts - 1 else tok.text[k * size:]
        out.append(Token("operator", text, tok.line, tok.column + k * size, tok.offset + k * size))
    return out


def _generic_pass(sig: list[Token]) -> tuple[list[Token], set[int], set[int]]:
    """Find type-argument brackets; split ``>>``/``>>>`` closers.

    Returns the refined token list plus the positions of generic ``<`` and ``>``.
    """
    out: list[Token] = []
    opens: set[int] = set()
    closes: set[int] = set()
    i = 0
    n = len(sig)
    while i < n:
        tok = sig[i]
        if tok.text == "<" and i > 0 and _may_open_generic(sig, i):
            res = _scan_generic(sig, i)
            if res is not None:
                end, splits = res
                for k in range(i, end + 1):
                    t = sig[k]
                    pieces = _split_token(t, splits.get(k, 1))
                    for piece in pieces:
                        if piece.text == "<":
                            opens.add(len(out))
                        elif piece.text == ">":
                            closes.add(len(out))
                        out.append(piece)
                i = end + 1
                continue
        out.append(tok)
        i += 1
    return out, opens, closes


def _may_open_generic(sig: list[Token], i: int) -> bool:
    prev = sig[i - 1]
    if prev.kind == "identifier":
        return True
    return prev.text in (".", "::", "new", ",", "(", "{", "}", ";", ">", ")") or prev.text in MODIFIERS


def _scan_generic(sig: list[Token], i: int):
    depth = 0
    splits: dict[int, int] = {}
    j = i
    n = len(sig)
    while j < n:
        t = sig[j]
        x = t.text
        if x == "<":
            depth += 1
        elif x in (">", ">>", ">>>"):
            k = len(x)
            if k > depth:
                return None
            depth -= k
            if k > 1:
                splits[j] = k
            if depth == 0:
                nxt = sig[j + 1] if j + 1 < n else None
                if nxt is None:
                    return None
                if nxt.kind in ("identifier", "keyword") or nxt.text in _GENERIC_FOLLOW:
                    return j, splits
                return None
        elif x == "(":
            # annotation arguments inside type arguments: skip balanced parens
            if sig[j - 1].kind != "identifier" or j < 2 or sig[j - 2].text != "@":
                return None
            d = 0
            while j < n:
                if sig[j].text == "(":
                    d += 1
                elif sig[j].text == ")":
                    d -= 1
                    if d == 0:
                        break
                j += 1
        elif not (t.kind == "identifier" or x in _GENERIC_INNER or x in PRIMITIVES):
            return None
        j += 1
    return None


def _match_brackets(sig: list[Token]) -> tuple[dict[int, int], bool]:
    pairs = {"(": ")", "[": "]", "{": "}"}
    stack: list[int] = []
    match: dict[int, int] = {}
    ok = True
    for i, t in enumerate(sig):
        if t.text in pairs:
            stack.append(i)
        elif t.text in (")", "]", "}"):
            if not stack or pairs[sig[stack[-1]].text] != t.text:
                ok = False
                # resynchronise: pop to the nearest matching opener if any
                for k in range(len(stack) - 1, -1, -1):
                    if pairs[sig[stack[k]].text] == t.text:
                        del stack[k:]
                        break
                continue
            o = stack.pop()
            match[o] = i
            match[i] = o
    if stack:
        ok = False
    return match, not ok


class _Parser:
    def __init__(self, tree: StructureTree):
        self.tree = tree
        self.t = tree.sig
        self.n = len(self.t)
        self.p = 0
        self.match = tree.match
        self.block_stack: list[int] = []
        self.group = 0

    # -- token helpers -------------------------------------------------
    def text(self, k: int = 0) -> str:
        j = self.p + k
        return self.t[j].text if 0 <= j < self.n else ""

    def kind(self, k: int = 0) -> str:
        j = self.p + k
        return self.t[j].kind if 0 <= j < self.n else ""

    def expect(self, text: str) -> int:
        if self.text() != text:
            raise ParseError(f"expected {text!r} at {self.p}, got {self.text()!r}")
        self.p += 1
        return self.p - 1

    def expect_ident(self) -> int:
        if self.kind() != "identifier":
            raise ParseError(f"expected identifier at {self.p}, got {self.text()!r}")
        self.p += 1
        return self.p - 1

    def close_of(self, i: int) -> int:
        try:
            return self.match[i]
        except KeyError:
            raise ParseError(f"unmatched bracket at {i}") from None

    def skip_generic(self) -> None:
        depth = 0
        while self.p < self.n:
            x = self.text()
            if self.tree.roles.get(self.p) == "generic":
                if x == "<":
                    depth += 1
                elif x == ">":
                    depth -= 1
                    if depth == 0:
                        self.p += 1
                        return
            elif depth == 0:
                return
            self.p += 1

    def at_generic_open(self) -> bool:
        return self.text() == "<" and self.tree.roles.get(self.p) == "generic"

    @property
    def cur_block(self) -> int | None:
        return self.block_stack[-1] if self.block_stack else None

    # -- compilation unit ----------------------------------------------
    def compilation_unit(self) -> None:
        tree = self.tree
        start = self.p
        mods = self.modifiers()
        if self.text() == "package":
            kw = self.p
            while self.p < self.n and self.text() != ";":
                self.p += 1
            tree.package = (kw, self.p)
            tree.top_level.append(Member("package", start if mods else kw, self.p))
            self.p += 1
        else:
            self.p = start
        while self.p < self.n:
            start = self.p
            if self.text() == "import":
                tree.top_level.append(self.import_decl())
                continue
            if self.text() == ";":
                tree.top_level.append(Member("semi", self.p, self.p))
                self.p += 1
                continue
            try:
                mods = self.modifiers()
                if self.is_type_keyword():
                    decl = self.type_decl(start, mods, context="top")
                    tree.top_level.append(Member("type", start, decl.end, decl))
                else:
                    raise ParseError(f"unexpected {self.text()!r} at top level")
            except ParseError:
                tree.recovered = True
                self.p = max(start + 1, self.p)
                self.recover_top()

    def recover_top(self) -> None:
        while self.p < self.n and self.text() not in (";", "}"):
            if self.text() in ("{", "(", "["):
                self.p = self.close_of(self.p)
            self.p += 1
        self.p += 1

    def import_decl(self) -> Member:
        start = self.expect("import")
        is_static = False
        if self.text() == "static":
            is_static = True
            self.p += 1
        parts = []
        star = False
        while self.p < self.n and self.text() != ";":
            x = self.text()
            if x == "*":
                star = True
                self.tree.roles[self.p] = "star-import"
            parts.append(x)
            self.p += 1
        end = self.p
        self.p += 1
        path = "".join(parts)
        if star and path.endswith(".*"):
            path = path[:-2]
        self.tree.imports.append(Import(path, star, is_static, self.t[start].line, start, end))
        return Member("import", start, end)

    # -- modifiers, types ------------------------------------------------
    def modifiers(self, allow_default: bool = True) -> list[int]:
        mods: list[int] = []
        while self.p < self.n:
            x = self.text()
            if x == "@" and self.text(1) != "interface":
                at = self.p
                self.p += 1
                self.expect_ident()
                while self.text() == "." and self.kind(1) == "identifier":
                    self.p += 2
                if self.text() == "(":
                    self.p = self.close_of(self.p) + 1
                self.tree.roles[at] = "annotation"
                mods.append(at)
            elif x in MODIFIERS and self.kind() == "keyword":
                if x == "default" and (not allow_default or self.text(1) == ":"):
                    break
                if x == "synchronized" and self.text(1) == "(":
                    break
                if x == "static" and self.text(1) == "{":
                    break
                mods.append(self.p)
                self.p += 1
            else:
                break
        return mods

    def is_type_keyword(self) -> bool:
        x = self.text()
        return x in ("class", "interface", "enum") or (x == "@" and self.text(1) == "interface")

    def parse_type(self) -> bool:
        """Consume a type if one starts here; return whether anything was consumed."""
        start = self.p
        while self.text() == "@" and self.text(1) != "interface":
            self.p += 1
            if self.kind() != "identifier":
                self.p = start
                return False
            self.p += 1
            if self.text() == "(":
                self.p = self.close_of(self.p) + 1
        x = self.text()
        if x in PRIMITIVES or x == "void" or self.kind() == "identifier":
            self.p += 1
            while True:
                if self.at_generic_open():
                    self.skip_generic()
                    continue
                if self.text() == "." and self.kind(1) == "identifier":
                    self.p += 2
                    continue
                if self.text() == "." and self.text(1) == "@":
                    self.p += 1
                    while self.text() == "@":
                        self.p += 2
                        if self.text() == "(":
                            self.p = self.close_of(self.p) + 1
                    continue
                break
            self.dims()
            return True
        self.p = start
        return False

    def dims(self) -> None:
        while self.text() == "[" and self.text(1) == "]":
            self.tree.roles[self.p] = "array-declarator"
            self.p += 2

    # -- declarations ------------------------------------------------------
    def declare(self, kind: str, name: int, mods: list[int], start: int, end: int, **kw) -> Declaration:
        d = Declaration(kind, name, tuple(mods), start, end, self.cur_block, **kw)
        self.tree.declarations.append(d)
        return d

    def type_decl(self, start: int, mods: list[int], context: str) -> Declaration:
        if self.text() == "@":
            self.p += 2
            type_kind = "annotation"
        else:
            type_kind = self.text()
            self.p += 1
        name = self.expect_ident()
        decl = self.declare("type", name, mods, start, name, type_kind=type_kind, context=context)
        while self.p < self.n and self.text() != "{":
            if self.text() in ("(", "["):
                self.p = self.close_of(self.p)
            elif self.text() in (";", "}"):
                raise ParseError("type declaration without body")
            self.p += 1
        self.class_body(type_kind, decl)
        decl.end = self.p - 1
        return decl

    def class_body(self, detail: str, owner: Declaration | None) -> Block:
        open_ = self.expect("{")
        close = self.close_of(open_)
        block = self.new_block("class-body", detail, open_, close)
        block.owner = owner
        self.block_stack.append(self.tree.block_at[open_])
        try:
            if detail == "enum":
                self.enum_constants(block, close)
            while self.p < close:
                start = self.p
                try:
                    block.members.extend(self.member(detail, close))
                except ParseError:
                    self.tree.recovered = True
                    self.p = max(start + 1, self.p)
                    self.recover_member(close)
        finally:
            self.block_stack.pop()
        self.p = close + 1
        return block

    def recover_member(self, close: int) -> None:
        while self.p < close and self.text() not in (";", "}"):
            if self.text() in ("{", "(", "["):
                self.p = self.close_of(self.p)
                if self.t[self.p].text == "}":
                    self.p += 1
                    return
            self.p += 1
        self.p += 1

    def new_block(self, tag: str, detail: str, open_: int, close: int) -> Block:
        block = Block(tag, detail, open_, close, self.cur_block)
        self.tree.block_at[open_] = len(self.tree.blocks)
        self.tree.blocks.append(block)
        return block

    def enum_constants(self, block: Block, close: int) -> None:
        while self.p < close and self.text() not in (";",):
            start = self.p
            mods = self.modifiers(allow_default=False)
            if self.kind() != "identifier":
                break
            name = self.p
            self.p += 1
            if self.text() == "(":
                self.expression_range(self.p + 1, self.close_of(self.p))
                self.p = self.close_of(self.p) + 1
            if self.text() == "{":
                self.class_body("enum-constant", None)
            d = self.declare("enum-constant", name, mods, start, self.p - 1)
            block.members.append(Member("enum-constant", start, self.p - 1, d))
            if self.text() == ",":
                block.members.append(Member("comma", self.p, self.p))
                self.p += 1
        if self.text() == ";" and self.p < close:
            block.members.append(Member("semi", self.p, self.p))
            self.p += 1

    def member(self, owner_kind: str, close: int) -> list[Member]:
        start = self.p
        x = self.text()
        if x == ";":
            self.p += 1
            return [Member("semi", start, start)]
        if x == "static" and self.text(1) == "{":
            self.p += 1
            self.block("control-body", "static-init")
            return [Member("static-init", start, self.p - 1)]
        if x == "{":
            self.block("control-body", "instance-init")
            return [Member("instance-init", start, self.p - 1)]
        mods = self.modifiers()
        if self.is_type_keyword():
            decl = self.type_decl(start, mods, context="member")
            return [Member("type", start, decl.end, decl)]
        if self.at_generic_open():
            self.tree.type_param_opens.add(self.p)
            self.skip_generic()
        in_iface = owner_kind in ("interface", "annotation")
        if self.kind() == "identifier" and self.text(1) == "(":
            name = self.p
            self.p += 1
            self.parameters()
            self.throws_clause()
            decl = self.declare("ctor", name, mods, start, name, context=owner_kind)
            self.block("method-body", "ctor")
            decl.end = self.p - 1
            return [Member("ctor", start, decl.end, decl)]
        if not self.parse_type():
            raise ParseError(f"member type expected at {self.p}")
        name = self.expect_ident()
        if self.text() == "(":
            self.parameters()
            self.dims()
            self.throws_clause()
            decl = self.declare("method", name, mods, start, name, context=owner_kind)
            if self.text() == "{":
                self.block("method-body", "method")
            else:
                if self.text() == "default":
                    self.p += 1
                    self.expression(stops={";"})
                self.expect(";")
            decl.end = self.p - 1
            return [Member("method", start, decl.end, decl)]
        self.group += 1
        kind = "constant" if in_iface else "member-field"
        members: list[Member] = []
        decl_start = start
        while True:
            self.dims()
            d = self.declare(kind, name, mods, start, name, group=self.group, context=owner_kind)
            if self.text() == "=":
                self.p += 1
                self.expression(stops={",", ";"})
            d.end = self.p
            members.append(Member("field", decl_start, d.end, d))
            if self.text() == ",":
                # the comma is a sibling member of its own in Checkstyle's tree
                members.append(Member("comma", self.p, self.p))
                self.p += 1
                name = self.expect_ident()
                decl_start = name
                continue
            self.expect(";")
            break
        return members

    def parameters(self) -> None:
        open_ = self.expect("(")
        close = self.close_of(open_)
        while self.p < close:
            start = self.p
            mods = self.modifiers(allow_default=False)
            if not self.parse_type():
                raise ParseError("parameter type expected")
            if self.text() == "...":
                self.p += 1
            if self.text() == "this":
                self.p += 1
            else:
                name = self.expect_ident()
                self.dims()
                self.declare("parameter", name, mods, start, self.p - 1)
            if self.text() == ",":
                self.p += 1
        self.p = close + 1

    def throws_clause(self) -> None:
        if self.text() == "throws":
            self.p += 1
            while self.parse_type():
                if self.text() != ",":
                    break
                self.p += 1

    # -- statements --------------------------------------------------------
    def block(self, tag: str, detail: str) -> Stmt:
        open_ = self.expect("{")
        close = self.close_of(open_)
        self.new_block(tag, detail, open_, close)
        stmt = Stmt("block", open_, close, self.cur_block)
        self.tree.block_stmt[open_] = stmt
        self.block_stack.append(self.tree.block_at[open_])
        try:
            while self.p < close:
                stmt.stmts.append(self.statement_safe(close))
        finally:
            self.block_stack.pop()
        self.p = close + 1
        return stmt

    def statement_safe(self, limit: int) -> Stmt:
        start = self.p
        try:
            return self.statement()
        except ParseError:
            self.tree.recovered = True
            self.p = max(start + 1, self.p)
            while self.p < limit and self.text() not in (";",):
                if self.text() in ("{", "(", "[") and self.p in self.match:
                    self.p = self.match[self.p]
                self.p += 1
            end = min(self.p, limit - 1)
            self.p = min(self.p + 1, limit)
            return self.add_stmt(Stmt("unknown", start, end, self.cur_block))

    def add_stmt(self, stmt: Stmt) -> Stmt:
        self.tree.statements.append(stmt)
        return stmt

    def sub_statement(self, detail: str) -> Stmt:
        if self.text() == "{":
            return self.add_stmt(self.block("control-body", detail))
        return self.statement()

    def statement(self) -> Stmt:
        start = self.p
        x = self.text()
        cb = self.cur_block
        if x == "{":
            return self.add_stmt(self.block("other", "block"))
        if x == ";":
            self.tree.roles[self.p] = "empty-statement"
            self.p += 1
            return self.add_stmt(Stmt("empty", start, start, cb))
        if x == "if":
            self.p += 1
            self.paren_expression()
            stmt = Stmt("if", start, start, cb)
            stmt.body = self.sub_statement("if")
            if self.text() == "else":
                else_kw = self.p
                self.p += 1
                inner = self.sub_statement("else")
                stmt.orelse = Stmt("else", else_kw, inner.end, cb, body=inner)
            stmt.end = self.p - 1
            return self.add_stmt(stmt)
        if x == "for":
            return self.add_stmt(self.for_statement())
        if x == "while":
            self.p += 1
            self.paren_expression()
            stmt = Stmt("while", start, start, cb)
            stmt.body = self.sub_statement("while")
            stmt.end = self.p - 1
            return self.add_stmt(stmt)
        if x == "do":
            self.p += 1
            stmt = Stmt("do", start, start, cb)
            stmt.body = self.sub_statement("do")
            if self.text() != "while":
                raise ParseError("do without while")
            self.tree.roles[self.p] = "do-while"
            self.p += 1
            self.paren_expression()
            stmt.end = self.expect(";")
            return self.add_stmt(stmt)
        if x == "switch":
            return self.add_stmt(self.switch_statement())
        if x == "try":
            return self.add_stmt(self.try_statement())
        if x == "synchronized" and self.text(1) == "(":
            self.p += 1
            self.paren_expression()
            stmt = Stmt("sync", start, start, cb)
            stmt.body = self.add_stmt(self.block("control-body", "synchronized"))
            stmt.end = self.p - 1
            return self.add_stmt(stmt)
        if x in ("return", "throw"):
            self.p += 1
            if self.text() != ";":
                self.expression(stops={";"})
            return self.add_stmt(Stmt(x, start, self.expect(";"), cb))
        if x in ("break", "continue"):
            self.p += 1
            if self.kind() == "identifier":
                self.p += 1
            return self.add_stmt(Stmt(x, start, self.expect(";"), cb))
        if x == "assert":
            self.p += 1
            self.expression(stops={":", ";"})
            if self.text() == ":":
                self.tree.roles[self.p] = "assert"
                self.p += 1
                self.expression(stops={";"})
            return self.add_stmt(Stmt("assert", start, self.expect(";"), cb))
        if self.kind() == "identifier" and self.text(1) == ":":
            self.tree.roles[self.p + 1] = "label"
            self.p += 2
            stmt = Stmt("labeled", start, start, cb)
            stmt.body = self.statement()
            stmt.end = self.p - 1
            return self.add_stmt(stmt)
        # local class
        save = self.p
        mods = self.modifiers(allow_default=False)
        if self.is_type_keyword():
            decl = self.type_decl(start, mods, context="local")
            return self.add_stmt(Stmt("local-class", start, decl.end, cb))
        self.p = save
        decls = self.try_local_var(stops={";"})
        if decls is not None:
            stmt = Stmt("local-var", start, self.expect(";"), cb, decls=decls)
            for d in decls:
                if d.end == -1:
                    d.end = stmt.end
            return self.add_stmt(stmt)
        self.expression(stops={";"})
        return self.add_stmt(Stmt("expression", start, self.expect(";"), cb))

    def try_local_var(self, stops: set[str], for_each: bool = False) -> list[Declaration] | None:
        """Parse a local variable declaration if one starts here, else rewind."""
        start = self.p
        mods = self.modifiers(allow_default=False)
        if any(self.t[m].text not in ("final",) and self.tree.roles.get(m) != "annotation" for m in mods):
            self.p = start
            return None
        if not self.parse_type() or self.kind() != "identifier":
            self.p = start
            return None
        follow = self.text(1)
        if follow not in ("=", ";", ",", "[", ":") and follow not in stops:
            self.p = start
            return None
        if follow == ":" and not for_each:
            self.p = start
            return None
        self.group += 1
        decls = []
        while True:
            name = self.expect_ident()
            self.dims()
            d = self.declare("local-variable", name, mods, start, -1, group=self.group)
            decls.append(d)
            if self.text() == "=":
                self.p += 1
                self.expression(stops={",", ";"} | stops)
            if self.text() == ",":
                d.end = self.p
                self.p += 1
                continue
            break
        return decls

    def paren_expression(self) -> None:
        open_ = self.expect("(")
        close = self.close_of(open_)
        self.expression_range(open_ + 1, close)
        self.p = close + 1

    def for_statement(self) -> Stmt:
        start = self.expect("for")
        cb = self.cur_block
        open_ = self.expect("(")
        close = self.close_of(open_)
        semis = []
        depth = 0
        for k in range(open_ + 1, close):
            x = self.t[k].text
            if x in ("(", "[", "{"):
                depth += 1
            elif x in (")", "]", "}"):
                depth -= 1
            elif x == ";" and depth == 0:
                semis.append(k)
        if len(semis) >= 2:
            kind = "for"
            decls = self.try_local_var(stops={";"})
            if decls:
                for d in decls:
                    d.context = "for-init"
                    if d.end == -1:
                        d.end = semis[0]
            else:
                self.expression_range(open_ + 1, semis[0])
            self.tree.roles[semis[0]] = "for-header"
            self.tree.roles[semis[1]] = "for-header"
            self.expression_range(semis[0] + 1, semis[1])
            self.expression_range(semis[1] + 1, close)
            self.tree.for_headers.append((start, semis[1] + 1, close))
        else:
            kind = "foreach"
            decls = self.try_local_var(stops={":"}, for_each=True)
            if not decls or self.text() != ":":
                raise ParseError("unrecognised for header")
            for d in decls:
                d.context = "for-each"
                d.end = self.p
            self.tree.roles[self.p] = "foreach"
            self.expression_range(self.p + 1, close)
        self.p = close + 1
        stmt = Stmt(kind, start, start, cb)
        stmt.body = self.sub_statement("for")
        stmt.end = self.p - 1
        return stmt

    def switch_statement(self) -> Stmt:
        start = self.expect("switch")
        cb = self.cur_block
        self.paren_expression()
        open_ = self.expect("{")
        self.p = open_
        close = self.close_of(open_)
        self.new_block("switch-body", "switch", open_, close)
        stmt = Stmt("switch", start, close, cb)
        self.block_stack.append(self.tree.block_at[open_])
        self.p = open_ + 1
        try:
            while self.p < close:
                arm_start = self.p
                labels: list[tuple[str, int]] = []
                while self.p < close and self.text() in ("case", "default") and not (
                    self.text() == "default" and self.text(1) != ":"
                ):
                    kw = self.p
                    if self.text() == "case":
                        self.p += 1
                        self.expression(stops={":", "->"})
                    else:
                        self.p += 1
                    if self.text() != ":":
                        raise ParseError("case label without colon")
                    self.tree.roles[self.p] = "case"
                    self.p += 1
                    labels.append((self.t[kw].text, kw))
                if not labels:
                    raise ParseError("statement outside case arm")
                body: list[Stmt] = []
                while self.p < close and not (
                    self.text() == "case" or (self.text() == "default" and self.text(1) == ":")
                ):
                    body.append(self.statement_safe(close))
                stmt.arms.append(SwitchArm(labels, body, arm_start, self.p - 1))
        finally:
            self.block_stack.pop()
        self.p = close + 1
        self.tree.switches.append((start, stmt))
        return stmt

    def try_statement(self) -> Stmt:
        start = self.expect("try")
        cb = self.cur_block
        stmt = Stmt("try", start, start, cb)
        if self.text() == "(":
            open_ = self.p
            close = self.close_of(open_)
            self.p += 1
            while self.p < close:
                rstart = self.p
                mods = self.modifiers(allow_default=False)
                if self.parse_type() and self.kind() == "identifier" and self.text(1) == "=":
                    name = self.p
                    self.p += 2
                    self.declare("resource", name, mods, rstart, rstart)
                else:
                    self.p = rstart
                self.expression(stops={";"}, limit=close)
                if self.text() == ";" and self.p < close:
                    self.tree.roles[self.p] = "resource"
                    self.p += 1
            self.p = close + 1
        stmt.body = self.add_stmt(self.block("control-body", "try"))
        while self.text() == "catch":
            cstart = self.p
            self.p += 1
            open_ = self.expect("(")
            close = self.close_of(open_)
            mods = self.modifiers(allow_default=False)
            self.parse_type()
            while self.text() == "|":
                self.p += 1
                self.parse_type()
            if self.kind() == "identifier":
                self.declare("catch-parameter", self.p, mods, open_ + 1, self.p)
            self.p = close + 1
            body = self.add_stmt(self.block("control-body", "catch"))
            stmt.catches.append(Stmt("catch", cstart, body.end, cb, body=body))
        if self.text() == "finally":
            fstart = self.p
            self.p += 1
            body = self.add_stmt(self.block("control-body", "finally"))
            stmt.final = Stmt("finally", fstart, body.end, cb, body=body)
        stmt.end = self.p - 1
        return stmt

    # -- expressions -------------------------------------------------------
    def expression_range(self, start: int, end: int) -> None:
        save = self.p
        self.p = start
        self.expression(stops=set(), limit=end)
        self.p = save

    def expression(self, stops: set[str], limit: int | None = None) -> None:
        """Walk an expression, classifying punctuation and descending into
        lambda bodies, anonymous classes and array initialisers."""
        end = self.n if limit is None else limit
        ternary = 0
        roles = self.tree.roles
        while self.p < end:
            x = self.text()
            kind = self.kind()
            if x in stops and not (x == ":" and ternary):
                return
            if x in (")", "]", "}") or (x == ";" and ";" not in stops):
                if limit is None:
                    return
            i = self.p
            if x == "(":
                close = self.close_of(i)
                if self._is_primitive_cast(i, close):
                    roles[close] = "cast"
                self.expression_range(i + 1, close)
                self.p = close + 1
                continue
            if x == "[":
                close = self.close_of(i)
                if self.t[i + 1].text == "]" if i + 1 < self.n else False:
                    roles[i] = "array-declarator"
                elif roles.get(i) is None:
                    roles[i] = "index"
                self.expression_range(i + 1, close)
                self.p = close + 1
                continue
            if x == "{":
                prev = self.t[i - 1].text if i > 0 else ""
                if prev == "->":
                    self.lambda_body()
                else:
                    self.array_init()
                continue
            if x == "->":
                roles[i] = "lambda"
                self.tree.lambdas.append((i, -1))
                self.p += 1
                if self.text() != "{":
                    lam = len(self.tree.lambdas) - 1
                    self.expression(stops=stops | {",", ")", ";", "]", "}"}, limit=limit)
                    self.tree.lambdas[lam] = (i, self.p - 1)
                continue
            if x == "new":
                self.creator()
                continue
            if roles.get(i) == "generic" and x == "<":
                self.skip_generic()
                continue
            if x == "?":
                ternary += 1
                roles[i] = "ternary"
            elif x == ":" and ternary:
                ternary -= 1
                roles[i] = "ternary"
            elif x in ("+", "-"):
                roles[i] = "unary" if self._unary_context(i) else "binary"
            elif x in ("*", "/", "%", "<", ">", "<=", ">=", "==", "!=", "&", "|", "^", "&&", "||",
                       "<<", ">>", ">>>", "instanceof"):
                roles.setdefault(i, "binary")
            elif x == "::":
                roles[i] = "method-ref"
            elif x in ("++", "--"):
                prev = self.t[i - 1] if i > 0 else None
                postfix = prev is not None and (
                    prev.kind in ("identifier",) or prev.text in (")", "]", "this", "super")
                )
                roles[i] = "postfix" if postfix else "prefix"
            elif kind == "keyword" and x == "switch":
                raise ParseError("switch expression")
            self.p += 1

    def _unary_context(self, i: int) -> bool:
        if i == 0:
            return True
        prev = self.t[i - 1]
        r = self.tree.roles.get(i - 1)
        if prev.text == ")":
            return r == "cast"
        if prev.text in ("++", "--"):
            return r == "prefix"
        if prev.text in (">", "<") and r == "generic":
            return False
        return prev.text in _UNARY_CONTEXT

    def _is_primitive_cast(self, open_: int, close: int) -> bool:
        inner = [t.text for t in self.t[open_ + 1:close]]
        if not inner or inner[0] not in PRIMITIVES:
            return False
        return all(x in ("[", "]") for x in inner[1:])

    def lambda_body(self) -> None:
        lam = len(self.tree.lambdas) - 1
        self.add_stmt(self.block("control-body", "lambda"))
        if lam >= 0:
            self.tree.lambdas[lam] = (self.tree.lambdas[lam][0], self.p - 1)

    def array_init(self) -> None:
        open_ = self.expect("{")
        close = self.close_of(open_)
        self.new_block("other", "array-init", open_, close)
        self.tree.roles[open_] = "array-init"
        self.tree.roles[close] = "array-init"
        self.block_stack.append(self.tree.block_at[open_])
        try:
            while self.p < close:
                if self.text() == "{":
                    self.array_init()
                elif self.text() == ",":
                    self.p += 1
                else:
                    self.expression(stops={",", "}"}, limit=close)
        finally:
            self.block_stack.pop()
        self.p = close + 1

    def creator(self) -> None:
        self.expect("new")
        if self.at_generic_open():
            self.skip_generic()
        start = self.p
        while self.text() == "@":
            self.p += 2
            if self.text() == "(":
                self.p = self.close_of(self.p) + 1
        x = self.text()
        if not (x in PRIMITIVES or self.kind() == "identifier"):
            self.p = max(self.p, start)
            return
        self.p += 1
        while True:
            if self.at_generic_open():
                self.skip_generic()
                continue
            if self.text() == "." and self.kind(1) == "identifier":
                self.p += 2
                continue
            break
        if self.text() == "(":
            close = self.close_of(self.p)
            self.expression_range(self.p + 1, close)
            self.p = close + 1
            if self.text() == "{":
                self.class_body("anon", None)
            return
        had_dims = False
        while self.text() == "[":
            close = self.close_of(self.p)
            self.tree.roles[self.p] = "array-declarator"
            self.expression_range(self.p + 1, close)
            self.p = close + 1
            had_dims = True
        if had_dims and self.text() == "{":
            self.array_init()


def parse_structure(tokens: list[Token], source: str | None = None) -> StructureTree:
    """Build the structural view from ``tokenize`` output.

    Malformed input does not raise: mismatched braces set ``unbalanced`` and
    anything the parser cannot place sets ``recovered``.
    """
    if source is None:
        source = "".join(t.text for t in tokens)
    raw_sig = [t for t in tokens if not t.is_trivia]
    sig, opens, closes = _generic_pass(raw_sig)
    tree = StructureTree(sig=sig, lines=split_lines(source))
    for i in opens | closes:
        tree.roles[i] = "generic"
    for i in opens:
        # wildcard '?' and bound '&' directly inside type arguments
        depth = 0
        for k in range(i, len(sig)):
            x = sig[k].text
            if k in opens:
                depth += 1
            elif k in closes:
                depth -= 1
                if depth == 0:
                    break
            elif x == "?":
                tree.roles[k] = "wildcard"
            elif x == "&":
                tree.roles[k] = "type-bound"
    match, unbalanced = _match_brackets(sig)
    tree.match = match
    tree.unbalanced = unbalanced
    if unbalanced:
        return tree
    parser = _Parser(tree)
    try:
        parser.compilation_unit()
    except (ParseError, IndexError, KeyError):
        tree.recovered = True
    return tree
