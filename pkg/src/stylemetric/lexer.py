"""Lossless Java tokenizer.

Every character of the input belongs to exactly one token, so joining the
token texts gives the source back unchanged. Whitespace, newlines and
comments are ordinary tokens because the formatting checks look at them.
"""

from __future__ import annotations

from dataclasses import dataclass

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized this
    throw throws transient try void volatile while true false null""".split()
)

PRIMITIVES = frozenset("boolean byte char short int long float double".split())

MODIFIERS = frozenset(
    """public protected private abstract default static final transient volatile
    synchronized native strictfp""".split()
)

# longest first so the scanner can take the first prefix match
OPERATORS = sorted(
    """>>>= <<= >>= >>> -> == >= <= != && || ++ -- << >> += -= *= /= &= |= ^= %=
    = > < ! ~ ? : + - * / & | ^ %""".split(),
    key=len,
    reverse=True,
)
SEPARATORS = frozenset("( ) { } [ ] ; , . @".split()) | {"...", "::"}

KINDS = (
    "keyword",
    "identifier",
    "literal-int",
    "literal-long",
    "literal-float",
    "literal-string",
    "literal-char",
    "operator",
    "separator",
    "comment",
    "whitespace",
    "newline",
)

TRIVIA = frozenset({"comment", "whitespace", "newline"})


class LexError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    line: int
    column: int
    offset: int

    @property
    def end_line(self) -> int:
        """Line holding the last character of the token."""
        body = self.text.rstrip("\r\n") if self.kind == "newline" else self.text
        return self.line + body.count("\n") + body.count("\r") - body.count("\r\n")

    @property
    def is_trivia(self) -> bool:
        return self.kind in TRIVIA

    def __repr__(self) -> str:
        return f"Token({self.kind}, {self.text!r}, {self.line}:{self.column})"


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch in "_$"


def _is_ident_part(ch: str) -> bool:
    return ch.isalnum() or ch in "_$"


def _scan_number(src: str, i: int) -> tuple[int, str]:
    """Return (end, kind) for a numeric literal starting at ``i``."""
    n = len(src)
    j = i
    is_float = False
    if src.startswith(("0x", "0X"), i):
        j = i + 2
        while j < n and (src[j] in "0123456789abcdefABCDEF_"):
            j += 1
        if j < n and src[j] == ".":
            is_float = True
            j += 1
            while j < n and src[j] in "0123456789abcdefABCDEF_":
                j += 1
        if j < n and src[j] in "pP":
            is_float = True
            j += 1
            if j < n and src[j] in "+-":
                j += 1
            while j < n and (src[j].isdigit() or src[j] == "_"):
                j += 1
    elif src.startswith(("0b", "0B"), i):
        j = i + 2
        while j < n and src[j] in "01_":
            j += 1
    else:
        while j < n and (src[j].isdigit() or src[j] == "_"):
            j += 1
        if j < n and src[j] == "." and not src.startswith("...", j):
            is_float = True
            j += 1
            while j < n and (src[j].isdigit() or src[j] == "_"):
                j += 1
        if j < n and src[j] in "eE":
            k = j + 1
            if k < n and src[k] in "+-":
                k += 1
            if k < n and src[k].isdigit():
                is_float = True
                j = k
                while j < n and (src[j].isdigit() or src[j] == "_"):
                    j += 1
    if j < n and src[j] in "lL" and not is_float:
        return j + 1, "literal-long"
    if j < n and src[j] in "fFdD":
        return j + 1, "literal-float"
    return j, "literal-float" if is_float else "literal-int"


def tokenize(source: str) -> list[Token]:
    """Split ``source`` into tokens; raises :class:`LexError` on unterminated literals."""
    tokens: list[Token] = []
    n = len(source)
    i = 0
    line = 1
    col = 1

    def emit(kind: str, end: int) -> None:
        nonlocal i, line, col
        text = source[i:end]
        tokens.append(Token(kind, text, line, col, i))
        nl = text.count("\n") + text.count("\r") - text.count("\r\n")
        if nl:
            line += nl
            last = max(text.rfind("\n"), text.rfind("\r"))
            col = len(text) - last
        else:
            col += len(text)
        i = end

    while i < n:
        ch = source[i]
        if ch == "\r" or ch == "\n":
            emit("newline", i + 2 if source.startswith("\r\n", i) else i + 1)
        elif ch in " \t\f":
            j = i + 1
            while j < n and source[j] in " \t\f":
                j += 1
            emit("whitespace", j)
        elif source.startswith("//", i):
            j = i
            while j < n and source[j] not in "\r\n":
                j += 1
            emit("comment", j)
        elif source.startswith("/*", i):
            j = source.find("*/", i + 2)
            if j < 0:
                raise LexError("unterminated comment", line, col)
            emit("comment", j + 2)
        elif ch == '"' or ch == "'":
            j = i + 1
            while True:
                if j >= n or source[j] in "\r\n":
                    what = "string" if ch == '"' else "char"
                    raise LexError(f"unterminated {what}", line, col)
                if source[j] == "\\" and j + 1 < n and source[j + 1] not in "\r\n":
                    j += 2
                    continue
                if source[j] == ch:
                    break
                j += 1
            emit("literal-string" if ch == '"' else "literal-char", j + 1)
        elif ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            end, kind = _scan_number(source, i)
            emit(kind, end)
        elif _is_ident_start(ch):
            j = i + 1
            while j < n and _is_ident_part(source[j]):
                j += 1
            word = source[i:j]
            emit("keyword" if word in KEYWORDS else "identifier", j)
        else:
            if source.startswith("...", i):
                emit("separator", i + 3)
                continue
            if source.startswith("::", i):
                emit("separator", i + 2)
                continue
            if ch in "(){}[];,.@":
                emit("separator", i + 1)
                continue
            for op in OPERATORS:
                if source.startswith(op, i):
                    emit("operator", i + len(op))
                    break
            else:
                # stray character (e.g. '#', '\\', non-ASCII symbol): keep it lossless
                emit("operator", i + 1)
    return tokens
