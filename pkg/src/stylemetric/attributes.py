"""The 25 style attributes and their explanation catalog."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class StyleAttribute(str, enum.Enum):
    NoLineWrap = "NoLineWrap"
    AvoidStarImport = "AvoidStarImport"
    OneTopLevelClass = "OneTopLevelClass"
    EmptyLineSeparator = "EmptyLineSeparator"
    RightCurly = "RightCurly"
    SeparatorWrap = "SeparatorWrap"
    WhitespaceAround = "WhitespaceAround"
    GenericWhitespace = "GenericWhitespace"
    OperatorWrap = "OperatorWrap"
    LineLength = "LineLength"
    LeftCurly = "LeftCurly"
    EmptyBlock = "EmptyBlock"
    NeedBraces = "NeedBraces"
    MultipleVariableDeclarations = "MultipleVariableDeclarations"
    OneStatementPerLine = "OneStatementPerLine"
    UpperEll = "UpperEll"
    ModifierOrder = "ModifierOrder"
    FallThrough = "FallThrough"
    MissingSwitchDefault = "MissingSwitchDefault"
    TypeName = "TypeName"
    MethodName = "MethodName"
    MemberName = "MemberName"
    ParameterName = "ParameterName"
    LocalVariableName = "LocalVariableName"
    Indentation = "Indentation"

    def __str__(self) -> str:
        return self.value

    @property
    def css_index(self) -> int | None:
        return _CSS_INDEX.get(self)

    @property
    def aspect(self) -> str:
        return _ASPECT[self]

    @property
    def kind(self) -> str:
        """Syntax or semantic, as classified in the criteria table."""
        return "semantic" if self in SEMANTIC else "syntax"

    @classmethod
    def parse(cls, name: str) -> "StyleAttribute":
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown style attribute {name!r}") from None


A = StyleAttribute

# table order; position + 1 is the css index
CSS_ORDER: tuple[StyleAttribute, ...] = tuple(a for a in A if a is not A.Indentation)
_CSS_INDEX = {a: i + 1 for i, a in enumerate(CSS_ORDER)}

_ASPECT = {
    **{a: "structure" for a in (A.NoLineWrap, A.AvoidStarImport, A.OneTopLevelClass, A.EmptyLineSeparator)},
    **{
        a: "formatting"
        for a in (
            A.RightCurly, A.SeparatorWrap, A.WhitespaceAround, A.GenericWhitespace, A.OperatorWrap,
            A.LineLength, A.LeftCurly, A.EmptyBlock, A.NeedBraces, A.MultipleVariableDeclarations,
            A.OneStatementPerLine, A.UpperEll, A.ModifierOrder, A.FallThrough, A.MissingSwitchDefault,
        )
    },
    **{a: "naming" for a in (A.TypeName, A.MethodName, A.MemberName, A.ParameterName, A.LocalVariableName)},
    A.Indentation: "base",
}

SEMANTIC = frozenset({A.EmptyLineSeparator, A.LineLength, A.FallThrough, A.MissingSwitchDefault})
SYNTAX_CRITERIA: tuple[StyleAttribute, ...] = tuple(a for a in CSS_ORDER if a not in SEMANTIC)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    explanation: str


DEFAULT_EXPLANATIONS: dict[StyleAttribute, str] = {
    A.NoLineWrap: "import and package statements are not line-wrapped",
    A.AvoidStarImport: "import statements do not use the * notation",
    A.OneTopLevelClass: "each source file declares only one top-level class",
    A.EmptyLineSeparator: "package, imports, fields, constructors and methods are separated by an empty line",
    A.RightCurly: "'}' is placed on the same line as the next part of a multi-block statement, "
                  "otherwise alone on its line",
    A.SeparatorWrap: "lines are broken before '.' and '::' but after ','",
    A.WhitespaceAround: "operators, braces and keywords such as if( are surrounded by whitespace",
    A.GenericWhitespace: "generic angle brackets follow the conventional spacing, e.g. List<String> not List <String>",
    A.OperatorWrap: "a line is broken before a binary operator rather than after it",
    A.LineLength: "no line exceeds 100 characters",
    A.LeftCurly: "'{' is placed at the end of the line that begins the block",
    A.EmptyBlock: "control statements do not have empty blocks",
    A.NeedBraces: "single control statements are still wrapped in braces",
    A.MultipleVariableDeclarations: "every variable declaration is in its own statement and on its own line",
    A.OneStatementPerLine: "there is only one statement per line",
    A.UpperEll: "long constants are defined with an upper ell, 'L' and not 'l'",
    A.ModifierOrder: "modifiers follow the order public, protected, private, abstract, default, static, "
                     "final, transient, volatile, synchronized, native, strictfp",
    A.FallThrough: "a switch case without break, return, throw or continue carries a fall-through comment",
    A.MissingSwitchDefault: "every switch statement has a default clause",
    A.TypeName: "type names are written in UpperCamelCase",
    A.MethodName: "method names are written in lowerCamelCase",
    A.MemberName: "non-static field names are written in lowerCamelCase",
    A.ParameterName: "parameter names are written in lowerCamelCase",
    A.LocalVariableName: "local variable names are written in lowerCamelCase",
    A.Indentation: "Control indentation between comments and surrounding code.",
}


class AttributeCatalog:
    """Display names and explanations used to render dataset prompts."""

    def __init__(self, entries: dict[StyleAttribute, CatalogEntry] | None = None):
        if entries is None:
            entries = {a: CatalogEntry(a.value, DEFAULT_EXPLANATIONS[a]) for a in A}
        for a, e in entries.items():
            if not e.explanation.strip():
                raise ValueError(f"empty explanation for {a}")
        self._entries = dict(entries)

    def __contains__(self, attr: StyleAttribute) -> bool:
        return attr in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def entry(self, attr: StyleAttribute) -> CatalogEntry:
        try:
            return self._entries[attr]
        except KeyError:
            raise KeyError(f"attribute {attr} missing from catalog") from None

    def name(self, attr: StyleAttribute) -> str:
        return self.entry(attr).name

    def explanation(self, attr: StyleAttribute) -> str:
        return self.entry(attr).explanation

    def attribute_for_name(self, name: str) -> StyleAttribute:
        for a, e in self._entries.items():
            if e.name == name:
                return a
        raise KeyError(name)
