"""File-level token metrics."""

from __future__ import annotations

from typing import Iterable

from ..javamodel.lexer import ASSIGNMENT, DOT, IDENTIFIER, KEYWORD, OPERATOR, SEMICOLON, Token
from .schema import LEXICAL

PRINT_CALLS = frozenset({"print", "println", "printf"})
CONDITIONAL_JUMPS = frozenset({"if", "switch", "case"})
UNCONDITIONAL_JUMPS = frozenset({"break", "continue", "goto"})
EXCEPTION_WORDS = frozenset({"try", "catch", "finally", "throw", "throws"})


def compute_lexical_metrics(tokens: Iterable[Token]) -> dict[str, int]:
    code = [t for t in tokens if t.is_code]
    idents = [t.lexeme for t in code if t.kind == IDENTIFIER]
    keywords = [t.lexeme for t in code if t.kind == KEYWORD]
    operators = [t.lexeme for t in code if t.kind == OPERATOR]

    def kw(words) -> int:
        return sum(1 for k in keywords if k in words)

    values = {
        "NOTK": len(code),
        "NOTKU": len({t.lexeme for t in code}),
        "NOID": len(idents),
        "NOIDU": len(set(idents)),
        "NOKW": len(keywords),
        "NOKWU": len(set(keywords)),
        "NOASS": sum(1 for t in code if t.kind == ASSIGNMENT),
        "NOOP": len(operators),
        "NOOPU": len(set(operators)),
        "NOSC": sum(1 for t in code if t.kind == SEMICOLON),
        "NODOT": sum(1 for t in code if t.kind == DOT),
        "NOREPR": kw({"return"}) + sum(1 for i in idents if i in PRINT_CALLS),
        "NOCJST": kw(CONDITIONAL_JUMPS),
        "NOCUJST": kw(UNCONDITIONAL_JUMPS),
        "NOEXST": kw(EXCEPTION_WORDS),
        "NONEW": kw({"new"}),
        "NOSUPER": kw({"super"}),
    }
    return {name: values[name] for name in LEXICAL}
