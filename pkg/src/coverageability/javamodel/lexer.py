"""Lossless Java tokenizer.

Every character of the input ends up in exactly one token, so joining the
lexemes reproduces the source text. Comments and whitespace are kept as
tokens but flagged as non-code.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

IDENTIFIER = "identifier"
KEYWORD = "keyword"
OPERATOR = "operator"
ASSIGNMENT = "assignment-operator"
SEMICOLON = "semicolon"
DOT = "dot"
LITERAL = "literal"
PUNCTUATION = "punctuation"
COMMENT = "comment"
WHITESPACE = "whitespace"

NON_CODE_KINDS = frozenset({COMMENT, WHITESPACE})

# Java SE reserved keywords. `true`, `false` and `null` are literals;
# contextual words (var, record, yield, sealed, ...) lex as identifiers.
KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while
    """.split()
)

ASSIGNMENT_OPERATORS = frozenset(
    ["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="]
)

# Longest first so that the alternation below is greedy.
_OPERATORS = sorted(
    [
        ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||",
        "==", "!=", "<=", ">=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
        "<<", ">>", "=", "+", "-", "*", "/", "%", "&", "|", "^", "!", "~", "?",
        ":", "<", ">",
    ],
    key=len,
    reverse=True,
)
_PUNCTUATION = frozenset(["(", ")", "{", "}", "[", "]", ",", "@", "..."])

_WS_RE = re.compile(r"[ \t\f\r\n]+")
_IDENT_RE = re.compile(r"[A-Za-z_$\u0080-￿][A-Za-z0-9_$\u0080-￿]*")
_NUMBER_RE = re.compile(
    r"""
    0[xX][0-9a-fA-F_]*(?:\.[0-9a-fA-F_]*)?(?:[pP][+-]?[0-9_]+)?[lLfFdD]?
    | 0[bB][01_]+[lL]?
    | (?:[0-9][0-9_]*\.?[0-9_]*|\.[0-9][0-9_]*)(?:[eE][+-]?[0-9_]+)?[lLfFdD]?
    """,
    re.VERBOSE,
)
_OPERATOR_RE = re.compile("|".join(re.escape(op) for op in _OPERATORS))


class LexError(ValueError):
    """Raised for unterminated strings, characters or comments."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    line: int

    @property
    def is_code(self) -> bool:
        return self.kind not in NON_CODE_KINDS


def _scan_quoted(text: str, start: int, quote: str, line: int) -> int:
    """Return the index just past the closing quote."""
    i = start + 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\\":
            i += 2
            continue
        if ch == quote:
            return i + 1
        if ch == "\n":
            break
        i += 1
    what = "string" if quote == '"' else "character"
    raise LexError(f"unterminated {what} literal", line)


def tokenize(text: str) -> list[Token]:
    """Split Java source into a lossless list of tokens."""
    tokens: list[Token] = []
    i = 0
    n = len(text)
    line = 1
    while i < n:
        ch = text[i]
        start = i
        if ch in " \t\f\r\n":
            m = _WS_RE.match(text, i)
            i = m.end()
            kind = WHITESPACE
        elif text.startswith("//", i):
            j = text.find("\n", i)
            i = n if j < 0 else j
            kind = COMMENT
        elif text.startswith("/*", i):
            j = text.find("*/", i + 2)
            if j < 0:
                raise LexError("unterminated comment", line)
            i = j + 2
            kind = COMMENT
        elif text.startswith('"""', i):
            j = i + 3
            while True:
                j = text.find('"""', j)
                if j < 0:
                    raise LexError("unterminated text block", line)
                # an escaped quote cannot close the block
                backslashes = 0
                k = j - 1
                while k >= i + 3 and text[k] == "\\":
                    backslashes += 1
                    k -= 1
                if backslashes % 2 == 0:
                    break
                j += 1
            i = j + 3
            kind = LITERAL
        elif ch == '"' or ch == "'":
            i = _scan_quoted(text, i, ch, line)
            kind = LITERAL
        elif ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            i = _NUMBER_RE.match(text, i).end()
            kind = LITERAL
        elif _IDENT_RE.match(text, i):
            i = _IDENT_RE.match(text, i).end()
            word = text[start:i]
            if word in KEYWORDS:
                kind = KEYWORD
            elif word in ("true", "false", "null"):
                kind = LITERAL
            else:
                kind = IDENTIFIER
        elif ch == ";":
            i += 1
            kind = SEMICOLON
        elif text.startswith("...", i):
            i += 3
            kind = PUNCTUATION
        elif ch == ".":
            i += 1
            kind = DOT
        elif ch in "(){}[],@":
            i += 1
            kind = PUNCTUATION
        else:
            m = _OPERATOR_RE.match(text, i)
            if m is None:
                # stray characters (e.g. a lone backslash) are kept as
                # punctuation so the stream stays lossless
                i += 1
                kind = PUNCTUATION
            else:
                i = m.end()
                kind = ASSIGNMENT if m.group() in ASSIGNMENT_OPERATORS else OPERATOR
        lexeme = text[start:i]
        tokens.append(Token(kind, lexeme, line))
        line += lexeme.count("\n")
    return tokens


def code_tokens(tokens: list[Token]) -> list[Token]:
    return [t for t in tokens if t.is_code]
