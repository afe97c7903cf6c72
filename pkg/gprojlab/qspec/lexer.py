from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List

from ..errors import SpecSyntaxError

TOKEN_SPEC = [
    ("COMMENT", r"#[^\n]*"),
    ("NEWLINE", r"\n"),
    ("SKIP", r"[ \t\r\ufeff]+"),
    ("ARROW", r"->"),
    ("NUMBER", r"-?\d+(?:/\d+)?(?![A-Za-z0-9_/])"),
    ("NAME", r"[A-Za-z0-9_]+"),
    ("PUNCT", r"[;:,.=\[\]{}]"),
]
_MASTER = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _MASTER.match(text, pos)
        if match is None:
            raise SpecSyntaxError(line, pos - line_start + 1, f"unexpected character {text[pos]!r}")
        kind = match.lastgroup or ""
        if kind == "NEWLINE":
            line += 1
            line_start = match.end()
        elif kind not in ("SKIP", "COMMENT"):
            value = match.group()
            if kind == "PUNCT":
                kind = value
            tokens.append(Token(kind, value, line, pos - line_start + 1))
        pos = match.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens
