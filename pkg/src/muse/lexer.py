"""Tokenizer for the 0.4.x-0.8.x Solidity surface the mutation operators need.

Comments and whitespace are skipped but every token keeps its exact byte
span, so rewrites are pure textual patches and round-trip losslessly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .source import LineIndex, Span

# Multi-char operators first so maximal munch works by ordered scan.
_PUNCT = [
    ">>=", "<<=",
    "**", "++", "--", "+=", "-=", "*=", "/=", "%=", "|=", "^=", "&=",
    "==", "!=", "<=", ">=", "&&", "||", "<<", ">>", "=>",
    "+", "-", "*", "/", "%", "&", "|", "^", "!", "~", "=", "<", ">",
    "(", ")", "{", "}", "[", "]", ";", ",", ".", "?", ":",
]

_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_$")
_IDENT_CONT = _IDENT_START | set("0123456789")
_DIGITS = set("0123456789")
_HEX_DIGITS = set("0123456789abcdefABCDEF_")


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "number" | "string" | "punct" | "eof"
    text: str
    span: Span


class Lexer:
    def __init__(self, content: str):
        self.content = content
        self.data = content.encode("utf-8")
        self.index = LineIndex(self.data)
        # Non-ASCII text needs a char->byte offset table; ASCII is 1:1.
        if content.isascii():
            self._byte_of = None
        else:
            table = [0]
            for ch in content:
                table.append(table[-1] + len(ch.encode("utf-8")))
            self._byte_of = table

    def _b(self, char_offset: int) -> int:
        return char_offset if self._byte_of is None else self._byte_of[char_offset]

    def _error(self, msg: str, char_offset: int) -> ParseError:
        line, col = self.index.linecol(self._b(char_offset))
        return ParseError(msg, line, col)

    def tokens(self) -> list[Token]:
        s = self.content
        n = len(s)
        i = 0
        out: list[Token] = []

        def emit(kind: str, start: int, end: int):
            out.append(Token(kind, s[start:end], self.index.span(self._b(start), self._b(end))))

        while i < n:
            c = s[i]
            if c in " \t\r\n\f\v":
                i += 1
                continue
            if c == "/" and i + 1 < n and s[i + 1] == "/":
                j = s.find("\n", i)
                i = n if j == -1 else j + 1
                continue
            if c == "/" and i + 1 < n and s[i + 1] == "*":
                j = s.find("*/", i + 2)
                if j == -1:
                    raise self._error("unterminated block comment", i)
                i = j + 2
                continue
            if c in _IDENT_START:
                j = i + 1
                while j < n and s[j] in _IDENT_CONT:
                    j += 1
                # hex"..." / unicode"..." string prefixes
                if s[i:j] in ("hex", "unicode") and j < n and s[j] in "\"'":
                    j = self._scan_string(j)
                    emit("string", i, j)
                else:
                    emit("ident", i, j)
                i = j
                continue
            if c in _DIGITS:
                j = self._scan_number(i)
                emit("number", i, j)
                i = j
                continue
            if c in "\"'":
                j = self._scan_string(i)
                emit("string", i, j)
                i = j
                continue
            for p in _PUNCT:
                if s.startswith(p, i):
                    emit("punct", i, i + len(p))
                    i += len(p)
                    break
            else:
                raise self._error(f"unexpected character {c!r}", i)

        eof_b = self._b(n)
        out.append(Token("eof", "", self.index.span(eof_b, eof_b)))
        return out

    def _scan_number(self, i: int) -> int:
        s = self.content
        n = len(s)
        if s.startswith(("0x", "0X"), i):
            j = i + 2
            while j < n and s[j] in _HEX_DIGITS:
                j += 1
            if j == i + 2:
                raise self._error("malformed hex literal", i)
            return j
        j = i
        while j < n and (s[j] in _DIGITS or s[j] == "_"):
            j += 1
        if j < n and s[j] == "." and j + 1 < n and s[j + 1] in _DIGITS:
            j += 1
            while j < n and (s[j] in _DIGITS or s[j] == "_"):
                j += 1
        if j < n and s[j] in "eE":
            k = j + 1
            if k < n and s[k] in "+-":
                k += 1
            if k < n and s[k] in _DIGITS:
                j = k
                while j < n and s[j] in _DIGITS:
                    j += 1
        return j

    def _scan_string(self, i: int) -> int:
        s = self.content
        n = len(s)
        quote = s[i]
        j = i + 1
        while j < n:
            if s[j] == "\\":
                j += 2
                continue
            if s[j] == quote:
                return j + 1
            if s[j] == "\n":
                break
            j += 1
        raise self._error("unterminated string literal", i)


def tokenize(content: str) -> list[Token]:
    return Lexer(content).tokens()
