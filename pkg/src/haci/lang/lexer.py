"""Tokenizer for the editor's JavaScript subset.

Lossless: concatenating token texts plus the skipped whitespace reproduces
the source exactly. Unknown glyphs become symbol tokens so line read-outs
stay total; the parser is what rejects them.
"""

from __future__ import annotations

from dataclasses import dataclass

from haci.diagnostics import Diagnostic
from haci.document import Position

KEYWORDS = frozenset(
    {
        "function",
        "let",
        "const",
        "var",
        "if",
        "else",
        "for",
        "while",
        "return",
        "true",
        "false",
        "null",
    }
)

# Longest-first so maximal munch falls out of ordered matching.
MULTI_CHAR_SYMBOLS = (
    "===",
    "!==",
    "==",
    "!=",
    "<=",
    ">=",
    "=>",
    "++",
    "--",
    "<<",
    ">>",
    "&&",
    "||",
    "+=",
    "-=",
    "*=",
    "/=",
    "%=",
)


@dataclass(frozen=True)
class Span:
    start: Position
    end: Position  # exclusive

    def contains(self, pos: Position) -> bool:
        return self.start <= pos <= self.end


@dataclass(frozen=True)
class Token:
    kind: str  # identifier|keyword|number|string|symbol|comment
    text: str
    span: Span


class _Scanner:
    def __init__(self, source: str):
        self.source = source
        self.pos = 0
        self.line = 1
        self.col = 0

    def at_end(self) -> bool:
        return self.pos >= len(self.source)

    def peek(self, offset: int = 0) -> str:
        i = self.pos + offset
        return self.source[i] if i < len(self.source) else ""

    def advance(self) -> str:
        ch = self.source[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 0
        else:
            self.col += 1
        return ch

    def position(self) -> Position:
        return Position(self.line, self.col)


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch in ("_", "$")


def _is_ident_part(ch: str) -> bool:
    return ch.isalnum() or ch in ("_", "$")


def scan(source: str) -> tuple[list[Token], Diagnostic | None]:
    """Tokenize as far as possible; on a lexical error, return the tokens
    produced so far plus the diagnostic."""
    sc = _Scanner(source)
    tokens: list[Token] = []

    def emit(kind: str, start: Position, start_pos: int) -> None:
        tokens.append(Token(kind, sc.source[start_pos : sc.pos], Span(start, sc.position())))

    while not sc.at_end():
        ch = sc.peek()
        if ch in " \t\r\n":
            sc.advance()
            continue
        start = sc.position()
        start_pos = sc.pos

        if ch == "/" and sc.peek(1) == "/":
            while not sc.at_end() and sc.peek() != "\n":
                sc.advance()
            emit("comment", start, start_pos)
            continue
        if ch == "/" and sc.peek(1) == "*":
            sc.advance()
            sc.advance()
            while not sc.at_end() and not (sc.peek() == "*" and sc.peek(1) == "/"):
                sc.advance()
            if sc.at_end():
                return tokens, Diagnostic("syntax", "unterminated block comment", start.line, start.col)
            sc.advance()
            sc.advance()
            emit("comment", start, start_pos)
            continue
        if ch in "\"'":
            quote = sc.advance()
            while not sc.at_end() and sc.peek() != quote and sc.peek() != "\n":
                if sc.peek() == "\\":
                    sc.advance()
                    if sc.at_end():
                        break
                sc.advance()
            if sc.at_end() or sc.peek() == "\n":
                return tokens, Diagnostic("syntax", "unterminated string", start.line, start.col)
            sc.advance()
            emit("string", start, start_pos)
            continue
        if ch.isdigit():
            while sc.peek().isdigit():
                sc.advance()
            if sc.peek() == "." and sc.peek(1).isdigit():
                sc.advance()
                while sc.peek().isdigit():
                    sc.advance()
            emit("number", start, start_pos)
            continue
        if _is_ident_start(ch):
            while _is_ident_part(sc.peek()):
                sc.advance()
            word = sc.source[start_pos : sc.pos]
            tokens.append(Token("keyword" if word in KEYWORDS else "identifier", word, Span(start, sc.position())))
            continue

        for sym in MULTI_CHAR_SYMBOLS:
            if sc.source.startswith(sym, sc.pos):
                for _ in sym:
                    sc.advance()
                emit("symbol", start, start_pos)
                break
        else:
            sc.advance()
            emit("symbol", start, start_pos)

    return tokens, None


def tokenize(source: str) -> list[Token] | Diagnostic:
    tokens, diag = scan(source)
    return diag if diag is not None else tokens


def decode_string(raw: str) -> str:
    """Decode a string token's raw text (quotes and escapes) to its value."""
    body = raw[1:-1]
    out: list[str] = []
    i = 0
    escapes = {"n": "\n", "t": "\t", "r": "\r", "0": "\0", "\\": "\\", '"': '"', "'": "'", "`": "`"}
    while i < len(body):
        ch = body[i]
        if ch == "\\" and i + 1 < len(body):
            out.append(escapes.get(body[i + 1], body[i + 1]))
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)
