"""Speech rendering: symbol phrases, line and window read-outs, function
context announcements, and typing echo.

Phrases are lower case on output; identifier names keep their own casing
so the synthesizer can pronounce camelCase sensibly.
"""

from __future__ import annotations

from dataclasses import dataclass
import unicodedata

from haci.document import DocumentBuffer, OutOfBoundsError
from haci.lang.facts import FunctionContext
from haci.lang.lexer import Token, scan

# Symbol-to-phrase table, matched longest-first. 27 entries.
SPEECH_MAP: tuple[tuple[str, str], ...] = (
    ("===", "triple equals"),
    ("!==", "strict not equals"),
    ("==", "double equals"),
    ("!=", "not equals"),
    ("&&", "and"),
    ("||", "or"),
    ("/*", "start block comment"),
    ("*/", "end block comment"),
    ("//", "double slash comment"),
    ("=>", "arrow function"),
    ("++", "increment"),
    ("--", "decrement"),
    ("<<", "left shift"),
    (">>", "right shift"),
    ("{", "open brace"),
    ("}", "close brace"),
    ("(", "open parenthesis"),
    (")", "close parenthesis"),
    ("[", "open bracket"),
    ("]", "close bracket"),
    ("=", "equals"),
    ("<", "less than"),
    (">", "greater than"),
    ("!", "exclamation mark"),
    ("|", "pipe"),
    ("~", "tilde"),
    ("`", "backtick"),
)

_PHRASES = dict(SPEECH_MAP)

LINE_SEPARATOR = "line break"
BLANK_LINE = "blank line"
TOP_OF_FILE = "top of file"


@dataclass
class SpeechSettings:
    typing_echo: bool = True
    granularity: str = "words"  # characters|words

    def toggle_echo(self) -> bool:
        self.typing_echo = not self.typing_echo
        return self.typing_echo

    def toggle_granularity(self) -> str:
        self.granularity = "characters" if self.granularity == "words" else "words"
        return self.granularity


def verbalize_symbol(sym: str) -> str | None:
    return _PHRASES.get(sym)


def _speak_char(ch: str) -> str:
    phrase = _PHRASES.get(ch)
    if phrase is not None:
        return phrase
    if ch == " ":
        return "space"
    if ch == "\t":
        return "tab"
    if ch == "\n":
        return "new line"
    if ch.isalnum() or ch.isascii():
        return ch
    return unicodedata.name(ch, ch).lower()


def _speak_token(tok: Token) -> str:
    if tok.kind == "symbol":
        phrase = _PHRASES.get(tok.text)
        if phrase is not None:
            return phrase
        if len(tok.text) == 1:
            return _speak_char(tok.text)  # unknown glyphs get their Unicode name
        return tok.text
    if tok.kind == "comment":
        if tok.text.startswith("//"):
            return " ".join(["double slash comment", *tok.text[2:].split()])
        interior = tok.text[2:-2] if tok.text.endswith("*/") else tok.text[2:]
        return " ".join(["start block comment", *interior.split(), "end block comment"])
    return tok.text


def render_line(doc: DocumentBuffer, line: int, settings: SpeechSettings) -> str:
    if not 1 <= line <= doc.line_count:
        raise OutOfBoundsError(f"line {line} out of bounds")
    text = doc.lines[line - 1].lstrip(" \t")  # indentation is haptic, not spoken
    if not text:
        return BLANK_LINE
    if settings.granularity == "characters":
        return " ".join(_speak_char(ch) for ch in text)
    tokens, _ = scan(text)
    if not tokens:
        return " ".join(_speak_char(ch) for ch in text)
    parts = [_speak_token(t) for t in tokens]
    covered = tokens[-1].span.end.col if tokens[-1].span.end.line == 1 else len(text)
    rest = text[covered:].strip()
    if rest:  # e.g. the opening of an unterminated string
        parts.append(rest)
    return " ".join(parts)


def render_lines(doc: DocumentBuffer, ending_before: int, count: int, settings: SpeechSettings) -> str:
    """The `count` lines strictly above `ending_before`, top to bottom."""
    if not 1 <= count <= 9:
        raise ValueError("count must be between 1 and 9")
    first = max(1, ending_before - count)
    if first >= ending_before:
        return TOP_OF_FILE
    rendered = [render_line(doc, n, settings) for n in range(first, ending_before)]
    return f" {LINE_SEPARATOR} ".join(rendered)


def render_function_context(ctx: FunctionContext | None) -> str:
    if ctx is None:
        return "you are not inside a function"
    if not ctx.params:
        return f"you are in the function {ctx.name}"
    return f"you are in the function {ctx.name}, taking {' and '.join(ctx.params)}"


_WORD_DELIMITERS = " \t\n"


@dataclass
class TypingEchoBuffer:
    """Word-granularity echo needs to remember the token being typed."""

    pending: str = ""

    def reset(self) -> None:
        self.pending = ""


def typing_echo(inserted: str, settings: SpeechSettings, buffer: TypingEchoBuffer) -> list[str]:
    """Utterances for typed text, in speaking order. Empty when echo is off."""
    if not settings.typing_echo:
        buffer.reset()
        return []
    if settings.granularity == "characters":
        return [_speak_char(ch) for ch in inserted]
    utterances: list[str] = []
    for ch in inserted:
        if ch.isalnum() or ch in "_$":
            buffer.pending += ch
            continue
        if buffer.pending:
            utterances.append(buffer.pending)
            buffer.pending = ""
        utterances.append(_speak_char(ch))
    return utterances
