"""Per-line structure facts and cursor function context.

Indentation and bracket facts come straight from text/tokens, so they
survive parse failures; control open/close facts need a successful parse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from haci.diagnostics import Diagnostic
from haci.document import Position
from haci.lang import ast
from haci.lang.lexer import Span, Token, scan

TAB_UNITS = 4

_OPEN_BRACKETS = "[{"
_CLOSE_BRACKETS = "]}"


class StaleAnalysisError(RuntimeError):
    """The document changed since this analysis was computed; re-analyze."""


@dataclass(frozen=True)
class BracketFact:
    col: int
    char: str
    side: str  # open|close


@dataclass
class LineFacts:
    indent_units: int = 0
    blank: bool = True
    control_opens: list[str] = field(default_factory=list)  # "if" | "loop"
    control_closes: list[str] = field(default_factory=list)
    brackets: list[BracketFact] = field(default_factory=list)


@dataclass(frozen=True)
class FunctionContext:
    name: str
    params: tuple[str, ...]
    span: Span


def indent_of(line: str) -> int:
    units = 0
    for ch in line:
        if ch == " ":
            units += 1
        elif ch == "\t":
            units += TAB_UNITS
        else:
            break
    return units


def line_facts(lines: list[str], tokens: list[Token] | None, program: ast.Program | None) -> list[LineFacts]:
    """Facts table indexed 0-based by line (line N is facts[N-1])."""
    table = [LineFacts(indent_units=indent_of(line), blank=not line.strip()) for line in lines]

    if tokens is not None:
        for tok in tokens:
            if tok.kind == "symbol" and tok.text in "[{]}":
                row = table[tok.span.start.line - 1]
                side = "open" if tok.text in _OPEN_BRACKETS else "close"
                row.brackets.append(BracketFact(tok.span.start.col, tok.text, side))
    else:
        for n, line in enumerate(lines):
            for col, ch in enumerate(line):
                if ch in "[{]}":
                    side = "open" if ch in _OPEN_BRACKETS else "close"
                    table[n].brackets.append(BracketFact(col, ch, side))

    if program is not None:
        for node in ast.walk(program):
            if isinstance(node, ast.If):
                if not node.chained:
                    table[node.span.start.line - 1].control_opens.append("if")
                    table[node.span.end.line - 1].control_closes.append("if")
            elif isinstance(node, (ast.For, ast.While)):
                table[node.span.start.line - 1].control_opens.append("loop")
                table[node.span.end.line - 1].control_closes.append("loop")
    return table


def effective_indent(table: list[LineFacts], line: int) -> int | None:
    """Indent for cue purposes: blank lines inherit the nearest preceding
    non-blank line's indent; returns None when no such line exists."""
    for n in range(line, 0, -1):
        row = table[n - 1]
        if not row.blank:
            return row.indent_units
    return None


def enclosing_function(program: ast.Program, pos: Position) -> Optional[FunctionContext]:
    """Innermost function declaration whose span contains pos."""
    best: ast.FunctionDecl | None = None
    for node in ast.walk(program):
        if isinstance(node, ast.FunctionDecl) and node.span.contains(pos):
            best = node  # walk order is pre-order, so later hits are inner
    if best is None:
        return None
    return FunctionContext(best.name, tuple(best.params), best.span)


@dataclass
class Analysis:
    """Structure snapshot of one document state."""

    source: str
    tokens: list[Token]
    program: ast.Program | None
    syntax_error: Diagnostic | None
    facts: list[LineFacts]

    def ensure_current(self, source: str) -> None:
        if source != self.source:
            raise StaleAnalysisError("document changed since this analysis; re-analyze")

    def function_at(self, pos: Position, source: str | None = None) -> Optional[FunctionContext]:
        if source is not None:
            self.ensure_current(source)
        if self.program is None:
            return None
        return enclosing_function(self.program, pos)


def analyze(source: str) -> Analysis:
    tokens, lex_diag = scan(source)
    program: ast.Program | None = None
    syntax_error = lex_diag
    if lex_diag is None:
        from haci.lang.parser import parse

        result = parse(tokens)
        if isinstance(result, Diagnostic):
            syntax_error = result
        else:
            program = result
    facts = line_facts(source.split("\n"), tokens, program)
    return Analysis(source, tokens, program, syntax_error, facts)
