"""Syntax and runtime diagnostics shared by the parser and interpreter."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Diagnostic:
    """An error with a position.

    kind is "syntax" (from the lexer/parser) or "runtime" (from execution).
    line is 1-based, col is 0-based, both pointing at a token of the
    offending construct.
    """

    kind: str
    message: str
    line: int
    col: int

    def describe(self) -> str:
        return f"{self.kind} error on line {self.line}: {self.message}"
