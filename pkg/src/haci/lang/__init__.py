"""Lexing, parsing, per-line structure facts, and execution for the
frozen JavaScript subset the editor understands."""

from haci.lang.lexer import Token, scan, tokenize
from haci.lang.parser import parse
from haci.lang.facts import Analysis, StaleAnalysisError, analyze
from haci.lang.interpreter import ExecutionLimits, ExecutionResult, execute

__all__ = [
    "Token",
    "scan",
    "tokenize",
    "parse",
    "Analysis",
    "StaleAnalysisError",
    "analyze",
    "ExecutionLimits",
    "ExecutionResult",
    "execute",
]
