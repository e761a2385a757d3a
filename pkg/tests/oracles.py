"""Independent oracles for property tests.

These deliberately avoid the package's own lexer/parser/encoder paths:
indentation comes from a regex scan, checksums from functools.reduce,
and error direction from a plain sign comparison.
"""

from __future__ import annotations

import functools
import re
import subprocess

_INDENT_RE = re.compile(r"^[ \t]*")


def brute_indent_units(line: str, tab_units: int = 4) -> int:
    ws = _INDENT_RE.match(line).group(0)
    return ws.count(" ") + ws.count("\t") * tab_units


def brute_is_blank(line: str) -> bool:
    return line.strip() == ""


def brute_effective_indent(lines: list[str], line_no: int) -> int | None:
    """Indent of the nearest non-blank line at or above line_no (1-based)."""
    for n in range(line_no, 0, -1):
        if not brute_is_blank(lines[n - 1]):
            return brute_indent_units(lines[n - 1])
    return None


def brute_indent_cue(lines: list[str], dest_line: int) -> str | None:
    """Expected indent haptic on arriving at dest_line: 'ring', 'index', or None."""
    if brute_is_blank(lines[dest_line - 1]):
        return None
    prev = brute_effective_indent(lines, dest_line - 1)
    if prev is None:
        return None
    here = brute_indent_units(lines[dest_line - 1])
    if here > prev:
        return "ring"
    if here < prev:
        return "index"
    return None


def brute_checksum(body: bytes) -> int:
    return functools.reduce(lambda a, b: a ^ b, body, 0)


def brute_error_direction(cursor_line: int, error_line: int) -> tuple[str, str]:
    """(motor, pattern) per the feedback table, from a sign comparison."""
    if error_line < cursor_line:
        return "MIDDLE", "SINGLE_BUZZ"
    if error_line > cursor_line:
        return "PALM_CENTER", "SINGLE_BUZZ"
    return "PALM_CENTER", "DOUBLE_TAP"


def run_node(source: str, timeout: float = 20.0) -> list[str]:
    """Reference-engine console output for a program (must exit cleanly)."""
    proc = subprocess.run(
        ["node", "--no-warnings", "-e", source],
        capture_output=True,
        text=True,
        timeout=timeout,
    )
    if proc.returncode != 0:
        raise AssertionError(f"reference engine rejected program:\n{proc.stderr}\n---\n{source}")
    out = proc.stdout.split("\n")
    if out and out[-1] == "":
        out.pop()
    return out
