"""Document buffer: lines, cursor, two marker slots, and panel focus.

The single mutable piece of session state. Lines never store a trailing
newline; an empty document is one empty line. Columns count code points.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class PanelId(enum.Enum):
    CODE = "code"
    ERRORS = "errors"
    CONSOLE = "console"


@dataclass(frozen=True, order=True)
class Position:
    line: int  # 1-based
    col: int  # 0-based


@dataclass(frozen=True)
class EditDelta:
    """Span transform of one edit: [start, old_end) was replaced, now ending
    at new_end. Positions at or after the old span shift accordingly."""

    start: Position
    old_end: Position
    new_end: Position

    @property
    def lines_added(self) -> int:
        return self.new_end.line - self.old_end.line

    @property
    def cols_shifted(self) -> int:
        return self.new_end.col - self.old_end.col

    def transform(self, pos: Position) -> Position:
        """Map a position through this edit (shift after, clamp inside)."""
        if pos < self.start:
            return pos
        if pos < self.old_end:
            return self.start
        if pos.line == self.old_end.line:
            return Position(self.new_end.line, self.new_end.col + (pos.col - self.old_end.col))
        return Position(pos.line + self.lines_added, pos.col)


@dataclass(frozen=True)
class NavigationEvent:
    from_pos: Position
    to_pos: Position


class OutOfBoundsError(ValueError):
    pass


class MarkerUnsetError(LookupError):
    def __init__(self, slot: int):
        super().__init__(f"marker {slot} not set")
        self.slot = slot


MOTIONS = ("up", "down", "left", "right", "line-start", "line-end")
ANCHORS = ("start", "middle", "end")


@dataclass
class DocumentBuffer:
    lines: list[str] = field(default_factory=lambda: [""])
    cursor: Position = Position(1, 0)
    markers: dict[int, Position | None] = field(default_factory=lambda: {1: None, 2: None})
    focus: PanelId = PanelId.CODE
    _goal_col: int | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if not self.lines:
            self.lines = [""]

    @classmethod
    def from_text(cls, text: str) -> "DocumentBuffer":
        return cls(lines=text.split("\n"))

    def text(self) -> str:
        return "\n".join(self.lines)

    @property
    def line_count(self) -> int:
        return len(self.lines)

    def line_len(self, line: int) -> int:
        return len(self.lines[line - 1])

    def in_bounds(self, pos: Position) -> bool:
        return 1 <= pos.line <= self.line_count and 0 <= pos.col <= self.line_len(pos.line)

    def clamp(self, pos: Position) -> Position:
        line = min(max(pos.line, 1), self.line_count)
        col = min(max(pos.col, 0), self.line_len(line))
        return Position(line, col)

    def char_at(self, pos: Position) -> str | None:
        """Character under pos, or None when pos sits past line end."""
        line = self.lines[pos.line - 1]
        return line[pos.col] if pos.col < len(line) else None

    # -- edits ------------------------------------------------------------

    def insert_text(self, pos: Position, text: str) -> EditDelta:
        if not self.in_bounds(pos):
            raise OutOfBoundsError(f"insert position {pos} out of bounds")
        parts = text.split("\n")
        line = self.lines[pos.line - 1]
        head, tail = line[: pos.col], line[pos.col :]
        if len(parts) == 1:
            self.lines[pos.line - 1] = head + parts[0] + tail
            new_end = Position(pos.line, pos.col + len(parts[0]))
        else:
            spliced = [head + parts[0], *parts[1:-1], parts[-1] + tail]
            self.lines[pos.line - 1 : pos.line] = spliced
            new_end = Position(pos.line + len(parts) - 1, len(parts[-1]))
        delta = EditDelta(start=pos, old_end=pos, new_end=new_end)
        self._apply_delta_to_anchors(delta)
        self.cursor = new_end
        self._goal_col = None
        return delta

    def delete_range(self, from_pos: Position, to_pos: Position) -> EditDelta:
        if not (self.in_bounds(from_pos) and self.in_bounds(to_pos)):
            raise OutOfBoundsError(f"delete range {from_pos}..{to_pos} out of bounds")
        if to_pos < from_pos:
            raise OutOfBoundsError(f"inverted delete range {from_pos}..{to_pos}")
        first = self.lines[from_pos.line - 1]
        last = self.lines[to_pos.line - 1]
        self.lines[from_pos.line - 1 : to_pos.line] = [first[: from_pos.col] + last[to_pos.col :]]
        delta = EditDelta(start=from_pos, old_end=to_pos, new_end=from_pos)
        self._apply_delta_to_anchors(delta)
        self.cursor = from_pos
        self._goal_col = None
        return delta

    def _apply_delta_to_anchors(self, delta: EditDelta) -> None:
        for slot, marker in self.markers.items():
            if marker is not None:
                self.markers[slot] = delta.transform(marker)

    # -- cursor motion ----------------------------------------------------

    def move_cursor(self, motion: str) -> NavigationEvent:
        if motion not in MOTIONS:
            raise ValueError(f"unknown motion {motion!r}")
        start = self.cursor
        line, col = start.line, start.col
        if motion in ("up", "down"):
            goal = self._goal_col if self._goal_col is not None else col
            line = max(1, line - 1) if motion == "up" else min(self.line_count, line + 1)
            col = min(goal, self.line_len(line))
            self._goal_col = goal
        elif motion == "left":
            if col > 0:
                col -= 1
            elif line > 1:
                line -= 1
                col = self.line_len(line)
            self._goal_col = None
        elif motion == "right":
            if col < self.line_len(line):
                col += 1
            elif line < self.line_count:
                line += 1
                col = 0
            self._goal_col = None
        elif motion == "line-start":
            col = 0
            self._goal_col = None
        elif motion == "line-end":
            col = self.line_len(line)
            self._goal_col = None
        self.cursor = Position(line, col)
        return NavigationEvent(start, self.cursor)

    def move_cursor_to(self, pos: Position) -> NavigationEvent:
        start = self.cursor
        self.cursor = self.clamp(pos)
        self._goal_col = None
        return NavigationEvent(start, self.cursor)

    # -- markers and jumps --------------------------------------------------

    def drop_marker(self, slot: int) -> Position:
        if slot not in self.markers:
            raise ValueError(f"marker slot {slot} does not exist")
        self.markers[slot] = self.cursor
        return self.cursor

    def jump_to_marker(self, slot: int) -> NavigationEvent:
        if slot not in self.markers:
            raise ValueError(f"marker slot {slot} does not exist")
        target = self.markers[slot]
        if target is None:
            raise MarkerUnsetError(slot)
        return self.move_cursor_to(target)

    def jump_absolute(self, anchor: str) -> NavigationEvent:
        if anchor not in ANCHORS:
            raise ValueError(f"unknown anchor {anchor!r}")
        n = self.line_count
        line = {"start": 1, "middle": (n + 1) // 2, "end": n}[anchor]
        return self.move_cursor_to(Position(line, 0))

    def set_focus(self, panel: PanelId) -> PanelId:
        self.focus = panel
        return self.focus
