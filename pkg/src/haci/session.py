"""One editing session: applies inbound messages in order, drives the
buffer, analyzer, interpreter, renderers, and cue engine, and streams
ordered updates back.

Everything time-dependent reads the session clock, so a replay under the
virtual clock reproduces the outbound stream byte for byte.
"""

from __future__ import annotations

import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

from haci import dispatch
from haci.cues import (
    CueConfig,
    EventSequencer,
    FeedbackEvent,
    Haptic,
    HapticPattern,
    Payload,
    Sound,
    Speech,
    character_payloads,
    error_direction_payload,
    navigation_payloads,
)
from haci.device import GloveLink, GloveSimulator
from haci.diagnostics import Diagnostic
from haci.document import DocumentBuffer, NavigationEvent, OutOfBoundsError, Position
from haci.lang.facts import Analysis, analyze
from haci.lang.interpreter import ExecutionLimits, execute
from haci.speech import (
    SpeechSettings,
    TypingEchoBuffer,
    render_function_context,
    render_line,
    render_lines,
    typing_echo,
)


class WallClock:
    def __init__(self) -> None:
        self._start = time.monotonic()

    def __call__(self) -> int:
        return int((time.monotonic() - self._start) * 1000)


class VirtualClock:
    def __init__(self, t_ms: int = 0) -> None:
        self.t_ms = t_ms

    def set_to(self, t_ms: int) -> None:
        self.t_ms = max(self.t_ms, t_ms)  # never runs backwards

    def __call__(self) -> int:
        return self.t_ms


@dataclass(frozen=True)
class MetricRecord:
    t_ms: int
    kind: str  # command|error-raised|feature-use|task-marker
    detail: str


def canonical_json(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _payload_json(payload: Payload) -> dict:
    if isinstance(payload, Speech):
        return {"kind": "speech", "text": payload.text}
    if isinstance(payload, Sound):
        return {"kind": "sound", "cue": payload.cue.value}
    cmd = payload.cmd
    return {
        "kind": "haptic",
        "motor": int(cmd.motor),
        "motorName": cmd.motor.name.lower().replace("_", "-"),
        "pattern": "single-buzz" if cmd.pattern == HapticPattern.SINGLE_BUZZ else "double-tap",
        "intensity": cmd.intensity,
        "durationMs": cmd.duration_ms,
    }


def event_json(event: FeedbackEvent) -> dict:
    return {
        "type": "feedback",
        "event": {"seq": event.seq, "trigger": event.trigger, "payload": _payload_json(event.payload)},
    }


@dataclass
class SessionConfig:
    strict_indexing: bool = True
    keymap_profile: str = "macos"
    limits: ExecutionLimits = field(default_factory=ExecutionLimits)
    cue_config: CueConfig = field(default_factory=CueConfig)
    log_events_path: Optional[Path] = None
    open_path: Optional[Path] = None
    auto_drain_device: bool = True


class Session:
    def __init__(
        self,
        config: SessionConfig | None = None,
        clock: Callable[[], int] | None = None,
        glove: GloveLink | None = None,
        session_id: str = "local",
    ):
        self.config = config or SessionConfig()
        self.clock = clock or WallClock()
        self.session_id = session_id
        self.doc = DocumentBuffer()
        self.settings = SpeechSettings()
        self.echo_buffer = TypingEchoBuffer()
        self.sequencer = EventSequencer()
        self.keymap = dispatch.Keymap.load_profile(self.config.keymap_profile)
        self.cached_diagnostics: list[Diagnostic] = []
        self.console_lines: list[str] = []
        self.metrics: list[MetricRecord] = []
        self.inbound_recording: list[dict] = []
        self._analysis: Analysis | None = None
        self._last_client_seq: int | None = None
        if glove is None:
            self.simulator = GloveSimulator()
            self.glove = GloveLink(self.simulator, self.clock)
        else:
            self.simulator = glove.sink if isinstance(glove.sink, GloveSimulator) else None
            self.glove = glove
        if self.config.open_path is not None and self.config.open_path.exists():
            self.doc = DocumentBuffer.from_text(self.config.open_path.read_text(encoding="utf-8"))

    # -- analysis and rendering helpers ------------------------------------

    @property
    def analysis(self) -> Analysis:
        text = self.doc.text()
        if self._analysis is None or self._analysis.source != text:
            self._analysis = analyze(text)
        return self._analysis

    def render_current_line(self) -> str:
        return render_line(self.doc, self.doc.cursor.line, self.settings)

    def render_previous_lines(self, count: int) -> str:
        return render_lines(self.doc, self.doc.cursor.line, count, self.settings)

    def render_function_context(self) -> str:
        ctx = self.analysis.function_at(self.doc.cursor, self.doc.text())
        return render_function_context(ctx)

    def error_direction_payload(self) -> Payload:
        return error_direction_payload(self.doc.cursor.line, self.cached_diagnostics, self.config.cue_config)

    # -- feedback plumbing --------------------------------------------------

    def emit_feedback(self, payloads: list[Payload]) -> list[dict]:
        events = self.sequencer.emit_all(payloads)
        for event in events:
            if isinstance(event.payload, Haptic):
                self.glove.send(event.payload.cmd)
        return [event_json(e) for e in events]

    def navigation_feedback(self, nav: NavigationEvent) -> list[dict]:
        updates = []
        line_payloads = navigation_payloads(
            nav, self.analysis.facts, self.cached_diagnostics, self.config.cue_config
        )
        if line_payloads:
            updates += self.emit_feedback(line_payloads)
        char_payloads = character_payloads(nav, self.doc, self.config.cue_config)
        if char_payloads:
            updates += self.emit_feedback(char_payloads)
        return updates

    # -- program execution ----------------------------------------------------

    def run_program(self) -> list[dict]:
        analysis = self.analysis
        if analysis.syntax_error is not None:
            self.cached_diagnostics = [analysis.syntax_error]
        else:
            assert analysis.program is not None
            result = execute(analysis.program, self.config.limits, self.config.strict_indexing)
            self.cached_diagnostics = list(result.diagnostics)
            self.console_lines.extend(result.console_lines)
        for diag in self.cached_diagnostics:
            self.log_event("error-raised", diag.describe())
        return [
            {"type": "panel", "panel": "errors", "lines": [d.describe() for d in self.cached_diagnostics]},
            {"type": "panel", "panel": "console", "lines": list(self.console_lines)},
        ]

    # -- metrics --------------------------------------------------------------

    def log_event(self, kind: str, detail: str) -> MetricRecord:
        record = MetricRecord(self.clock(), kind, detail)
        self.metrics.append(record)
        if self.config.log_events_path is not None:
            try:
                with self.config.log_events_path.open("a", encoding="utf-8") as fh:
                    fh.write(canonical_json({"t_ms": record.t_ms, "kind": record.kind, "detail": record.detail}))
                    fh.write("\n")
            except OSError as exc:  # logging must never break the session
                print(f"warning: event log unwritable: {exc}", file=sys.stderr)
        return record

    def snapshot_metrics(self) -> dict:
        markers = [r for r in self.metrics if r.kind == "task-marker"]
        tasks = [
            {"task": a.detail, "elapsed_ms": b.t_ms - a.t_ms}
            for a, b in zip(markers, markers[1:])
        ]
        feature_counts: dict[str, int] = {}
        for r in self.metrics:
            if r.kind in ("feature-use", "command"):
                feature_counts[r.detail] = feature_counts.get(r.detail, 0) + 1
        return {
            "tasks": tasks,
            "errors_raised": sum(1 for r in self.metrics if r.kind == "error-raised"),
            "feature_counts": feature_counts,
        }

    # -- message handling -------------------------------------------------------

    def handle_message(self, msg: dict) -> list[dict]:
        self.inbound_recording.append({"t_ms": self.clock(), "message": msg})
        try:
            updates = self._dispatch_message(msg)
        except _ProtocolError as exc:
            updates = [{"type": "protocol-error", "detail": str(exc)}]
        seq = msg.get("seq") if isinstance(msg, dict) else None
        if isinstance(seq, int):
            self._last_client_seq = seq
            updates.append(
                {
                    "type": "ack",
                    "seq": seq,
                    "cursor": {"line": self.doc.cursor.line, "col": self.doc.cursor.col},
                }
            )
        if self.config.auto_drain_device:
            self.glove.drain()
        return updates

    def _dispatch_message(self, msg: dict) -> list[dict]:
        if not isinstance(msg, dict) or "type" not in msg:
            raise _ProtocolError("message must be an object with a 'type'")
        kind = msg["type"]
        if kind == "hello":
            return self._handle_hello(msg)
        if kind == "edit":
            return self._handle_edit(msg)
        if kind == "cursor":
            return self._handle_cursor(msg)
        if kind == "chord":
            return self._handle_chord(msg)
        if kind == "save":
            return self._handle_save(msg)
        raise _ProtocolError(f"unknown message type {kind!r}")

    def _handle_hello(self, msg: dict) -> list[dict]:
        task = msg.get("task")
        if isinstance(task, str) and task:
            self.log_event("task-marker", task)
        return [
            {"type": "panel", "panel": "code", "lines": list(self.doc.lines)},
            {"type": "panel", "panel": "errors", "lines": [d.describe() for d in self.cached_diagnostics]},
            {"type": "panel", "panel": "console", "lines": list(self.console_lines)},
            {"type": "metrics", "snapshot": self.snapshot_metrics()},
        ]

    def _require_position(self, obj: object, what: str) -> Position:
        if not isinstance(obj, dict) or not isinstance(obj.get("line"), int) or not isinstance(obj.get("col"), int):
            raise _ProtocolError(f"{what} must be {{line, col}}")
        return Position(obj["line"], obj["col"])

    def _handle_edit(self, msg: dict) -> list[dict]:
        op = msg.get("op")
        if op == "insert":
            pos = self._require_position(msg.get("pos"), "pos")
            text = msg.get("text")
            if not isinstance(text, str):
                raise _ProtocolError("insert needs a string 'text'")
            try:
                self.doc.insert_text(pos, text)
            except OutOfBoundsError as exc:
                raise _ProtocolError(str(exc)) from None
            utterances = typing_echo(text, self.settings, self.echo_buffer)
            return self.emit_feedback([Speech(u) for u in utterances]) if utterances else []
        if op == "delete":
            from_pos = self._require_position(msg.get("from"), "from")
            to_pos = self._require_position(msg.get("to"), "to")
            try:
                self.doc.delete_range(from_pos, to_pos)
            except OutOfBoundsError as exc:
                raise _ProtocolError(str(exc)) from None
            self.echo_buffer.reset()
            return []
        raise _ProtocolError(f"unknown edit op {op!r}")

    def _handle_cursor(self, msg: dict) -> list[dict]:
        self.echo_buffer.reset()
        if "motion" in msg:
            motion = msg["motion"]
            try:
                nav = self.doc.move_cursor(motion)
            except ValueError as exc:
                raise _ProtocolError(str(exc)) from None
        else:
            nav = self.doc.move_cursor_to(self._require_position(msg.get("target"), "target"))
        return self.navigation_feedback(nav)

    def _handle_chord(self, msg: dict) -> list[dict]:
        mods = msg.get("modifiers", [])
        key = msg.get("key")
        if not isinstance(mods, list) or not isinstance(key, str):
            raise _ProtocolError("chord needs 'modifiers' list and 'key'")
        try:
            chord = dispatch.KeyChord(frozenset(m.lower() for m in mods), key.lower())
        except AttributeError:
            raise _ProtocolError("modifiers must be strings") from None
        command = self.keymap.resolve(chord, self.doc.focus)
        if command is None:
            return []
        self.echo_buffer.reset()
        kind = "feature-use" if command.action in dispatch.FEEDBACK_FEATURES else "command"
        self.log_event(kind, command.name)
        return dispatch.apply_command(self, command)

    def _handle_save(self, msg: dict) -> list[dict]:
        path = msg.get("path") or (str(self.config.open_path) if self.config.open_path else None)
        if not path:
            raise _ProtocolError("no path to save to")
        try:
            Path(path).write_text(self.doc.text(), encoding="utf-8")
        except OSError as exc:
            raise _ProtocolError(f"save failed: {exc}") from None
        return []


class _ProtocolError(Exception):
    pass


# -- replay --------------------------------------------------------------------


def replay_log(inbound_lines: list[str], config: SessionConfig | None = None) -> list[str]:
    """Re-run a recorded inbound log under the virtual clock; returns the
    normalized outbound log, one canonical JSON line per update."""
    clock = VirtualClock()
    cfg = config or SessionConfig()
    cfg.log_events_path = None  # replay never appends to live logs
    session = Session(cfg, clock=clock, session_id="replay")
    out: list[str] = []
    for raw in inbound_lines:
        line = raw.strip()
        if not line:
            continue
        record = json.loads(line)
        clock.set_to(int(record.get("t_ms", clock.t_ms)))
        for update in session.handle_message(record["message"]):
            out.append(canonical_json(update))
    return out


def recording_lines(session: Session) -> list[str]:
    return [canonical_json(r) for r in session.inbound_recording]
