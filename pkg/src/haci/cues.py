"""Sound and haptic cue computation for navigation and error direction.

Pure functions from navigation events, structure facts, and diagnostics to
ordered feedback events; pacing and delivery belong to the device link.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from haci.diagnostics import Diagnostic
from haci.document import DocumentBuffer, NavigationEvent
from haci.lang.facts import LineFacts, effective_indent


class HapticMotor(enum.IntEnum):
    THUMB = 0
    INDEX = 1
    MIDDLE = 2
    RING = 3
    PINKY = 4
    PALM_CENTER = 5


class HapticPattern(enum.IntEnum):
    SINGLE_BUZZ = 1
    DOUBLE_TAP = 2  # two pulses of duration_ms separated by a 100 ms gap


class SoundCue(enum.Enum):
    IF_OPEN = "if-open"
    IF_CLOSE = "if-close"
    LOOP_OPEN = "loop-open"
    LOOP_CLOSE = "loop-close"
    SYNTAX_ERROR_VOICE = "syntax-error-voice"
    RUNTIME_ERROR_FEET = "runtime-error-feet"


# id=filename catalog rows for the plain-text cue manifest.
CUE_CATALOG: tuple[tuple[SoundCue, str], ...] = (
    (SoundCue.IF_OPEN, "door_opening.wav"),
    (SoundCue.IF_CLOSE, "door_slamming.wav"),
    (SoundCue.LOOP_OPEN, "engine_start.wav"),
    (SoundCue.LOOP_CLOSE, "brake_screech.wav"),
    (SoundCue.SYNTAX_ERROR_VOICE, "gibberish.wav"),
    (SoundCue.RUNTIME_ERROR_FEET, "running_feet.wav"),
)


def cue_manifest() -> str:
    return "".join(f"{cue.value}={filename}\n" for cue, filename in CUE_CATALOG)


@dataclass(frozen=True)
class HapticCommand:
    motor: HapticMotor
    pattern: HapticPattern
    intensity: int  # 0-255
    duration_ms: int  # per-pulse, 20-2000

    def __post_init__(self) -> None:
        if not 0 <= int(self.motor) <= 5:
            raise ValueError(f"motor id {self.motor} out of range")
        if self.pattern not in (HapticPattern.SINGLE_BUZZ, HapticPattern.DOUBLE_TAP):
            raise ValueError(f"bad pattern {self.pattern}")
        if not 0 <= self.intensity <= 255:
            raise ValueError(f"intensity {self.intensity} out of range")
        if not 20 <= self.duration_ms <= 2000:
            raise ValueError(f"duration {self.duration_ms} out of range")


@dataclass
class CueConfig:
    """Pulse shapes are not dictated by the feedback tables; these defaults
    sit within motor limits and intensity is per-session adjustable."""

    intensity: int = 200
    buzz_ms: int = 200
    tap_ms: int = 100

    def single_buzz(self, motor: HapticMotor) -> HapticCommand:
        return HapticCommand(motor, HapticPattern.SINGLE_BUZZ, self.intensity, self.buzz_ms)

    def double_tap(self, motor: HapticMotor) -> HapticCommand:
        return HapticCommand(motor, HapticPattern.DOUBLE_TAP, self.intensity, self.tap_ms)


@dataclass(frozen=True)
class Speech:
    text: str


@dataclass(frozen=True)
class Sound:
    cue: SoundCue


@dataclass(frozen=True)
class Haptic:
    cmd: HapticCommand


Payload = Speech | Sound | Haptic


@dataclass(frozen=True)
class FeedbackEvent:
    seq: int
    trigger: int
    payload: Payload


class EventSequencer:
    """Per-session monotone seq numbers; events from one trigger share an id."""

    def __init__(self) -> None:
        self._seq = 0
        self._trigger = 0

    def next_trigger(self) -> int:
        self._trigger += 1
        return self._trigger

    def emit(self, trigger: int, payload: Payload) -> FeedbackEvent:
        self._seq += 1
        return FeedbackEvent(self._seq, trigger, payload)

    def emit_all(self, payloads: list[Payload]) -> list[FeedbackEvent]:
        trigger = self.next_trigger()
        return [self.emit(trigger, p) for p in payloads]


def navigation_payloads(
    nav: NavigationEvent,
    facts: list[LineFacts],
    diags: list[Diagnostic],
    config: CueConfig,
) -> list[Payload]:
    """Line-arrival cues, in fixed order: indent haptic, control sounds,
    error-line sound. Same-line moves produce nothing."""
    if nav.to_pos.line == nav.from_pos.line:
        return []
    line = nav.to_pos.line
    if line - 1 >= len(facts):
        return []
    row = facts[line - 1]
    payloads: list[Payload] = []

    if not row.blank:
        prev = effective_indent(facts, line - 1) if line > 1 else None
        if prev is not None:
            if row.indent_units > prev:
                payloads.append(Haptic(config.single_buzz(HapticMotor.RING)))
            elif row.indent_units < prev:
                payloads.append(Haptic(config.single_buzz(HapticMotor.INDEX)))

    for kind in row.control_opens:
        payloads.append(Sound(SoundCue.IF_OPEN if kind == "if" else SoundCue.LOOP_OPEN))
    for kind in row.control_closes:
        payloads.append(Sound(SoundCue.IF_CLOSE if kind == "if" else SoundCue.LOOP_CLOSE))

    kinds_here = {d.kind for d in diags if d.line == line}
    if "syntax" in kinds_here:
        payloads.append(Sound(SoundCue.SYNTAX_ERROR_VOICE))
    if "runtime" in kinds_here:
        payloads.append(Sound(SoundCue.RUNTIME_ERROR_FEET))
    return payloads


_BRACKET_PHRASES = {
    "[": "open bracket",
    "{": "open brace",
    "]": "close bracket",
    "}": "close brace",
}


def character_payloads(nav: NavigationEvent, doc: DocumentBuffer, config: CueConfig) -> list[Payload]:
    """Bracket-under-cursor cue: phrase plus thumb (open) or pinky (close)."""
    ch = doc.char_at(nav.to_pos)
    if ch not in _BRACKET_PHRASES:
        return []
    motor = HapticMotor.THUMB if ch in "[{" else HapticMotor.PINKY
    return [Speech(_BRACKET_PHRASES[ch]), Haptic(config.single_buzz(motor))]


class NoErrorsError(LookupError):
    pass


def error_direction_payload(cursor_line: int, diags: list[Diagnostic], config: CueConfig) -> Payload:
    """Direction of the first cached diagnostic relative to the cursor."""
    if not diags:
        raise NoErrorsError("no errors")
    first = diags[0]
    if first.line < cursor_line:
        return Haptic(config.single_buzz(HapticMotor.MIDDLE))
    if first.line > cursor_line:
        return Haptic(config.single_buzz(HapticMotor.PALM_CENTER))
    return Haptic(config.double_tap(HapticMotor.PALM_CENTER))


def cues_for_navigation(
    nav: NavigationEvent,
    facts: list[LineFacts],
    diags: list[Diagnostic],
    sequencer: EventSequencer,
    config: Optional[CueConfig] = None,
) -> list[FeedbackEvent]:
    return sequencer.emit_all(navigation_payloads(nav, facts, diags, config or CueConfig()))


def cue_for_character(
    nav: NavigationEvent,
    doc: DocumentBuffer,
    sequencer: EventSequencer,
    config: Optional[CueConfig] = None,
) -> list[FeedbackEvent]:
    return sequencer.emit_all(character_payloads(nav, doc, config or CueConfig()))


def error_direction(
    cursor_line: int,
    diags: list[Diagnostic],
    sequencer: EventSequencer,
    config: Optional[CueConfig] = None,
) -> FeedbackEvent:
    payload = error_direction_payload(cursor_line, diags, config or CueConfig())
    return sequencer.emit_all([payload])[0]
