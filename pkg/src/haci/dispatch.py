"""Key-chord resolution and command application.

Chord bindings load from keymap profile files (`chord=command` lines).
The macos profile uses the glove documentation's bindings verbatim; the
portable profile folds cmd into ctrl for non-mac keyboards.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import TYPE_CHECKING, Optional

from haci.cues import NoErrorsError, Speech
from haci.document import MarkerUnsetError, PanelId

if TYPE_CHECKING:
    from haci.session import Session

MODIFIERS = ("ctrl", "alt", "meta", "shift")


@dataclass(frozen=True)
class KeyChord:
    modifiers: frozenset[str]
    key: str

    @classmethod
    def of(cls, spec: str) -> "KeyChord":
        *mods, key = spec.lower().split("+")
        bad = [m for m in mods if m not in MODIFIERS]
        if bad:
            raise ValueError(f"unknown modifiers {bad} in chord {spec!r}")
        if not key:
            raise ValueError(f"missing key in chord {spec!r}")
        return cls(frozenset(mods), key)

    def __str__(self) -> str:
        mods = [m for m in MODIFIERS if m in self.modifiers]
        return "+".join([*mods, self.key])


@dataclass(frozen=True)
class Command:
    action: str
    arg: int | str | None = None

    @property
    def name(self) -> str:
        if self.arg is None:
            return self.action
        if self.action == "jump-absolute":
            return f"jump-{self.arg}"
        if self.action == "focus-panel":
            return f"focus-{self.arg}"
        return f"{self.action}-{self.arg}"


def parse_command_name(name: str) -> Command:
    if name in (
        "toggle-echo",
        "toggle-granularity",
        "execute",
        "read-line",
        "read-function",
        "error-direction",
        "read-focused-error",
    ):
        return Command(name)
    if name.startswith("drop-marker-") or name.startswith("jump-marker-"):
        action, slot = name.rsplit("-", 1)
        if slot not in ("1", "2"):
            raise ValueError(f"bad marker slot in {name!r}")
        return Command(action, int(slot))
    if name in ("jump-start", "jump-middle", "jump-end"):
        return Command("jump-absolute", name.removeprefix("jump-"))
    if name in ("focus-errors", "focus-code", "focus-console"):
        return Command("focus-panel", name.removeprefix("focus-"))
    if name.startswith("read-prev-"):
        n = int(name.removeprefix("read-prev-"))
        if not 1 <= n <= 9:
            raise ValueError(f"read-prev count out of range in {name!r}")
        return Command("read-prev", n)
    raise ValueError(f"unknown command {name!r}")


class Keymap:
    def __init__(self, bindings: dict[KeyChord, Command], profile: str = "custom"):
        self.profile = profile
        self.bindings = bindings
        seen: dict[str, KeyChord] = {}
        for chord, command in bindings.items():
            if command.name in seen:
                raise ValueError(f"command {command.name} bound to both {seen[command.name]} and {chord}")
            seen[command.name] = chord

    @classmethod
    def parse(cls, text: str, profile: str = "custom") -> "Keymap":
        bindings: dict[KeyChord, Command] = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            chord_spec, _, command_name = line.partition("=")
            chord = KeyChord.of(chord_spec.strip())
            if chord in bindings:
                raise ValueError(f"chord {chord} bound twice")
            bindings[chord] = parse_command_name(command_name.strip())
        return cls(bindings, profile)

    @classmethod
    def load_profile(cls, profile: str) -> "Keymap":
        ref = resources.files("haci.data.keymaps").joinpath(f"{profile}.keymap")
        try:
            text = ref.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise ValueError(f"unknown keymap profile {profile!r}") from None
        return cls.parse(text, profile)

    def chord_for(self, command_name: str) -> KeyChord | None:
        for chord, command in self.bindings.items():
            if command.name == command_name:
                return chord
        return None

    def resolve(self, chord: KeyChord, focus: PanelId = PanelId.CODE) -> Optional[Command]:
        command = self.bindings.get(chord)
        if command is None:
            return None
        if command.action == "read-line" and focus == PanelId.ERRORS:
            return Command("read-focused-error")
        return command


def default_keymap() -> Keymap:
    return Keymap.load_profile("macos")


# Command names whose purpose is a read-out/feedback feature; metrics log
# them as feature-use rather than plain commands.
FEEDBACK_FEATURES = frozenset(
    {"read-line", "read-function", "error-direction", "read-focused-error", "read-prev"}
)

_PANELS = {"errors": PanelId.ERRORS, "code": PanelId.CODE, "console": PanelId.CONSOLE}


def apply_command(session: "Session", cmd: Command) -> list:
    """Run one command against the session; returns its SessionUpdates."""
    updates: list = []
    emit = session.emit_feedback

    if cmd.action == "toggle-echo":
        on = session.settings.toggle_echo()
        updates += emit([Speech(f"typing read-out {'on' if on else 'off'}")])
    elif cmd.action == "toggle-granularity":
        mode = session.settings.toggle_granularity()
        updates += emit([Speech(f"granularity {mode}")])
    elif cmd.action == "drop-marker":
        session.doc.drop_marker(int(cmd.arg))  # type: ignore[arg-type]
        updates += emit([Speech(f"marker {cmd.arg} set")])
    elif cmd.action == "jump-marker":
        try:
            nav = session.doc.jump_to_marker(int(cmd.arg))  # type: ignore[arg-type]
        except MarkerUnsetError:
            updates += emit([Speech(f"marker {cmd.arg} not set")])
        else:
            updates += session.navigation_feedback(nav)
    elif cmd.action == "jump-absolute":
        nav = session.doc.jump_absolute(str(cmd.arg))
        updates += session.navigation_feedback(nav)
    elif cmd.action == "execute":
        updates += session.run_program()
    elif cmd.action == "focus-panel":
        panel = _PANELS[str(cmd.arg)]
        if session.doc.focus != panel:
            session.doc.set_focus(panel)
            updates += emit([Speech(f"{panel.value} panel")])
    elif cmd.action == "read-line":
        text = session.render_current_line()
        updates += emit([Speech(text)])
    elif cmd.action == "read-prev":
        text = session.render_previous_lines(int(cmd.arg))  # type: ignore[arg-type]
        updates += emit([Speech(text)])
    elif cmd.action == "read-function":
        updates += emit([Speech(session.render_function_context())])
    elif cmd.action == "error-direction":
        try:
            payload = session.error_direction_payload()
        except NoErrorsError:
            updates += emit([Speech("no errors")])
        else:
            updates += emit([payload])
    elif cmd.action == "read-focused-error":
        diags = session.cached_diagnostics
        updates += emit([Speech(diags[0].describe() if diags else "no errors")])
    else:
        raise ValueError(f"unknown command action {cmd.action!r}")
    return updates
