import pytest

from haci.dispatch import Command, KeyChord, Keymap, default_keymap, parse_command_name
from haci.document import PanelId

# Documented bindings, all sixteen chord commands plus the numbered read-outs.
TABLE_BINDINGS = {
    "ctrl+shift+s": "toggle-echo",
    "ctrl+b": "toggle-granularity",
    "ctrl+,": "drop-marker-1",
    "alt+,": "jump-marker-1",
    "ctrl+.": "drop-marker-2",
    "alt+.": "jump-marker-2",
    "alt+1": "jump-start",
    "alt+2": "jump-middle",
    "alt+3": "jump-end",
    "meta+enter": "execute",
    "meta+i": "focus-errors",
    "meta+j": "focus-code",
    "meta+k": "focus-console",
    "ctrl+g": "read-line",
    "ctrl+v": "read-function",
    "ctrl+e": "error-direction",
}


class TestKeymap:
    def test_every_documented_chord_resolves(self):
        km = default_keymap()
        for chord_spec, command_name in TABLE_BINDINGS.items():
            command = km.resolve(KeyChord.of(chord_spec))
            assert command is not None, chord_spec
            assert command.name == command_name

    def test_numbered_read_prev_bindings(self):
        km = default_keymap()
        for n in range(1, 10):
            command = km.resolve(KeyChord.of(f"ctrl+{n}"))
            assert command == Command("read-prev", n)

    def test_injective(self):
        km = default_keymap()
        names = [c.name for c in km.bindings.values()]
        assert len(names) == len(set(names))

    def test_unbound_chord_is_none(self):
        assert default_keymap().resolve(KeyChord.of("ctrl+z")) is None

    def test_read_focused_error_contextual_on_errors_panel(self):
        km = default_keymap()
        chord = KeyChord.of("ctrl+g")
        assert km.resolve(chord, PanelId.CODE) == Command("read-line")
        assert km.resolve(chord, PanelId.ERRORS) == Command("read-focused-error")
        assert km.resolve(chord, PanelId.CONSOLE) == Command("read-line")

    def test_portable_profile_folds_meta_into_ctrl(self):
        km = Keymap.load_profile("portable")
        assert km.resolve(KeyChord.of("ctrl+enter")) == Command("execute")
        assert km.resolve(KeyChord.of("ctrl+i")) == Command("focus-panel", "errors")
        assert km.resolve(KeyChord.of("meta+enter")) is None
        # the shared bindings did not move
        assert km.resolve(KeyChord.of("ctrl+e")) == Command("error-direction")

    def test_unknown_profile(self):
        with pytest.raises(ValueError):
            Keymap.load_profile("dvorak-haters")

    def test_duplicate_chord_rejected(self):
        with pytest.raises(ValueError):
            Keymap.parse("ctrl+g=read-line\nctrl+g=execute\n")

    def test_duplicate_command_rejected(self):
        with pytest.raises(ValueError):
            Keymap.parse("ctrl+g=read-line\nctrl+h=read-line\n")

    def test_comments_and_blanks_ignored(self):
        km = Keymap.parse("# note\n\nctrl+g=read-line\n")
        assert len(km.bindings) == 1


class TestCommandNames:
    def test_round_trip(self):
        names = [
            "toggle-echo",
            "toggle-granularity",
            "drop-marker-1",
            "drop-marker-2",
            "jump-marker-1",
            "jump-marker-2",
            "jump-start",
            "jump-middle",
            "jump-end",
            "execute",
            "focus-errors",
            "focus-code",
            "focus-console",
            "read-line",
            "read-prev-7",
            "read-function",
            "error-direction",
            "read-focused-error",
        ]
        for name in names:
            assert parse_command_name(name).name == name

    def test_bad_names(self):
        for bad in ("read-prev-0", "read-prev-10", "drop-marker-3", "frobnicate"):
            with pytest.raises(ValueError):
                parse_command_name(bad)


class TestChordParsing:
    def test_modifier_order_normalized(self):
        assert KeyChord.of("shift+ctrl+s") == KeyChord.of("ctrl+shift+s")
        assert str(KeyChord.of("shift+ctrl+s")) == "ctrl+shift+s"

    def test_case_insensitive(self):
        assert KeyChord.of("Ctrl+G") == KeyChord.of("ctrl+g")

    def test_unknown_modifier(self):
        with pytest.raises(ValueError):
            KeyChord.of("hyper+x")
