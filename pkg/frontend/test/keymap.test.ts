import { describe, expect, it } from "vitest";

import {
  backspaceRange,
  bindingsFrom,
  chordToMessage,
  classifyKey,
  deleteForwardRange,
  normalizeChord,
} from "../src/keymap.js";

import { MACOS_BINDINGS } from "./fixtures.js";

function key(init: Partial<KeyboardEvent> & { key: string }) {
  return {
    key: init.key,
    ctrlKey: init.ctrlKey ?? false,
    altKey: init.altKey ?? false,
    metaKey: init.metaKey ?? false,
    shiftKey: init.shiftKey ?? false,
  };
}

describe("normalizeChord", () => {
  it("orders modifiers canonically and lowers the key", () => {
    expect(normalizeChord(key({ key: "S", ctrlKey: true, shiftKey: true }))).toBe("ctrl+shift+s");
    expect(normalizeChord(key({ key: "Enter", metaKey: true }))).toBe("meta+enter");
    expect(normalizeChord(key({ key: ",", altKey: true }))).toBe("alt+,");
  });
});

describe("classifyKey", () => {
  const bindings = bindingsFrom("macos", MACOS_BINDINGS);

  it("captures every documented chord", () => {
    for (const spec of Object.keys(MACOS_BINDINGS)) {
      const parts = spec.split("+");
      const k = parts.pop()!;
      const action = classifyKey(
        key({
          key: k === "enter" ? "Enter" : k,
          ctrlKey: parts.includes("ctrl"),
          altKey: parts.includes("alt"),
          metaKey: parts.includes("meta"),
          shiftKey: parts.includes("shift"),
        }),
        bindings,
      );
      expect(action).toEqual({ kind: "chord", spec });
    }
  });

  it("treats bare printables as typing", () => {
    expect(classifyKey(key({ key: "a" }), bindings)).toEqual({ kind: "insert", text: "a" });
    expect(classifyKey(key({ key: "{" }), bindings)).toEqual({ kind: "insert", text: "{" });
    expect(classifyKey(key({ key: "Enter" }), bindings)).toEqual({ kind: "insert", text: "\n" });
  });

  it("maps arrows and home/end to motions", () => {
    expect(classifyKey(key({ key: "ArrowDown" }), bindings)).toEqual({ kind: "motion", motion: "down" });
    expect(classifyKey(key({ key: "Home" }), bindings)).toEqual({ kind: "motion", motion: "line-start" });
  });

  it("passes through unbound command chords", () => {
    expect(classifyKey(key({ key: "z", ctrlKey: true }), bindings)).toEqual({ kind: "pass" });
  });

  it("turns a chord spec into the wire message", () => {
    expect(chordToMessage("ctrl+shift+s", 7)).toEqual({
      seq: 7,
      type: "chord",
      modifiers: ["ctrl", "shift"],
      key: "s",
    });
  });
});

describe("delete ranges", () => {
  it("backspace within a line", () => {
    expect(backspaceRange(["abc"], { line: 1, col: 2 })).toEqual({
      from: { line: 1, col: 1 },
      to: { line: 1, col: 2 },
    });
  });

  it("backspace at column zero joins lines", () => {
    expect(backspaceRange(["ab", "cd"], { line: 2, col: 0 })).toEqual({
      from: { line: 1, col: 2 },
      to: { line: 2, col: 0 },
    });
  });

  it("backspace at document start is a no-op", () => {
    expect(backspaceRange(["ab"], { line: 1, col: 0 })).toBeNull();
  });

  it("forward delete at line end joins with the next line", () => {
    expect(deleteForwardRange(["ab", "cd"], { line: 1, col: 2 })).toEqual({
      from: { line: 1, col: 2 },
      to: { line: 2, col: 0 },
    });
    expect(deleteForwardRange(["ab"], { line: 1, col: 2 })).toBeNull();
  });
});
