// Chord capture: normalizes KeyboardEvents, decides what is a bound
// chord (forwarded as a chord message, browser default suppressed),
// what is typing (edit messages), and what is cursor motion.

import type { Pos, SessionMessage } from "./protocol.js";

export interface ChordBindings {
  profile: string;
  chords: Set<string>; // normalized "ctrl+shift+s" specs
  commands: Map<string, string>; // chord spec -> server command name
}

const MODIFIER_ORDER = ["ctrl", "alt", "meta", "shift"] as const;

export function normalizeChord(ev: Pick<KeyboardEvent, "key" | "ctrlKey" | "altKey" | "metaKey" | "shiftKey">): string {
  const mods: string[] = [];
  if (ev.ctrlKey) mods.push("ctrl");
  if (ev.altKey) mods.push("alt");
  if (ev.metaKey) mods.push("meta");
  if (ev.shiftKey) mods.push("shift");
  mods.sort((a, b) => MODIFIER_ORDER.indexOf(a as never) - MODIFIER_ORDER.indexOf(b as never));
  return [...mods, ev.key.toLowerCase()].join("+");
}

export function chordToMessage(spec: string, seq: number): SessionMessage {
  const parts = spec.split("+");
  const key = parts.pop() ?? "";
  return { seq, type: "chord", modifiers: parts, key };
}

const MOTION_KEYS: Record<string, string> = {
  arrowup: "up",
  arrowdown: "down",
  arrowleft: "left",
  arrowright: "right",
  home: "line-start",
  end: "line-end",
};

export type KeyAction =
  | { kind: "chord"; spec: string }
  | { kind: "insert"; text: string }
  | { kind: "backspace" }
  | { kind: "delete-forward" }
  | { kind: "motion"; motion: string }
  | { kind: "pass" };

// Decide what a keydown means. Bound chords win (captured before the
// browser default); bare printable keys type; arrows/home/end move.
export function classifyKey(
  ev: Pick<KeyboardEvent, "key" | "ctrlKey" | "altKey" | "metaKey" | "shiftKey">,
  bindings: ChordBindings,
): KeyAction {
  const spec = normalizeChord(ev);
  if (bindings.chords.has(spec)) {
    return { kind: "chord", spec };
  }
  const hasCommandModifier = ev.ctrlKey || ev.altKey || ev.metaKey;
  const key = ev.key;
  const lowered = key.toLowerCase();
  if (!hasCommandModifier) {
    if (lowered in MOTION_KEYS) return { kind: "motion", motion: MOTION_KEYS[lowered]! };
    if (key === "Enter") return { kind: "insert", text: "\n" };
    if (key === "Tab") return { kind: "insert", text: "    " };
    if (key === "Backspace") return { kind: "backspace" };
    if (key === "Delete") return { kind: "delete-forward" };
    if (key.length === 1) return { kind: "insert", text: key };
  }
  return { kind: "pass" };
}

// Backspace wants the range just before the cursor (joining lines at col 0).
export function backspaceRange(lines: string[], cursor: Pos): { from: Pos; to: Pos } | null {
  if (cursor.col > 0) {
    return { from: { line: cursor.line, col: cursor.col - 1 }, to: { ...cursor } };
  }
  if (cursor.line > 1) {
    const prevLen = (lines[cursor.line - 2] ?? "").length;
    return { from: { line: cursor.line - 1, col: prevLen }, to: { line: cursor.line, col: 0 } };
  }
  return null;
}

export function deleteForwardRange(lines: string[], cursor: Pos): { from: Pos; to: Pos } | null {
  const lineLen = (lines[cursor.line - 1] ?? "").length;
  if (cursor.col < lineLen) {
    return { from: { ...cursor }, to: { line: cursor.line, col: cursor.col + 1 } };
  }
  if (cursor.line < lines.length) {
    return { from: { ...cursor }, to: { line: cursor.line + 1, col: 0 } };
  }
  return null;
}

export function bindingsFrom(profile: string, bindings: Record<string, string>): ChordBindings {
  return {
    profile,
    chords: new Set(Object.keys(bindings)),
    commands: new Map(Object.entries(bindings)),
  };
}

export async function fetchBindings(baseUrl: string): Promise<ChordBindings> {
  const resp = await fetch(`${baseUrl}/keymap`);
  if (!resp.ok) {
    throw new Error(`keymap fetch failed: ${resp.status}`);
  }
  const body = (await resp.json()) as { profile: string; bindings: Record<string, string> };
  return bindingsFrom(body.profile, body.bindings);
}
