// Session protocol: one JSON object per WebSocket text frame, both ways.

export interface Pos {
  line: number; // 1-based
  col: number; // 0-based
}

export type SessionMessage =
  | { seq: number; type: "hello"; client: string; task?: string }
  | { seq: number; type: "edit"; op: "insert"; pos: Pos; text: string }
  | { seq: number; type: "edit"; op: "delete"; from: Pos; to: Pos }
  | { seq: number; type: "cursor"; motion: string }
  | { seq: number; type: "cursor"; target: Pos }
  | { seq: number; type: "chord"; modifiers: string[]; key: string }
  | { seq: number; type: "save"; path?: string };

export type FeedbackPayload =
  | { kind: "speech"; text: string }
  | { kind: "sound"; cue: string }
  | {
      kind: "haptic";
      motor: number;
      motorName: string;
      pattern: "single-buzz" | "double-tap";
      intensity: number;
      durationMs: number;
    };

export interface FeedbackEvent {
  seq: number;
  trigger: number;
  payload: FeedbackPayload;
}

export type SessionUpdate =
  | { type: "session"; id: string }
  | { type: "feedback"; event: FeedbackEvent }
  | { type: "panel"; panel: "code" | "errors" | "console"; lines: string[] }
  | { type: "ack"; seq: number; cursor: Pos }
  | { type: "metrics"; snapshot: unknown }
  | { type: "protocol-error"; detail: string };

const UPDATE_TYPES = new Set(["session", "feedback", "panel", "ack", "metrics", "protocol-error"]);

export function parseUpdate(raw: string): SessionUpdate {
  const value: unknown = JSON.parse(raw);
  if (
    typeof value !== "object" ||
    value === null ||
    !UPDATE_TYPES.has((value as { type?: unknown }).type as string)
  ) {
    throw new Error(`unrecognized update: ${raw.slice(0, 120)}`);
  }
  return value as SessionUpdate;
}
