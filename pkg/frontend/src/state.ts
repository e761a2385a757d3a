// Client-side mirror of the session: document lines, cursor, focus, a
// short feedback history for the debug strip, and glove visual state.
// The server is the source of truth; edits go out as messages and the
// ack's cursor is authoritative.

import type { FeedbackEvent, Pos } from "./protocol.js";

export const FEEDBACK_HISTORY_LIMIT = 50;
export const MOTOR_NAMES = ["thumb", "index", "middle", "ring", "pinky", "palm-center"] as const;
export const GLOVE_IDLE_MS = 1000;

export interface MotorVisual {
  lastFiredMs: number; // -Infinity when never fired
  intensity: number;
  pattern: string;
}

export class UiState {
  lines: string[] = [""];
  cursor: Pos = { line: 1, col: 0 };
  focus: "code" | "errors" | "console" = "code";
  errorLines: string[] = [];
  consoleLines: string[] = [];
  feedbackHistory: FeedbackEvent[] = [];
  motors: MotorVisual[] = MOTOR_NAMES.map(() => ({
    lastFiredMs: -Infinity,
    intensity: 0,
    pattern: "",
  }));

  lineLength(line: number): number {
    return (this.lines[line - 1] ?? "").length;
  }

  clampCursor(): void {
    const line = Math.min(Math.max(this.cursor.line, 1), this.lines.length);
    const col = Math.min(Math.max(this.cursor.col, 0), this.lineLength(line));
    this.cursor = { line, col };
  }

  // Optimistic local application of an insert the client just sent.
  applyInsert(pos: Pos, text: string): void {
    const parts = text.split("\n");
    const line = this.lines[pos.line - 1] ?? "";
    const head = line.slice(0, pos.col);
    const tail = line.slice(pos.col);
    if (parts.length === 1) {
      this.lines[pos.line - 1] = head + parts[0] + tail;
      this.cursor = { line: pos.line, col: pos.col + (parts[0] ?? "").length };
    } else {
      const spliced = [head + parts[0], ...parts.slice(1, -1), parts[parts.length - 1] + tail];
      this.lines.splice(pos.line - 1, 1, ...spliced);
      this.cursor = { line: pos.line + parts.length - 1, col: (parts[parts.length - 1] ?? "").length };
    }
  }

  applyDelete(from: Pos, to: Pos): void {
    const first = this.lines[from.line - 1] ?? "";
    const last = this.lines[to.line - 1] ?? "";
    this.lines.splice(from.line - 1, to.line - from.line + 1, first.slice(0, from.col) + last.slice(to.col));
    this.cursor = { ...from };
  }

  recordFeedback(event: FeedbackEvent, nowMs: number): void {
    this.feedbackHistory.push(event);
    if (this.feedbackHistory.length > FEEDBACK_HISTORY_LIMIT) {
      this.feedbackHistory.shift();
    }
    if (event.payload.kind === "haptic") {
      const motor = this.motors[event.payload.motor];
      if (motor) {
        motor.lastFiredMs = nowMs;
        motor.intensity = event.payload.intensity;
        motor.pattern = event.payload.pattern;
      }
    }
  }

  motorActive(index: number, nowMs: number): boolean {
    const motor = this.motors[index];
    return motor !== undefined && nowMs - motor.lastFiredMs < GLOVE_IDLE_MS;
  }
}
