import { describe, expect, it } from "vitest";

import type { FeedbackEvent } from "../src/protocol.js";
import { FEEDBACK_HISTORY_LIMIT, GLOVE_IDLE_MS, UiState } from "../src/state.js";

function haptic(seq: number, motor = 3): FeedbackEvent {
  return {
    seq,
    trigger: seq,
    payload: {
      kind: "haptic",
      motor,
      motorName: "ring",
      pattern: "single-buzz",
      intensity: 200,
      durationMs: 200,
    },
  };
}

describe("document mirror", () => {
  it("applies single-line inserts like the server", () => {
    const state = new UiState();
    state.lines = ["zz"];
    state.applyInsert({ line: 1, col: 1 }, "a");
    expect(state.lines).toEqual(["zaz"]);
    expect(state.cursor).toEqual({ line: 1, col: 2 });
  });

  it("applies multi-line inserts like the server", () => {
    const state = new UiState();
    state.lines = ["zz"];
    state.applyInsert({ line: 1, col: 1 }, "a\nb");
    expect(state.lines).toEqual(["za", "bz"]);
    expect(state.cursor).toEqual({ line: 2, col: 1 });
  });

  it("applies cross-line deletes like the server", () => {
    const state = new UiState();
    state.lines = ["ab", "cd"];
    state.applyDelete({ line: 1, col: 1 }, { line: 2, col: 1 });
    expect(state.lines).toEqual(["ad"]);
    expect(state.cursor).toEqual({ line: 1, col: 1 });
  });

  it("clamps the cursor into bounds", () => {
    const state = new UiState();
    state.lines = ["abc"];
    state.cursor = { line: 9, col: 9 };
    state.clampCursor();
    expect(state.cursor).toEqual({ line: 1, col: 3 });
  });
});

describe("feedback history", () => {
  it("keeps only the last 50 events", () => {
    const state = new UiState();
    for (let seq = 1; seq <= 80; seq += 1) {
      state.recordFeedback(haptic(seq), seq);
    }
    expect(state.feedbackHistory).toHaveLength(FEEDBACK_HISTORY_LIMIT);
    expect(state.feedbackHistory[0]?.seq).toBe(31);
  });
});

describe("glove visual state", () => {
  it("stamps the fired motor and decays within a second", () => {
    const state = new UiState();
    state.recordFeedback(haptic(1, 3), 1000);
    expect(state.motorActive(3, 1050)).toBe(true);
    expect(state.motorActive(3, 1000 + GLOVE_IDLE_MS - 1)).toBe(true);
    expect(state.motorActive(3, 1000 + GLOVE_IDLE_MS)).toBe(false);
    expect(state.motorActive(2, 1050)).toBe(false);
  });

  it("tracks intensity and pattern per motor", () => {
    const state = new UiState();
    state.recordFeedback(haptic(1, 5), 0);
    expect(state.motors[5]?.intensity).toBe(200);
    expect(state.motors[5]?.pattern).toBe("single-buzz");
  });
});
