import { describe, expect, it } from "vitest";

import { App, AppElements, HOLD_REPEAT_MS } from "../src/app.js";
import { bindingsFrom } from "../src/keymap.js";
import type { SocketLike } from "../src/client.js";
import { MACOS_BINDINGS } from "./fixtures.js";

class FakeSocket implements SocketLike {
  sent: string[] = [];
  onmessage: ((ev: { data: unknown }) => void) | null = null;
  onopen: ((ev: unknown) => void) | null = null;
  onclose: ((ev: unknown) => void) | null = null;

  send(data: string): void {
    this.sent.push(data);
  }

  close(): void {}

  pushUpdate(update: unknown): void {
    this.onmessage?.({ data: JSON.stringify(update) });
  }
}

function makeElements(): AppElements {
  const make = () => document.createElement("div");
  return {
    code: make(),
    errors: make(),
    console: make(),
    codeWrap: make(),
    errorsWrap: make(),
    consoleWrap: make(),
    gloveRoot: make(),
    captions: make(),
    debugStrip: make(),
    warningBadge: make(),
    status: make(),
  };
}

function makeApp(now: () => number): { app: App; socket: FakeSocket } {
  const socket = new FakeSocket();
  const app = new App(socket, bindingsFrom("macos", MACOS_BINDINGS), makeElements(), "cues", now);
  return { app, socket };
}

function pressCtrlE(app: App): void {
  app.handleKeydown(new KeyboardEvent("keydown", { key: "e", ctrlKey: true, cancelable: true }));
}

describe("error-direction hold throttling", () => {
  it("repeats at most once per second while held", () => {
    let clock = 0;
    const { app, socket } = makeApp(() => clock);
    for (let i = 0; i < 20; i += 1) {
      pressCtrlE(app);
      clock += 50; // OS auto-repeat is much faster than 1 Hz
    }
    expect(socket.sent).toHaveLength(1);
    clock += HOLD_REPEAT_MS;
    pressCtrlE(app);
    expect(socket.sent).toHaveLength(2);
  });

  it("does not throttle other chords", () => {
    const { app, socket } = makeApp(() => 0);
    for (let i = 0; i < 3; i += 1) {
      app.handleKeydown(new KeyboardEvent("keydown", { key: "g", ctrlKey: true, cancelable: true }));
    }
    expect(socket.sent).toHaveLength(3);
  });
});

describe("document mutation discipline", () => {
  it("mutates the mirror only alongside outgoing edit messages", () => {
    const { app, socket } = makeApp(() => 0);
    app.handleKeydown(new KeyboardEvent("keydown", { key: "x", cancelable: true }));
    expect(app.state.lines).toEqual(["x"]);
    const messages = socket.sent.map((s) => JSON.parse(s) as { type: string });
    expect(messages.filter((m) => m.type === "edit")).toHaveLength(1);
  });

  it("adopts the server's code panel and cursor on resync", () => {
    const { app, socket } = makeApp(() => 0);
    socket.pushUpdate({ type: "panel", panel: "code", lines: ["let a = 1;", "a;"] });
    socket.pushUpdate({ type: "ack", seq: 1, cursor: { line: 2, col: 1 } });
    expect(app.state.lines).toEqual(["let a = 1;", "a;"]);
    expect(app.state.cursor).toEqual({ line: 2, col: 1 });
  });

  it("raises the warning badge when a cue asset is unknown", () => {
    const { app, socket } = makeApp(() => 0);
    socket.pushUpdate({
      type: "feedback",
      event: { seq: 1, trigger: 1, payload: { kind: "sound", cue: "never-heard-of-it" } },
    });
    expect(app.els.warningBadge.classList.contains("visible")).toBe(true);
  });
});
