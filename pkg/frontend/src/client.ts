// Session socket: sends numbered messages, dispatches updates, and keeps
// the mirror honest (acks carry the authoritative cursor; reconnects
// resync the whole document via hello's code panel snapshot).

import type { FeedbackEvent, Pos, SessionMessage, SessionUpdate } from "./protocol.js";
import { parseUpdate } from "./protocol.js";
import { UiState } from "./state.js";

export interface SocketLike {
  send(data: string): void;
  close(): void;
  onmessage: ((ev: { data: unknown }) => void) | null;
  onopen: ((ev: unknown) => void) | null;
  onclose: ((ev: unknown) => void) | null;
}

export interface ClientHooks {
  onFeedback?: (event: FeedbackEvent, receivedAtMs: number) => void;
  onPanels?: () => void;
  onProtocolError?: (detail: string) => void;
  onSession?: (id: string) => void;
  now?: () => number;
}

export class SessionClient {
  sessionId: string | null = null;
  private seq = 0;
  readonly state: UiState;
  private readonly now: () => number;

  constructor(
    private readonly socket: SocketLike,
    state?: UiState,
    private readonly hooks: ClientHooks = {},
  ) {
    this.state = state ?? new UiState();
    this.now = hooks.now ?? (() => Date.now());
    socket.onmessage = (ev) => this.receive(String(ev.data));
  }

  nextSeq(): number {
    this.seq += 1;
    return this.seq;
  }

  send(message: SessionMessage): void {
    this.socket.send(JSON.stringify(message));
  }

  hello(client: string, task?: string): void {
    const msg: SessionMessage = { seq: this.nextSeq(), type: "hello", client };
    if (task !== undefined) (msg as { task?: string }).task = task;
    this.send(msg);
  }

  // The document mutates only through edit messages (applied optimistically
  // here, confirmed by the server's ack).
  insert(text: string): void {
    const pos: Pos = { ...this.state.cursor };
    this.send({ seq: this.nextSeq(), type: "edit", op: "insert", pos, text });
    this.state.applyInsert(pos, text);
  }

  deleteRange(from: Pos, to: Pos): void {
    this.send({ seq: this.nextSeq(), type: "edit", op: "delete", from, to });
    this.state.applyDelete(from, to);
  }

  motion(motion: string): void {
    this.send({ seq: this.nextSeq(), type: "cursor", motion });
  }

  chord(modifiers: string[], key: string): void {
    this.send({ seq: this.nextSeq(), type: "chord", modifiers, key });
  }

  save(): void {
    this.send({ seq: this.nextSeq(), type: "save" });
  }

  private receive(raw: string): void {
    let update: SessionUpdate;
    try {
      update = parseUpdate(raw);
    } catch {
      this.hooks.onProtocolError?.(`bad update from server: ${raw.slice(0, 80)}`);
      return;
    }
    switch (update.type) {
      case "session":
        this.sessionId = update.id;
        this.hooks.onSession?.(update.id);
        break;
      case "ack":
        this.state.cursor = { ...update.cursor };
        this.state.clampCursor();
        this.hooks.onPanels?.();
        break;
      case "panel":
        if (update.panel === "code") {
          this.state.lines = update.lines.length ? [...update.lines] : [""];
          this.state.clampCursor();
        } else if (update.panel === "errors") {
          this.state.errorLines = [...update.lines];
        } else {
          this.state.consoleLines = [...update.lines];
        }
        this.hooks.onPanels?.();
        break;
      case "feedback": {
        const receivedAt = this.now();
        this.state.recordFeedback(update.event, receivedAt);
        this.hooks.onFeedback?.(update.event, receivedAt);
        break;
      }
      case "protocol-error":
        this.hooks.onProtocolError?.(update.detail);
        break;
      case "metrics":
        break;
    }
  }
}

export function wsUrl(baseUrl: string): string {
  return baseUrl.replace(/^http/, "ws") + "/session";
}
