// Application wiring: key events in, feedback out. Kept separate from
// main.ts so tests can drive a full app against a real server socket.

import { CuePlayer } from "./audio.js";
import { SessionClient, SocketLike } from "./client.js";
import { EditorView, PanelElements } from "./editor.js";
import { GloveView } from "./glove.js";
import {
  ChordBindings,
  backspaceRange,
  chordToMessage,
  classifyKey,
  deleteForwardRange,
} from "./keymap.js";
import type { FeedbackEvent } from "./protocol.js";
import { SpeechQueue } from "./speech.js";
import { UiState } from "./state.js";

export interface AppElements extends PanelElements {
  gloveRoot: HTMLElement;
  captions: HTMLElement;
  debugStrip: HTMLElement;
  warningBadge: HTMLElement;
  status: HTMLElement;
}

// Holding the error-direction chord repeats it at most once a second,
// whatever the OS key-repeat rate is.
export const HOLD_REPEAT_MS = 1000;

export class App {
  readonly state: UiState;
  readonly client: SessionClient;
  readonly speech: SpeechQueue;
  readonly cues: CuePlayer;
  readonly editor: EditorView;
  readonly glove: GloveView;
  lastHapticRenderDelayMs = -1;
  private lastErrorDirectionMs = -Infinity;

  constructor(
    socket: SocketLike,
    readonly bindings: ChordBindings,
    readonly els: AppElements,
    assetBase = "cues",
    private readonly now: () => number = () => performance.now(),
  ) {
    this.state = new UiState();
    this.speech = new SpeechQueue({
      caption: (text) => {
        this.els.captions.textContent = text;
      },
    });
    this.cues = new CuePlayer(assetBase, () => this.showWarning());
    this.editor = new EditorView(els, this.state);
    this.glove = new GloveView(els.gloveRoot, this.state, this.now);
    this.client = new SessionClient(socket, this.state, {
      now: this.now,
      onFeedback: (event, receivedAt) => this.presentFeedback(event, receivedAt),
      onPanels: () => this.editor.render(),
      onProtocolError: (detail) => {
        this.els.status.textContent = `protocol error: ${detail}`;
      },
      onSession: (id) => {
        this.els.status.textContent = `session ${id} (${this.bindings.profile} keymap)`;
      },
    });
  }

  presentFeedback(event: FeedbackEvent, receivedAtMs: number): void {
    const payload = event.payload;
    if (payload.kind === "speech") {
      this.speech.enqueue(event.seq, payload.text);
    } else if (payload.kind === "sound") {
      this.cues.play(payload.cue);
    } else {
      // state was already stamped by the client; paint the glove now
      this.glove.render();
      this.lastHapticRenderDelayMs = this.now() - receivedAtMs;
    }
    const entry = document.createElement("div");
    entry.textContent = `#${event.seq} ${payload.kind}: ${
      payload.kind === "speech" ? payload.text : payload.kind === "sound" ? payload.cue : payload.motorName
    }`;
    this.els.debugStrip.prepend(entry);
    while (this.els.debugStrip.childElementCount > 50) {
      this.els.debugStrip.lastElementChild?.remove();
    }
  }

  showWarning(): void {
    this.els.warningBadge.classList.add("visible");
  }

  handleKeydown(ev: KeyboardEvent): boolean {
    const action = classifyKey(ev, this.bindings);
    if (action.kind === "pass") {
      return false;
    }
    ev.preventDefault?.();
    switch (action.kind) {
      case "chord": {
        const command = this.bindings.commands.get(action.spec);
        if (command === "error-direction") {
          const nowMs = this.now();
          if (nowMs - this.lastErrorDirectionMs < HOLD_REPEAT_MS) {
            break;
          }
          this.lastErrorDirectionMs = nowMs;
        }
        this.client.send(chordToMessage(action.spec, this.client.nextSeq()));
        if (command?.startsWith("focus-")) {
          this.state.focus = command.slice("focus-".length) as UiState["focus"];
        }
        break;
      }
      case "insert":
        this.client.insert(action.text);
        break;
      case "backspace": {
        const range = backspaceRange(this.state.lines, this.state.cursor);
        if (range) this.client.deleteRange(range.from, range.to);
        break;
      }
      case "delete-forward": {
        const range = deleteForwardRange(this.state.lines, this.state.cursor);
        if (range) this.client.deleteRange(range.from, range.to);
        break;
      }
      case "motion":
        this.client.motion(action.motion);
        break;
    }
    this.editor.render();
    return true;
  }

  start(): void {
    this.client.hello("haci-ui");
    this.editor.render();
    this.glove.start();
  }
}
