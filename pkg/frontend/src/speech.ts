// Speaks feedback text in event-sequence order. The synthesis engine is
// optional (tests, some browsers); captions always render so sighted
// experimenters can follow along.

export interface SpeechSink {
  caption(text: string): void;
}

export class SpeechQueue {
  private queue: { seq: number; text: string }[] = [];
  private speaking = false;
  private lastSeq = -1;
  readonly spoken: string[] = []; // in speak order, for tests and the debug strip

  constructor(private readonly sink: SpeechSink) {}

  enqueue(seq: number, text: string): void {
    if (seq <= this.lastSeq) {
      // the server never reorders; a stale event means a reconnect raced
      return;
    }
    this.lastSeq = seq;
    this.queue.push({ seq, text });
    this.pump();
  }

  private pump(): void {
    if (this.speaking) return;
    const next = this.queue.shift();
    if (!next) return;
    this.speaking = true;
    this.spoken.push(next.text);
    this.sink.caption(next.text);
    const synth = globalThis.speechSynthesis;
    if (synth && typeof SpeechSynthesisUtterance !== "undefined") {
      const utterance = new SpeechSynthesisUtterance(next.text);
      const done = () => {
        this.speaking = false;
        this.pump();
      };
      utterance.onend = done;
      utterance.onerror = done;
      try {
        synth.speak(utterance);
        return;
      } catch {
        // fall through to caption-only pacing
      }
    }
    this.speaking = false;
    this.pump();
  }
}
