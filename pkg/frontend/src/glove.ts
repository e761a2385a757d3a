// Glove visualization: one pad per motor, lit while recently fired and
// decaying to idle within a second. The real glove hangs off the server's
// device link; this mirrors what it was told to do.

import { MOTOR_NAMES, UiState } from "./state.js";

export class GloveView {
  private pads: HTMLElement[] = [];

  constructor(
    private readonly root: HTMLElement,
    private readonly state: UiState,
    private readonly now: () => number = () => performance.now(),
  ) {
    for (const name of MOTOR_NAMES) {
      const pad = document.createElement("div");
      pad.className = "glove-motor idle";
      pad.dataset.motor = name;
      const label = document.createElement("span");
      label.textContent = name;
      pad.appendChild(label);
      this.root.appendChild(pad);
      this.pads.push(pad);
    }
  }

  render(): void {
    const nowMs = this.now();
    this.pads.forEach((pad, index) => {
      const motor = this.state.motors[index];
      const active = this.state.motorActive(index, nowMs);
      pad.classList.toggle("active", active);
      pad.classList.toggle("idle", !active);
      pad.classList.toggle("double-tap", active && motor?.pattern === "double-tap");
      pad.style.setProperty("--glove-intensity", active && motor ? String(motor.intensity / 255) : "0");
    });
  }

  start(intervalMs = 100): number {
    this.render();
    return setInterval(() => this.render(), intervalMs) as unknown as number;
  }
}
