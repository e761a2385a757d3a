// Three-panel rendering: code with a visible cursor, errors, console.

import { UiState } from "./state.js";

export interface PanelElements {
  code: HTMLElement;
  errors: HTMLElement;
  console: HTMLElement;
  codeWrap: HTMLElement;
  errorsWrap: HTMLElement;
  consoleWrap: HTMLElement;
}

function escapeHtml(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export class EditorView {
  constructor(
    private readonly panels: PanelElements,
    private readonly state: UiState,
  ) {}

  render(): void {
    const { lines, cursor } = this.state;
    const rows = lines.map((line, index) => {
      const lineNo = index + 1;
      let html = escapeHtml(line);
      if (lineNo === cursor.line) {
        const head = escapeHtml(line.slice(0, cursor.col));
        const under = line.slice(cursor.col, cursor.col + 1);
        const tail = escapeHtml(line.slice(cursor.col + 1));
        html = `${head}<span class="cursor">${escapeHtml(under || " ")}</span>${tail}`;
      }
      const current = lineNo === cursor.line ? " current" : "";
      return `<div class="code-line${current}"><span class="lineno">${lineNo}</span>${html}</div>`;
    });
    this.panels.code.innerHTML = rows.join("");

    this.panels.errors.textContent = this.state.errorLines.length
      ? this.state.errorLines.join("\n")
      : "no errors";
    this.panels.console.textContent = this.state.consoleLines.join("\n");

    for (const [name, el] of [
      ["code", this.panels.codeWrap],
      ["errors", this.panels.errorsWrap],
      ["console", this.panels.consoleWrap],
    ] as const) {
      el.classList.toggle("focused", this.state.focus === name);
    }
  }
}
