// Browser entry point: connect to the session service and wire the page.

import { App, AppElements } from "./app.js";
import { fetchBindings } from "./keymap.js";
import { wsUrl } from "./client.js";

function el(id: string): HTMLElement {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found;
}

async function boot(): Promise<void> {
  const baseUrl = window.location.origin;
  const els: AppElements = {
    code: el("code-panel"),
    errors: el("errors-panel"),
    console: el("console-panel"),
    codeWrap: el("code-wrap"),
    errorsWrap: el("errors-wrap"),
    consoleWrap: el("console-wrap"),
    gloveRoot: el("glove"),
    captions: el("captions"),
    debugStrip: el("debug-strip"),
    warningBadge: el("warning-badge"),
    status: el("status"),
  };
  const bindings = await fetchBindings(baseUrl);
  const socket = new WebSocket(wsUrl(baseUrl));
  const app = new App(socket as never, bindings, els, "cues");
  await app.cues.fetchManifest(baseUrl);

  socket.onopen = () => app.start();
  socket.onclose = () => {
    els.status.textContent = "disconnected, retrying in 2s";
    setTimeout(boot, 2000); // reconnect resyncs the mirror via hello
  };
  document.addEventListener("keydown", (ev) => app.handleKeydown(ev));
  el("chord-help").textContent =
    `${bindings.profile} keymap; if the browser shadows a chord, restart the server with --keymap portable`;
}

boot().catch((err) => {
  document.body.textContent = `failed to start: ${err}`;
});
