// Mirrors the server's macos profile (the integration suite fetches it live).
export const MACOS_BINDINGS: Record<string, string> = {
  "ctrl+shift+s": "toggle-echo",
  "ctrl+b": "toggle-granularity",
  "ctrl+,": "drop-marker-1",
  "alt+,": "jump-marker-1",
  "ctrl+.": "drop-marker-2",
  "alt+.": "jump-marker-2",
  "alt+1": "jump-start",
  "alt+2": "jump-middle",
  "alt+3": "jump-end",
  "meta+enter": "execute",
  "meta+i": "focus-errors",
  "meta+j": "focus-code",
  "meta+k": "focus-console",
  "ctrl+g": "read-line",
  "ctrl+1": "read-prev-1",
  "ctrl+2": "read-prev-2",
  "ctrl+3": "read-prev-3",
  "ctrl+4": "read-prev-4",
  "ctrl+5": "read-prev-5",
  "ctrl+6": "read-prev-6",
  "ctrl+7": "read-prev-7",
  "ctrl+8": "read-prev-8",
  "ctrl+9": "read-prev-9",
  "ctrl+v": "read-function",
  "ctrl+e": "error-direction",
};
