// Sound-cue playback from the server's plain-text manifest (id=filename
// per line). A cue that cannot load or play shows a warning badge
// instead of failing silently.

export class CuePlayer {
  private assets = new Map<string, string>(); // cue id -> asset url
  readonly missing = new Set<string>();
  readonly played: string[] = [];

  constructor(
    private readonly assetBase: string,
    private readonly onWarning: (cueId: string) => void,
  ) {}

  loadManifest(manifestText: string): void {
    for (const raw of manifestText.split("\n")) {
      const line = raw.trim();
      if (!line || line.startsWith("#")) continue;
      const eq = line.indexOf("=");
      if (eq <= 0) continue;
      this.assets.set(line.slice(0, eq), `${this.assetBase}/${line.slice(eq + 1)}`);
    }
  }

  async fetchManifest(baseUrl: string): Promise<void> {
    const resp = await fetch(`${baseUrl}/cues/manifest`);
    if (!resp.ok) throw new Error(`manifest fetch failed: ${resp.status}`);
    this.loadManifest(await resp.text());
  }

  play(cueId: string): void {
    this.played.push(cueId);
    const url = this.assets.get(cueId);
    if (url === undefined) {
      this.missing.add(cueId);
      this.onWarning(cueId);
      return;
    }
    try {
      const audio = new Audio(url);
      const result = audio.play();
      if (result && typeof result.catch === "function") {
        result.catch(() => this.onWarning(cueId));
      }
    } catch {
      this.onWarning(cueId);
    }
  }
}
