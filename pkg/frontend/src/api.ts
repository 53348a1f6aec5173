// Thin typed client for the serve API.  Base URL is empty when the UI is
// served by the engine itself; tests point it at a spawned instance.

import type {
  AdviseResponse,
  CatalogEntry,
  DiceSetDoc,
  SimulateResponse,
} from "./types.js";

export class ApiClient {
  constructor(private base: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const resp = await fetch(`${this.base}${path}`);
    if (!resp.ok) {
      throw new Error(`GET ${path} failed: ${resp.status}`);
    }
    return (await resp.json()) as T;
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const resp = await fetch(`${this.base}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) {
      let detail = `${resp.status}`;
      try {
        const payload = (await resp.json()) as { detail?: string };
        if (payload.detail) {
          detail = `${resp.status}: ${payload.detail}`;
        }
      } catch {
        // keep the bare status
      }
      throw new Error(`POST ${path} failed: ${detail}`);
    }
    return (await resp.json()) as T;
  }

  async catalog(): Promise<CatalogEntry[]> {
    const payload = await this.get<{ sets: CatalogEntry[] }>("/api/dice-sets");
    return payload.sets;
  }

  diceSet(name: string): Promise<DiceSetDoc> {
    return this.get<DiceSetDoc>(`/api/dice-sets/${encodeURIComponent(name)}`);
  }

  advise(set: string, opponents: string[], m: number): Promise<AdviseResponse> {
    return this.post<AdviseResponse>("/api/advise", { set, opponents, m });
  }

  simulate(
    set: string,
    a: string,
    b: string,
    r: number,
    trials: number,
    seed: number,
  ): Promise<SimulateResponse> {
    return this.post<SimulateResponse>("/api/simulate", { set, a, b, r, trials, seed });
  }
}
