// Spawns one engine instance for the integration tests and tears it down.

import { spawn, type ChildProcess } from "node:child_process";

export const SERVER_PORT = 8655;
const BASE = `http://127.0.0.1:${SERVER_PORT}`;

let child: ChildProcess | null = null;

async function waitForReady(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${BASE}/api/dice-sets`);
      if (resp.ok) {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 250));
  }
  throw new Error(`engine did not come up on ${BASE}`);
}

export async function setup(): Promise<void> {
  const python = process.env.SCHUETTE_PYTHON ?? "python3";
  child = spawn(
    python,
    ["-m", "schuette.cli", "serve", "--host", "127.0.0.1", "--port", String(SERVER_PORT)],
    { stdio: "ignore" },
  );
  child.on("error", () => {
    child = null;
  });
  await waitForReady(20000);
}

export async function teardown(): Promise<void> {
  if (child && child.pid) {
    child.kill("SIGTERM");
  }
}
