// Boots the real HTTP service once for the whole test run: trains a model
// from the bundled corpus, starts `matselect serve`, and waits for
// /api/health. The UI tests exercise the live API, not a mock.

import { execFile, spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join, resolve } from "node:path";
import { fileURLToPath } from "node:url";
import { promisify } from "node:util";

export const PORT = 8931;
export const BASE_URL = `http://127.0.0.1:${PORT}`;

const execFileAsync = promisify(execFile);

const here = fileURLToPath(new URL(".", import.meta.url));
const repoRoot = resolve(here, "..", "..");
const dataCsv = join(repoRoot, "src", "matselect", "data", "materials.csv");

let server: ChildProcess | undefined;
let workDir: string | undefined;

async function waitForHealth(): Promise<void> {
  const deadline = Date.now() + 60_000;
  let lastError: unknown;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${BASE_URL}/api/health`);
      if (resp.ok) return;
    } catch (error) {
      lastError = error;
    }
    await new Promise((r) => setTimeout(r, 250));
  }
  throw new Error(`service did not come up on ${BASE_URL}: ${String(lastError)}`);
}

export async function setup(): Promise<void> {
  workDir = mkdtempSync(join(tmpdir(), "matselect-ui-"));
  const modelPath = join(workDir, "model.json");
  await execFileAsync("python3", [
    "-m", "matselect.cli", "train", "--data", dataCsv, "--out", modelPath,
  ]);
  server = spawn(
    "python3",
    ["-m", "matselect.cli", "serve", "--model", modelPath, "--data", dataCsv,
     "--port", String(PORT), "--host", "127.0.0.1"],
    { stdio: "ignore" },
  );
  server.on("exit", (code) => {
    if (code !== null && code !== 0) {
      console.error(`matselect serve exited with code ${code}`);
    }
  });
  await waitForHealth();
}

export async function teardown(): Promise<void> {
  server?.kill("SIGTERM");
  if (workDir) rmSync(workDir, { recursive: true, force: true });
}
