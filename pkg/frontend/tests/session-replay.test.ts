/** End-to-end acceptance: 50 scripted accept/reject actions against the
 * real backend, then byte-for-byte comparison of the export with (a) the
 * UI's own projection and (b) a fresh backend process replaying the same
 * session log.
 */

import { spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { LexkitClient, type Decision } from "../src/api.js";
import {
  exportAnnotationsCsv, exportWordlistText, groupByStatus, projectSession,
  tally,
} from "../src/state.js";

const HERE = dirname(fileURLToPath(import.meta.url));
const PORT = 9100 + (process.pid % 700);
const BASE = `http://127.0.0.1:${PORT}`;
const EDGES = join(HERE, "..", "..", "sample_data", "synonyms.tsv");

let sessionsDir: string;
let backend: ChildProcess | null = null;

function startBackend(): ChildProcess {
  return spawn("python3", [
    "-m", "lexkit.cli", "serve",
    "--edges", EDGES,
    "--sessions", sessionsDir,
    "--port", String(PORT),
  ], { stdio: ["ignore", "pipe", "pipe"] });
}

async function waitForBackend(timeoutMs = 20000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/methods`);
      if (response.ok) return;
    } catch {
      /* not up yet */
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error("backend did not come up");
}

async function stopBackend(): Promise<void> {
  if (!backend) return;
  const proc = backend;
  backend = null;
  proc.kill("SIGTERM");
  await new Promise((resolve) => {
    proc.once("exit", resolve);
    setTimeout(resolve, 3000);
  });
}

/** Deterministic tiny PRNG so the 50-action script is reproducible. */
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

beforeAll(async () => {
  sessionsDir = mkdtempSync(join(tmpdir(), "lexkit-sessions-"));
  backend = startBackend();
  await waitForBackend();
}, 30000);

afterAll(async () => {
  await stopBackend();
});

describe("scripted curation session", () => {
  it("50 decisions, export equals projection and survives a restart",
     async () => {
    const client = new LexkitClient(BASE);

    const expansion = await client.expand({
      seeds: ["happy", "sad", "dog", "cold"],
      method: "synonym",
    });
    expect(expansion.expandable).toBe(true);
    expect(expansion.expanded.length).toBeGreaterThan(6);

    // 50 scripted accept/reject actions (revisits flip earlier decisions)
    const rand = mulberry32(20240817);
    const words = expansion.expanded;
    const script: Array<[string, Decision]> = [];
    for (let i = 0; i < 50; i += 1) {
      const word = words[Math.floor(rand() * words.length)]!;
      const decision: Decision = rand() < 0.5 ? "accept" : "reject";
      script.push([word, decision]);
    }
    for (const [word, decision] of script) {
      const ack = await client.decide(expansion.session_id, word, decision);
      expect(ack.ok).toBe(true);
    }

    // the UI view is a pure projection of the backend state
    const snapshot = await client.session(expansion.session_id);
    const view = projectSession(snapshot);
    expect(view.counters).toEqual(snapshot.counts);
    const groups = groupByStatus(view);
    expect(groups.pending.length + groups.accepted.length
           + groups.rejected.length).toBe(view.candidates.length);

    // export from the server equals the UI's own composition, byte for byte
    const exported = await client.export(expansion.session_id);
    expect(exportWordlistText(view)).toBe(exported.wordlist);
    expect(exportAnnotationsCsv(view)).toBe(exported.annotations_csv);
    expect(exported.counts).toEqual(tally(view.candidates));

    // export excludes exactly the rejected words
    const finalDecision = new Map(script);
    const exportedWords = exported.wordlist.split("\n").filter(Boolean);
    for (const [word, decision] of finalDecision) {
      if (decision === "reject") {
        expect(exportedWords).not.toContain(word);
      } else {
        expect(exportedWords).toContain(word);
      }
    }
    for (const word of words) {
      if (finalDecision.get(word) !== "reject") {
        expect(exportedWords).toContain(word);
      }
    }

    // a fresh backend process replays the log to the identical export
    await stopBackend();
    backend = startBackend();
    await waitForBackend();
    const replayed = await client.export(expansion.session_id);
    expect(replayed.wordlist).toBe(exported.wordlist);
    expect(replayed.annotations_csv).toBe(exported.annotations_csv);
    expect(replayed.counts).toEqual(exported.counts);
  }, 60000);

  it("re-expanding with an extra seed keeps earlier decisions", async () => {
    const client = new LexkitClient(BASE);
    const first = await client.expand({
      seeds: ["happy"], method: "synonym",
    });
    await client.decide(first.session_id, "glad", "reject");

    const second = await client.expand({
      seeds: ["happy", "sad"], method: "synonym",
      sessionId: first.session_id,
    });
    expect(second.session_id).toBe(first.session_id);

    const view = projectSession(await client.session(first.session_id));
    const glad = view.candidates.find((c) => c.word === "glad");
    expect(glad?.status).toBe("rejected");

    const exported = await client.export(first.session_id);
    expect(exported.wordlist.split("\n")).not.toContain("glad");
    expect(exportWordlistText(view)).toBe(exported.wordlist);
  }, 30000);

  it("unknown sessions and methods surface as API errors", async () => {
    const client = new LexkitClient(BASE);
    await expect(client.export("ghost")).rejects.toMatchObject(
      { status: 404 });
    await expect(client.expand({ seeds: ["x"], method: "telepathy" }))
      .rejects.toMatchObject({ status: 400 });
    await expect(client.expand({ seeds: ["x"], method: "colex" }))
      .rejects.toMatchObject({ status: 503 });
  }, 30000);
});
