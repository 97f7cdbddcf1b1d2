/** End-to-end check against the real Python service: create a game
 * (m=4, n=20), drive the human side by server hints through the client
 * stack, and confirm the announced winner matches the closed form. */

import { spawn, ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { GameApp } from "../src/app.js";
import type { SessionRecord } from "../src/api.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(): Promise<void> {
  for (let i = 0; i < 100; i++) {
    try {
      const res = await fetch(`${BASE}/winner?m=4&n=20`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "uvicorn", "bhzgame.api:app", "--port", String(PORT), "--log-level", "warning"],
    { stdio: "ignore" },
  );
  await waitForServer();
}, 30_000);

afterAll(() => {
  server?.kill();
});

describe("full game against the live service", () => {
  it("plays m=4, n=20 to completion with hint-scripted inputs", async () => {
    const api = new ApiClient(BASE);

    // the stateless winner endpoint pins who should win n=20
    const { winner } = await api.winner(4, 20);
    expect(winner).toBe(2);

    const updates: SessionRecord[] = [];
    const app = new GameApp(api, { onUpdate: (s) => updates.push(s) });
    await app.create(4, 20, 2); // human takes the winning side

    for (let turn = 0; turn < 200 && app.session!.status !== "finished"; turn++) {
      const hint = await app.hint();
      expect(hint).not.toBeNull();
      expect(hint!.rule.length).toBeGreaterThan(0);
      await app.submit(hint!.action);
    }

    const final = app.session!;
    expect(final.status).toBe("finished");
    expect(final.winner).toBe(2);
    expect(final.state.remaining).toBe(0);
    // board value accounting: everything placed was either kept or absorbed
    expect((20 - final.board_value) % 5).toBe(0);
    // every engine move carries a rule tag
    const engineMoves = final.history.filter((h) => h.actor === "Player 1");
    expect(engineMoves.length).toBeGreaterThan(0);
    for (const move of engineMoves) {
      expect(move.rule).toBeTruthy();
    }
  }, 60_000);

  it("rejects illegal actions with a structured error", async () => {
    const api = new ApiClient(BASE);
    const session = await api.createSession(4, 20, 1);
    await expect(api.submitAction(session.id, "M")).rejects.toThrow(/illegal/i);
  });
});
