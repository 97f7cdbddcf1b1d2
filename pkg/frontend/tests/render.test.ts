import { describe, expect, it } from "vitest";

import {
  absorbedCount,
  fibonacciWeight,
  renderActions,
  renderBoard,
  renderHistory,
  renderStatus,
} from "../src/render.js";
import type { SessionRecord } from "../src/api.js";

function session(overrides: Partial<SessionRecord> = {}): SessionRecord {
  return {
    id: "s1",
    m: 4,
    n: 20,
    human_role: 2,
    state: { m: 4, columns: [2, 0, 1], remaining: 10 },
    state_text: "m=4;counts=2,0,1",
    board_value: 5,
    turn: 2,
    status: "placing",
    legal_actions: ["P1", "P3"],
    history: [],
    ...overrides,
  };
}

describe("fibonacciWeight", () => {
  it("uses the 1, 2, 3, 5, 8 indexing", () => {
    expect([1, 2, 3, 4, 5, 6].map(fibonacciWeight)).toEqual([1, 2, 3, 5, 8, 13]);
  });
});

describe("absorbedCount", () => {
  it("derives swallowed pieces from value accounting", () => {
    // 10 placed so far, 5 still on the board: one F4=5 piece absorbed
    expect(absorbedCount(session())).toBe(1);
  });
});

describe("renderBoard", () => {
  it("shows one div per column plus the black hole tally", () => {
    const html = renderBoard(session());
    expect(html.match(/class="column/g)).toHaveLength(4);
    expect(html).toContain("black-hole");
    expect(html).toContain("1 absorbed");
    expect(html).toContain("F4=5");
  });
});

describe("renderStatus", () => {
  it("announces the phase and mover", () => {
    expect(renderStatus(session())).toContain("placement phase");
    expect(renderStatus(session())).toContain("your move");
    expect(renderStatus(session({ turn: 1 }))).toContain("engine");
  });
  it("announces the winner when finished", () => {
    const done = session({ status: "finished", winner: 2, legal_actions: [] });
    expect(renderStatus(done)).toContain("Player 2 wins");
    expect(renderStatus(done)).toContain("You win!");
  });
});

describe("renderActions", () => {
  it("renders exactly the server's legal set", () => {
    const html = renderActions(session());
    expect(html.match(/<button/g)).toHaveLength(2);
    expect(html).toContain('data-action="P1"');
    expect(html).toContain('data-action="P3"');
  });
  it("renders nothing when it is not the human's turn", () => {
    expect(renderActions(session({ turn: 1 }))).not.toContain("<button");
  });
});

describe("renderHistory", () => {
  it("lists actions with their rule tags", () => {
    const html = renderHistory([
      {
        actor: "Player 1",
        action: "P3",
        rule: "empty.f4.mod16",
        state: { m: 4, columns: [0, 0, 1], remaining: 17 },
      },
    ]);
    expect(html).toContain("Player 1: P3");
    expect(html).toContain("[empty.f4.mod16]");
  });
});
