/** Pure HTML renderers for the board, status banner, actions and history.
 * Everything is derived from the server's session record; the client does
 * no rule computation beyond display arithmetic. */

import type { SessionRecord, HistoryEntry } from "./api.js";

export function fibonacciWeight(i: number): number {
  if (i < 1) throw new Error(`column index must be >= 1, got ${i}`);
  let a = 1; // F1
  let b = 2; // F2
  if (i === 1) return a;
  for (let k = 2; k < i; k++) {
    [a, b] = [b, a + b];
  }
  return b;
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;");
}

/** Pieces swallowed so far, in units of the black hole weight. */
export function absorbedCount(session: SessionRecord): number {
  const placed = session.n - session.state.remaining;
  return (placed - session.board_value) / fibonacciWeight(session.m);
}

export function renderBoard(session: SessionRecord): string {
  const { m, columns } = { m: session.m, columns: session.state.columns };
  const cells = columns
    .map((count, idx) => {
      const col = idx + 1;
      const pieces = "●".repeat(Math.min(count, 12)) + (count > 12 ? "…" : "");
      return (
        `<div class="column" data-column="${col}">` +
        `<div class="pieces">${pieces}</div>` +
        `<div class="count">${count}</div>` +
        `<div class="weight">F${col}=${fibonacciWeight(col)}</div>` +
        `</div>`
      );
    })
    .join("");
  const hole =
    `<div class="column black-hole" data-column="${m}">` +
    `<div class="pieces">🕳</div>` +
    `<div class="count">${absorbedCount(session)} absorbed</div>` +
    `<div class="weight">F${m}=${fibonacciWeight(m)}</div>` +
    `</div>`;
  return `<div class="board">${cells}${hole}</div>`;
}

export function renderStatus(session: SessionRecord): string {
  if (session.status === "finished") {
    const who = session.winner === session.human_role ? "You win!" : "Engine wins.";
    return `<div class="status finished">Player ${session.winner} wins. ${who}</div>`;
  }
  const phase =
    session.status === "placing"
      ? `placement phase, ${session.state.remaining} left to place`
      : "decomposition phase";
  const mover =
    session.turn === session.human_role ? "your move" : "engine thinking";
  return `<div class="status">${phase} &mdash; ${mover}</div>`;
}

export function renderActions(session: SessionRecord): string {
  if (session.status === "finished" || session.turn !== session.human_role) {
    return `<div class="actions"></div>`;
  }
  const buttons = session.legal_actions
    .map(
      (label) =>
        `<button class="action" data-action="${escapeHtml(label)}">${escapeHtml(label)}</button>`,
    )
    .join("");
  return `<div class="actions">${buttons}</div>`;
}

export function renderHistory(history: HistoryEntry[]): string {
  const items = history
    .map((entry) => {
      const rule = entry.rule ? ` <span class="rule">[${escapeHtml(entry.rule)}]</span>` : "";
      return `<li>${escapeHtml(entry.actor)}: ${escapeHtml(entry.action)}${rule}</li>`;
    })
    .join("");
  return `<ol class="history">${items}</ol>`;
}

export function renderSession(session: SessionRecord): string {
  return (
    renderStatus(session) +
    renderBoard(session) +
    renderActions(session) +
    renderHistory(session.history)
  );
}
