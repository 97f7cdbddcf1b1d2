/** Session flow controller: one active game per instance, no optimistic
 * updates (every render comes from a fresh server record). */

import { ApiClient, ApiError, SessionRecord } from "./api.js";

export interface AppEvents {
  onUpdate: (session: SessionRecord) => void;
  onError?: (message: string) => void;
}

export class GameApp {
  session: SessionRecord | null = null;

  constructor(
    private api: ApiClient,
    private events: AppEvents,
  ) {}

  private publish(session: SessionRecord): void {
    this.session = session;
    this.events.onUpdate(session);
  }

  private report(error: unknown): void {
    const message = error instanceof Error ? error.message : String(error);
    this.events.onError?.(message);
  }

  async create(m: number, n: number, humanRole: number): Promise<void> {
    try {
      this.publish(await this.api.createSession(m, n, humanRole));
    } catch (error) {
      this.report(error);
    }
  }

  /** Submit a human action; the reply already contains the engine's move. */
  async submit(action: string): Promise<void> {
    if (!this.session) throw new Error("no active session");
    if (!this.session.legal_actions.includes(action)) {
      this.report(new ApiError(0, `action ${action} is not in the legal set`));
      return;
    }
    try {
      this.publish(await this.api.submitAction(this.session.id, action));
    } catch (error) {
      this.report(error);
      // re-sync with the server after a rejection
      this.publish(await this.api.getSession(this.session.id));
    }
  }

  async hint(): Promise<{ action: string; rule: string } | null> {
    if (!this.session) throw new Error("no active session");
    try {
      return await this.api.hint(this.session.id);
    } catch (error) {
      this.report(error);
      return null;
    }
  }
}
