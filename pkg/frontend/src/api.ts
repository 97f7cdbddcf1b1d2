/** Typed client for the game service. The server is authoritative for all
 * rules; this module only moves JSON back and forth. */

export interface BoardRecord {
  m: number;
  columns: number[];
  remaining: number;
}

export interface HistoryEntry {
  actor: string;
  action: string;
  rule: string | null;
  state: BoardRecord;
}

export interface SessionRecord {
  id: string;
  m: number;
  n: number;
  human_role: number;
  state: BoardRecord;
  state_text: string;
  board_value: number;
  turn: number;
  status: "placing" | "decomposing" | "finished";
  legal_actions: string[];
  history: HistoryEntry[];
  winner?: number;
}

export interface HintResponse {
  action: string;
  rule: string;
}

export interface ClassifyResponse {
  outcome: "P" | "N";
  rule: string;
  winning_actions: string[];
  terminal: boolean;
}

export interface WinnerResponse {
  winner: number;
  rule: string;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

type Fetch = typeof fetch;

export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchFn: Fetch = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      const detail =
        typeof body?.detail === "string" ? body.detail : response.statusText;
      throw new ApiError(response.status, detail);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  createSession(m: number, n: number, humanRole: number): Promise<SessionRecord> {
    return this.post("/sessions", { m, n, human_role: humanRole });
  }

  getSession(id: string): Promise<SessionRecord> {
    return this.request(`/sessions/${id}`);
  }

  submitAction(id: string, action: string): Promise<SessionRecord> {
    return this.post(`/sessions/${id}/actions`, { action });
  }

  hint(id: string): Promise<HintResponse> {
    return this.request(`/sessions/${id}/hint`);
  }

  classify(m: number, columns: number[], remaining = 0): Promise<ClassifyResponse> {
    return this.post("/classify", { m, columns, remaining });
  }

  winner(m: number, n: number): Promise<WinnerResponse> {
    return this.request(`/winner?m=${m}&n=${n}`);
  }
}
