// Thin client over the game service HTTP+JSON API.  No game logic lives
// here beyond shaping the payloads; the fetch implementation is injectable
// so tests can fake the wire.

export interface SessionInfo {
  id: string;
  n: number;
  edges: [number, number][];
  p5_free: boolean;
  alpha: number;
  cop_number: number | null;
  initial_cops: [number, number];
}

export interface SessionState {
  id: string;
  graph6: string;
  n: number;
  cops: [number, number];
  robber: number | null;
  turn: number;
  phase: string;
  status: "awaiting_robber" | "playing" | "captured";
  captured: boolean;
  legal_robber_moves: number[];
}

export interface CopReply {
  cops: [number, number];
  phase: string;
  annotation: string | null;
  captured: boolean;
}

export interface MoveResult {
  cop_reply: CopReply | null;
  state: SessionState;
  captured: boolean;
  phase: string;
  annotation: string | null;
}

export interface Hint {
  capture_distance: (number | null)[];
  best_moves: number[];
  legal_moves: number[];
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: unknown,
  ) {
    super(typeof detail === "string" ? detail : JSON.stringify(detail));
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class GameClient {
  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async call<T>(method: string, path: string, body?: unknown): Promise<T> {
    const res = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const data = await res.json().catch(() => null);
    if (!res.ok) {
      const detail = data === null ? res.statusText : (data as { detail?: unknown }).detail;
      throw new ApiError(res.status, detail ?? res.statusText);
    }
    return data as T;
  }

  createSession(input: { graph6?: string; edges?: string }): Promise<SessionInfo> {
    return this.call("POST", "/api/session", input);
  }

  start(id: string, robber: number): Promise<SessionState> {
    return this.call("POST", `/api/session/${id}/start`, { robber });
  }

  robberMove(id: string, to: number): Promise<MoveResult> {
    return this.call("POST", `/api/session/${id}/robber-move`, { to });
  }

  hint(id: string): Promise<Hint> {
    return this.call("GET", `/api/session/${id}/hint`);
  }

  undo(id: string): Promise<SessionState> {
    return this.call("POST", `/api/session/${id}/undo`);
  }
}
