// Board state machine.  Mirrors the server's legality rules client-side
// (adjacency from the session's edge list) so illegal targets are simply
// unclickable, and assembles the turn-by-turn transcript in the same shape
// the offline runner emits, so an exported game replays through the CLI.

import type { CopReply, SessionInfo, SessionState } from "./api.js";

export interface TurnEntry {
  turn: number;
  phase: string;
  cops_before: [number, number];
  cops_after: [number, number];
  robber_before: number;
  robber_after: number | null;
  annotation: string | null;
}

export interface TranscriptExport {
  graph6: string;
  n: number;
  initial_cops: [number, number];
  initial_robber: number;
  status: string;
  captured_at: number | null;
  turns: TurnEntry[];
}

export class BoardModel {
  readonly n: number;
  readonly edges: [number, number][];
  readonly adjacency: Set<number>[];
  info: SessionInfo;
  state: SessionState | null = null;
  turns: TurnEntry[] = [];
  initialRobber: number | null = null;
  private initialCops: [number, number];

  constructor(info: SessionInfo) {
    this.info = info;
    this.n = info.n;
    this.edges = info.edges;
    this.initialCops = info.initial_cops;
    this.adjacency = Array.from({ length: info.n }, () => new Set<number>());
    for (const [u, v] of info.edges) {
      this.adjacency[u]!.add(v);
      this.adjacency[v]!.add(u);
    }
  }

  get started(): boolean {
    return this.state !== null;
  }

  get captured(): boolean {
    return this.state?.captured ?? false;
  }

  get phase(): string {
    return this.state?.phase ?? "placement";
  }

  /** Vertices the human may click right now. */
  legalTargets(): number[] {
    if (this.state === null) {
      return Array.from({ length: this.n }, (_, v) => v);
    }
    if (this.state.captured) {
      return [];
    }
    return this.state.legal_robber_moves;
  }

  /** Pure adjacency mirror of the server's move rule. */
  isLegalMove(from: number, to: number): boolean {
    return to === from || this.adjacency[from]!.has(to);
  }

  applyStart(robber: number, state: SessionState): void {
    this.initialRobber = robber;
    this.state = state;
    if (state.turn > 0) {
      this.turns.push({
        turn: state.turn,
        phase: state.phase,
        cops_before: this.initialCops,
        cops_after: state.cops,
        robber_before: robber,
        robber_after: state.captured ? robber : null,
        annotation: null,
      });
    }
  }

  applyMove(to: number, state: SessionState, copReply: CopReply | null): void {
    const pending = this.turns[this.turns.length - 1];
    if (pending && pending.robber_after === null) {
      pending.robber_after = to;
    }
    if (copReply !== null) {
      const before = pending ? pending.cops_after : this.initialCops;
      this.turns.push({
        turn: state.turn,
        phase: copReply.phase,
        cops_before: before,
        cops_after: copReply.cops,
        robber_before: to,
        robber_after: copReply.captured ? to : null,
        annotation: copReply.annotation,
      });
    }
    this.state = state;
  }

  applyUndo(state: SessionState): void {
    if (state.robber === null) {
      // undone all the way to placement
      this.state = null;
      this.turns = [];
      this.initialRobber = null;
      return;
    }
    this.state = state;
    // drop the records the server rolled back
    while (this.turns.length > 0 && this.turns[this.turns.length - 1]!.turn > state.turn) {
      this.turns.pop();
    }
    const last = this.turns[this.turns.length - 1];
    if (last && last.turn === state.turn) {
      last.robber_after = null;
    }
  }

  exportTranscript(): TranscriptExport {
    if (this.state === null || this.initialRobber === null) {
      throw new Error("no game to export");
    }
    return {
      graph6: this.state.graph6,
      n: this.n,
      initial_cops: this.initialCops,
      initial_robber: this.initialRobber,
      status: this.state.captured ? "captured" : "cap_failure",
      captured_at: this.state.captured ? this.state.turn : null,
      turns: this.turns,
    };
  }
}
