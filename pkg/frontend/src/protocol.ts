// Wire types for the session backend.  The client renders exactly what the
// server says and computes no game logic of its own.

export type Cell = [number, number];

export interface GuardMove {
  from: Cell;
  to: Cell;
}

export interface AttackResponse {
  attacked: Cell;
  anchors: Cell[];
  moves: GuardMove[];
}

export interface Violation {
  code: string;
  detail: string;
}

export interface Verdict {
  legal: boolean;
  violations: Violation[];
}

export interface Roles {
  corner: Cell[];
  border: Cell[];
  interior: Cell[];
  strips?: Cell[];
}

export interface SessionState {
  session_id: number;
  strategy: string;
  steps: number;
  dims: [number, number];
  guards: Cell[];
  phase: string;
  roles: Roles;
  config_hash: string;
  subgrid?: [number, number, number, number];
}

export interface StartReply {
  session_id: number;
  state: SessionState;
}

export interface AttackReply {
  response: AttackResponse;
  state: SessionState;
  verdict: Verdict;
}

export const key = (c: Cell): string => `${c[0]},${c[1]}`;
