// Pure view-model layer: (last server reply, UI bookkeeping) -> what to
// draw.  Keeping this free of DOM and network makes the rendering contract
// directly testable.

import {
  AttackReply,
  Cell,
  SessionState,
  Verdict,
  key,
} from "./protocol.js";

export type Role = "corner" | "border" | "interior" | "strip";

export interface CellView {
  x: number;
  y: number;
  guard: boolean;
  role?: Role;
  attacked: boolean;
  moved: boolean; // a guard arrived here in the last response
  vacated: boolean; // a guard left here in the last response
}

export interface Banner {
  kind: "ok" | "violation" | "error";
  text: string;
}

export interface HistoryEntry {
  step: number;
  attack: Cell;
  moves: number;
  legal: boolean;
}

export interface BoardViewModel {
  dims: [number, number];
  cells: CellView[];
  phaseLabel: string;
  guardCount: number;
  banner: Banner;
  lastMoves: { from: Cell; to: Cell }[];
}

function roleMap(state: SessionState): Map<string, Role> {
  const m = new Map<string, Role>();
  for (const c of state.roles.interior) m.set(key(c), "interior");
  for (const c of state.roles.border) m.set(key(c), "border");
  for (const c of state.roles.corner) m.set(key(c), "corner");
  for (const c of state.roles.strips ?? []) m.set(key(c), "strip");
  return m;
}

export function verdictBanner(verdict: Verdict | null): Banner {
  if (verdict === null) return { kind: "ok", text: "ready" };
  if (verdict.legal) return { kind: "ok", text: "legal move" };
  const codes = verdict.violations.map((v) => v.code).join(", ");
  return { kind: "violation", text: `referee violation: ${codes}` };
}

export function boardView(
  state: SessionState,
  last: AttackReply | null,
): BoardViewModel {
  const [n, m] = state.dims;
  const guards = new Set(state.guards.map(key));
  const roles = roleMap(state);
  const attacked = last ? key(last.response.attacked) : null;
  const movedTo = new Set((last?.response.moves ?? []).map((mv) => key(mv.to)));
  const movedFrom = new Set((last?.response.moves ?? []).map((mv) => key(mv.from)));

  const cells: CellView[] = [];
  for (let y = m - 1; y >= 0; y--) {
    for (let x = 0; x < n; x++) {
      const k = `${x},${y}`;
      cells.push({
        x,
        y,
        guard: guards.has(k),
        role: roles.get(k),
        attacked: k === attacked,
        moved: movedTo.has(k),
        vacated: movedFrom.has(k) && !movedTo.has(k),
      });
    }
  }
  return {
    dims: state.dims,
    cells,
    phaseLabel: `phase ${state.phase}`,
    guardCount: state.guards.length,
    banner: verdictBanner(last?.verdict ?? null),
    lastMoves: (last?.response.moves ?? []).map((mv) => ({ from: mv.from, to: mv.to })),
  };
}

export function historyEntry(step: number, reply: AttackReply): HistoryEntry {
  return {
    step,
    attack: reply.response.attacked,
    moves: reply.response.moves.length,
    legal: reply.verdict.legal,
  };
}
