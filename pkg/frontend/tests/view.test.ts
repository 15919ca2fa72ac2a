// Rendering-contract tests for the board view model: the UI is a pure
// function of the last server reply, so the contract is asserted here
// without a DOM.

import { describe, expect, it } from "vitest";

import { boardView, historyEntry, verdictBanner } from "../src/view.js";
import { illegalAttack, leafAttack, oneMoveAttack, sessionStart } from "./fixtures.js";

describe("session start (live-captured 9x9 border)", () => {
  const vm = boardView(sessionStart.state, null);

  it("renders 31 guards", () => {
    expect(vm.guardCount).toBe(31);
    expect(vm.cells.filter((c) => c.guard)).toHaveLength(31);
  });

  it("applies the published role styling: 4 white corners, 20 border, 7 interior", () => {
    const byRole = (role: string) =>
      vm.cells.filter((c) => c.guard && c.role === role).length;
    expect(byRole("corner")).toBe(4);
    expect(byRole("border")).toBe(20);
    expect(byRole("interior")).toBe(7);
  });

  it("shows the phase label and a ready banner", () => {
    expect(vm.phaseLabel).toBe("phase D");
    expect(vm.banner.kind).toBe("ok");
  });

  it("lays out an n x m cell grid", () => {
    expect(vm.cells).toHaveLength(81);
  });
});

describe("border leaf click", () => {
  it("renders exactly one moved guard for the one-move fixture", () => {
    const vm = boardView(oneMoveAttack.state, oneMoveAttack);
    const moved = vm.cells.filter((c) => c.moved);
    expect(moved).toHaveLength(1);
    expect([moved[0].x, moved[0].y]).toEqual([7, 0]);
  });

  it("marks the clicked leaf attacked and occupied (live-captured reply)", () => {
    const vm = boardView(leafAttack.state, leafAttack);
    const leaf = vm.cells.find((c) => c.x === 7 && c.y === 0)!;
    expect(leaf.attacked).toBe(true);
    expect(leaf.guard).toBe(true);
    expect(leaf.moved).toBe(true);
    // the serving move ends on the clicked cell
    expect(leafAttack.response.moves.some((m) => m.to[0] === 7 && m.to[1] === 0)).toBe(true);
    // every rendered move is a king step (display sanity, not game logic)
    for (const mv of vm.lastMoves) {
      expect(Math.max(Math.abs(mv.from[0] - mv.to[0]), Math.abs(mv.from[1] - mv.to[1]))).toBe(1);
    }
  });

  it("keeps guard count constant across the reply", () => {
    const vm = boardView(leafAttack.state, leafAttack);
    expect(vm.guardCount).toBe(31);
  });
});

describe("verdict banner", () => {
  it("surfaces the injected illegal transition prominently", () => {
    const vm = boardView(illegalAttack.state, illegalAttack);
    expect(vm.banner.kind).toBe("violation");
    expect(vm.banner.text).toContain("DOMINATION_LOST");
    expect(vm.banner.text).toContain("GUARD_COUNT_CHANGED");
  });

  it("reports legal moves calmly", () => {
    expect(verdictBanner(leafAttack.verdict).kind).toBe("ok");
    expect(verdictBanner(null).text).toBe("ready");
  });
});

describe("history entries", () => {
  it("summarises a step", () => {
    const entry = historyEntry(3, leafAttack);
    expect(entry).toEqual({ step: 3, attack: [7, 0], moves: 8, legal: true });
  });

  it("flags illegal steps", () => {
    expect(historyEntry(1, illegalAttack).legal).toBe(false);
  });
});
