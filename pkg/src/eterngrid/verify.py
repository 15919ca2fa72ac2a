"""Invariant battery behind ``eterngrid verify``.

A quick self-check of the load-bearing properties: pattern density and
domination, the published guard-movement rows, responder agreement, and
referee-clean simulations of both finite-grid strategies.  Returns
(name, passed, detail) triples for the CLI to tabulate.
"""

from __future__ import annotations

import random
import time
from typing import List, Tuple

from . import border, composite, tables
from .grid import GridDims, Rect, Vertex
from .patterns import PatternPhase, PatternSpec, identify, spec_through
from .referee import make_attacker, simulate, validate_transition
from .responder import apply, matching_scope, respond_matching, respond_tabulated


def _check_patterns() -> Tuple[bool, str]:
    rng = random.Random(20)
    for _ in range(25):
        phase = rng.choice((PatternPhase.D, PatternPhase.DPRIME))
        spec = PatternSpec(phase, Vertex(rng.randrange(-50, 50), rng.randrange(-50, 50)))
        ox, oy = rng.randrange(-30, 30), rng.randrange(-30, 30)
        if len(spec.window(Rect(ox, oy, 7, 7))) != 7:
            return False, f"density violated for {spec}"
        for _ in range(50):
            v = Vertex(rng.randrange(-100, 100), rng.randrange(-100, 100))
            if not any(
                spec.contains(Vertex(v.x + dx, v.y + dy))
                for dx in (-1, 0, 1)
                for dy in (-1, 0, 1)
            ):
                return False, f"{tuple(v)} undominated by {spec}"
    return True, "density and domination on random translates"


def _check_tables() -> Tuple[bool, str]:
    regenerated = tables.generate_tables()
    loaded = tables.load_tables()
    for row in regenerated["rows"]:
        key = (row["phase"], tuple(row["attack"]))
        if loaded[key] != row:
            return False, f"golden row {key} differs from regeneration"
    d = spec_through(PatternPhase.D, Vertex(0, 0))
    for delta, printed in tables.PRINTED_D_ROWS.items():
        resp = respond_tabulated(d, Vertex(*delta))
        want_anchors = {Vertex(*a) for a in printed["anchors"]}
        want_moves = {(Vertex(*s), Vertex(*t)) for s, t in printed["moves"]}
        if set(resp.anchors) != want_anchors or {(m.src, m.dst) for m in resp.moves} != want_moves:
            return False, f"published row {delta} not reproduced"
    return True, "16 golden rows stable; published rows verbatim"


def _check_alternation() -> Tuple[bool, str]:
    for phase in (PatternPhase.D, PatternPhase.DPRIME):
        spec = spec_through(phase, Vertex(0, 0))
        for delta in tables.ATTACK_OFFSETS:
            attack = Vertex(*delta)
            scope = matching_scope(spec, attack)
            resp = respond_matching(spec, attack, scope)
            post = apply(spec.window(scope), resp)
            verdict = validate_transition(spec.window(scope), post, attack, scope=scope)
            if not verdict.legal:
                return False, f"illegal window transition {phase} {delta}"
            found = identify(post, scope)
            if found is None or found.phase is phase:
                return False, f"phase did not alternate for {phase} {delta}"
    return True, "16 matching responses legal with phase flip"


def _check_strategies(quick: bool) -> Tuple[bool, str]:
    steps = 300 if quick else 2000
    cases = [("border", GridDims(9, 9)), ("border", GridDims(16, 16)),
             ("composite", GridDims(13, 20)), ("composite", GridDims(10, 9))]
    total = 0
    for kind, dims in cases:
        strategy = composite.make_strategy(kind, dims)
        for attacker_kind in ("random", "greedy"):
            attacker = make_attacker(attacker_kind, seed=11)
            transcript = simulate(dims, strategy, attacker, steps, 11)
            total += len(transcript.steps)
            if transcript.violation_count:
                return False, f"{kind} {dims.n}x{dims.m} vs {attacker_kind}: violation"
    return True, f"{total} referee-checked steps, zero violations"


def run_battery(quick: bool = False) -> List[Tuple[str, bool, str]]:
    checks = [
        ("patterns", _check_patterns),
        ("golden-tables", _check_tables),
        ("alternation", _check_alternation),
        ("strategies", lambda: _check_strategies(quick)),
    ]
    results = []
    for name, fn in checks:
        t0 = time.time()
        try:
            passed, detail = fn()
        except Exception as exc:  # surface, don't crash the battery
            passed, detail = False, f"exception: {exc!r}"
        results.append((name, passed, f"{detail} [{time.time() - t0:.1f}s]"))
    return results
