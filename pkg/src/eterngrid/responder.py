"""Guard responses for the alternating strategy on the infinite grid.

Two responders are provided and cross-checked against each other:

``respond_tabulated``
    Looks the attack up in the golden tables (the published rows plus the
    frozen generated ones) and returns the 8x8-window response: four
    anchor guards at the window corners and six moves inside.

``respond_matching``
    A generic realisation that knows nothing about the tables: it windows
    the current family and the opposite-phase family through the attack
    over a caller-supplied scope and finds a king-step perfect matching
    between the two windows (identity pairs become anchors).  It covers
    the direction the tables were derived for, serves as an independent
    oracle for them, and reports infeasibility instead of guessing.

Both produce the same post-configuration: the opposite-phase translate
through the attacked vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, NamedTuple, Tuple

from . import tables
from .grid import Configuration, DomainError, Rect, Vertex, chebyshev_distance
from .matching import perfect_matching
from .patterns import PatternSpec, spec_through


class StrategyError(RuntimeError):
    """The attack cannot be answered from this configuration (pattern
    corruption: valid patterns dominate every vertex)."""


class InfeasibleResponseError(RuntimeError):
    """No target family / no legal matching within the given scope."""


class TransitionError(RuntimeError):
    """A response cannot be applied to a configuration."""

    def __init__(self, code: str, detail: str):
        super().__init__(f"{code}: {detail}")
        self.code = code
        self.detail = detail


class GuardMove(NamedTuple):
    src: Vertex
    dst: Vertex

    def to_json(self) -> dict:
        return {"from": [self.src.x, self.src.y], "to": [self.dst.x, self.dst.y]}


@dataclass(frozen=True)
class AttackResponse:
    """Simultaneous answer to one attack.

    ``anchors`` are guards explicitly pinned in place; guards that are
    neither anchors nor move sources simply stay where they are.
    """

    attacked: Vertex
    anchors: frozenset = frozenset()
    moves: Tuple[GuardMove, ...] = ()

    def __post_init__(self) -> None:
        srcs = [m.src for m in self.moves]
        dsts = [m.dst for m in self.moves]
        if len(set(srcs)) != len(srcs):
            raise TransitionError("SOURCE_MISSING", "duplicate move sources")
        if len(set(dsts)) != len(dsts):
            raise TransitionError("VERTEX_COLLISION", "duplicate move targets")
        if self.anchors & set(srcs):
            raise TransitionError("SOURCE_MISSING", "anchor listed as move source")
        for m in self.moves:
            if chebyshev_distance(m.src, m.dst) > 1:
                raise TransitionError(
                    "NOT_ADJACENT_MOVE", f"{tuple(m.src)} -> {tuple(m.dst)}"
                )

    @property
    def is_empty(self) -> bool:
        return not self.moves

    def to_json(self) -> dict:
        return {
            "attacked": [self.attacked.x, self.attacked.y],
            "anchors": [[v.x, v.y] for v in sorted(self.anchors)],
            "moves": [m.to_json() for m in self.moves],
        }


def empty_response(attacked: Vertex) -> AttackResponse:
    return AttackResponse(Vertex(*attacked))


def apply(config: Configuration, response: AttackResponse) -> Configuration:
    """Apply all moves simultaneously, preserving guard distinctness."""
    sources = {m.src for m in response.moves}
    missing = sources - config
    if missing:
        raise TransitionError("SOURCE_MISSING", f"no guard at {sorted(missing)}")
    if response.anchors - config:
        raise TransitionError("SOURCE_MISSING", "anchor not present in configuration")
    remaining = set(config) - sources
    out = set(remaining)
    for m in response.moves:
        if m.dst in out:
            raise TransitionError("VERTEX_COLLISION", f"target {tuple(m.dst)} occupied")
        out.add(m.dst)
    return frozenset(out)


def reference_member(spec: PatternSpec, attack: Vertex) -> Vertex:
    """The member the response tables are keyed from: the lexicographically
    first member adjacent to the attack."""
    cands = []
    for dx in (-1, 0, 1):
        for dy in (-1, 0, 1):
            if dx == 0 and dy == 0:
                continue
            m = Vertex(attack.x + dx, attack.y + dy)
            if spec.contains(m):
                cands.append(m)
    if not cands:
        raise StrategyError(f"attack {tuple(attack)} not dominated by pattern")
    return min(cands)


def respond_tabulated(spec: PatternSpec, attack: Vertex) -> AttackResponse:
    """The golden-table response: 4 anchors + 6 moves in the 8x8 window
    around the attack.  An attack on an occupied vertex needs no moves."""
    attack = Vertex(*attack)
    if spec.contains(attack):
        return empty_response(attack)
    ref = reference_member(spec, attack)
    delta = (attack.x - ref.x, attack.y - ref.y)
    row = tables.load_tables()[(spec.phase.value, delta)]
    anchors = frozenset(Vertex(ref.x + a[0], ref.y + a[1]) for a in row["anchors"])
    moves = tuple(
        GuardMove(
            Vertex(ref.x + m["from"][0], ref.y + m["from"][1]),
            Vertex(ref.x + m["to"][0], ref.y + m["to"][1]),
        )
        for m in row["moves"]
    )
    return AttackResponse(attack, anchors, moves)


def class_steps(spec: PatternSpec, attack: Vertex) -> Dict[Tuple[int, int], Tuple[int, int]]:
    """Displacement of every guard class for the response to ``attack``,
    keyed by position mod (7,7).  Used to translate a golden row onto an
    arbitrary window of the infinite pattern."""
    attack = Vertex(*attack)
    ref = reference_member(spec, attack)
    delta = (attack.x - ref.x, attack.y - ref.y)
    row = tables.load_tables()[(spec.phase.value, delta)]
    out = {}
    for entry in row["class_deltas"]:
        cx, cy = entry["class"]
        out[((cx + ref.x) % 7, (cy + ref.y) % 7)] = tuple(entry["step"])
    return out


def target_spec(spec: PatternSpec, attack: Vertex) -> PatternSpec:
    """The opposite-phase translate containing the attacked vertex (the
    unique family the guards transition into)."""
    return spec_through(spec.phase.opposite(), Vertex(*attack))


def respond_matching(spec: PatternSpec, attack: Vertex, scope: Rect) -> AttackResponse:
    """Matching-based response over a window.

    ``scope`` must have both extents divisible by 7 (so the two families
    have equal window counts) and keep at least one full tile of padding
    around the attack; three tiles keep boundary effects away entirely.
    """
    attack = Vertex(*attack)
    if scope.w % 7 or scope.h % 7:
        raise DomainError("scope extents must be multiples of 7")
    if not scope.shrink(7).contains(attack):
        raise DomainError("attack needs at least one tile of scope padding")
    current = spec.window(scope)
    if attack in current:
        return empty_response(attack)
    if not any(spec.contains(Vertex(attack.x + dx, attack.y + dy))
               for dx in (-1, 0, 1) for dy in (-1, 0, 1)):
        raise StrategyError(f"attack {tuple(attack)} not dominated by pattern")
    target = target_spec(spec, attack).window(scope)
    if len(current) != len(target):
        raise InfeasibleResponseError(
            f"window counts differ: {len(current)} vs {len(target)}"
        )

    stay = current & target
    move_from = sorted(current - target)
    move_to = sorted(target - current)
    adj = {
        u: [v for v in move_to if chebyshev_distance(u, v) <= 1]
        for u in move_from
    }
    match = perfect_matching(adj, len(move_to))
    if match is None:
        # Pinning the common guards can in principle starve the boundary;
        # retry with them released before reporting infeasibility.
        full_from = sorted(current)
        full_to = sorted(target)
        adj = {
            u: [v for v in full_to if chebyshev_distance(u, v) <= 1]
            for u in full_from
        }
        match = perfect_matching(adj, len(full_to))
        if match is None:
            raise InfeasibleResponseError(
                f"no king-step matching within scope for attack {tuple(attack)}"
            )
        stay = frozenset(u for u, v in match.items() if u == v)
        moves = tuple(
            GuardMove(u, v) for u, v in sorted(match.items()) if u != v
        )
        return AttackResponse(attack, frozenset(stay), moves)

    moves = tuple(GuardMove(u, match[u]) for u in move_from)
    return AttackResponse(attack, frozenset(stay), moves)


def matching_scope(spec: PatternSpec, attack: Vertex, tiles: int = 7) -> Rect:
    """A feasible window for ``respond_matching``.

    Window-exact matching is only solvable when no rim guard is stranded
    (all of its king-step targets outside the window), which depends on
    the window's mod-7 alignment rather than its size.  This scans the 49
    alignments of a tiles x tiles window centred on the attack in a fixed
    order and returns the first feasible one.
    """
    attack = Vertex(*attack)
    half = 7 * (tiles // 2)
    for ox in range(7):
        for oy in range(7):
            scope = Rect(attack.x - half + ox, attack.y - half + oy, 7 * tiles, 7 * tiles)
            if not scope.shrink(7).contains(attack):
                continue
            try:
                respond_matching(spec, attack, scope)
                return scope
            except InfeasibleResponseError:
                continue
    raise InfeasibleResponseError(f"no feasible scope alignment for {tuple(attack)}")
