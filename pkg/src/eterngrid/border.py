"""Finite-grid strategy for n = m = 2 (mod 7), n, m >= 9.

Layout: one immovable guard in each corner; each side between the corners
split into 7-vertex border paths holding 5 guards; the (n-2) x (m-2)
interior holding a window of a D or D' translate, one guard per seven
vertices.  Total count is nm/7 + 8(m+n-1)/7.

Border paths are oriented consistently around the ring (bottom left-to-
right, right upward, top right-to-left, left downward), and all paths
always hold the same formation under that orientation, so the whole
configuration is determined by (interior translate, formation label).

Formations: of the three 5-guard path formations, the two leaf formations
are used at runtime.  The centred formation, although it is the natural
starting point, is indefensible: serving a corner-diagonal attack from a
translate that has a virtual member on that corner forces a one-guard
circulation around the ring, which requires some path to hand a guard
across a corner junction, and only formations occupying a path end can do
that.  (tests/test_border.py demonstrates the trap concretely.)

Responses are constructed, not searched for globally: the attacked-vertex
rules fix the target state (opposite translate through an interior attack;
formation change for a border attack), and the guard moves realising the
transition come from a king-step perfect matching between the two
configurations with the corners pinned, seeded with the periodic per-class
steps so the matching only has to repair the border exchange.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .grid import Configuration, DomainError, GridDims, Rect, Vertex, in_bounds
from .matching import augment_max_matching
from .patterns import PatternPhase, PatternSpec, spec_through
from .responder import (
    AttackResponse,
    GuardMove,
    InfeasibleResponseError,
    class_steps,
    empty_response,
)


class BorderFormation(enum.Enum):
    CENTER = "center"
    LOW_LEAF = "low_leaf"
    HIGH_LEAF = "high_leaf"


FORMATION_OFFSETS: Dict[BorderFormation, Tuple[int, ...]] = {
    BorderFormation.CENTER: (1, 2, 3, 4, 5),
    BorderFormation.LOW_LEAF: (0, 2, 3, 4, 5),
    BorderFormation.HIGH_LEAF: (1, 2, 3, 4, 6),
}

PATH_LEN = 7


@dataclass(frozen=True)
class BorderPath:
    """One 7-vertex border segment; offset 0 is the ring-orientation start."""

    origin: Vertex
    step: Tuple[int, int]
    side: str

    def cell(self, offset: int) -> Vertex:
        return Vertex(self.origin.x + offset * self.step[0], self.origin.y + offset * self.step[1])

    def cells(self) -> Tuple[Vertex, ...]:
        return tuple(self.cell(k) for k in range(PATH_LEN))

    def offset_of(self, v: Vertex) -> Optional[int]:
        dx, dy = v.x - self.origin.x, v.y - self.origin.y
        k = dx * self.step[0] + dy * self.step[1]
        if 0 <= k < PATH_LEN and self.cell(k) == v:
            return k
        return None


@dataclass(frozen=True)
class BorderPathState:
    path: BorderPath
    formation: BorderFormation

    def guards(self) -> Tuple[Vertex, ...]:
        return tuple(self.path.cell(k) for k in FORMATION_OFFSETS[self.formation])

    def to_json(self) -> dict:
        o = self.path.origin
        return {
            "origin": [o.x, o.y],
            "side": self.path.side,
            "formation": self.formation.value,
        }


def _check_dims(dims: GridDims) -> None:
    n, m = dims
    if n < 9 or m < 9:
        raise DomainError(f"border strategy needs n, m >= 9, got {n}x{m}")
    if n % 7 != 2 or m % 7 != 2:
        raise DomainError(f"border strategy needs n = m = 2 (mod 7), got {n}x{m}")


def ring_paths(dims: GridDims) -> Tuple[BorderPath, ...]:
    n, m = dims
    paths: List[BorderPath] = []
    for k in range((n - 2) // 7):
        paths.append(BorderPath(Vertex(1 + 7 * k, 0), (1, 0), "bottom"))
    for k in range((m - 2) // 7):
        paths.append(BorderPath(Vertex(n - 1, 1 + 7 * k), (0, 1), "right"))
    for k in range((n - 2) // 7):
        paths.append(BorderPath(Vertex(n - 2 - 7 * k, m - 1), (-1, 0), "top"))
    for k in range((m - 2) // 7):
        paths.append(BorderPath(Vertex(0, m - 2 - 7 * k), (0, -1), "left"))
    return tuple(paths)


def corners(dims: GridDims) -> Tuple[Vertex, ...]:
    n, m = dims
    return (Vertex(0, 0), Vertex(n - 1, 0), Vertex(0, m - 1), Vertex(n - 1, m - 1))


def interior_rect(dims: GridDims) -> Rect:
    return Rect(1, 1, dims.n - 2, dims.m - 2)


@lru_cache(maxsize=None)
def _ring_cells(dims: GridDims, formation: BorderFormation) -> Configuration:
    out = []
    for p in ring_paths(dims):
        for k in FORMATION_OFFSETS[formation]:
            out.append(p.cell(k))
    return frozenset(out)


@lru_cache(maxsize=None)
def _interior_window(dims: GridDims, phase: PatternPhase, res: int) -> Configuration:
    spec = next(
        PatternSpec(phase, Vertex(x, y))
        for x in range(7)
        for y in range(7)
        if PatternSpec(phase, Vertex(x, y)).res == res
    )
    return spec.window(interior_rect(dims))


@dataclass(frozen=True)
class FiniteStrategyState:
    dims: GridDims
    interior_spec: PatternSpec
    border_paths: Tuple[BorderPathState, ...]
    corner_guards: Tuple[Vertex, ...]

    @property
    def formation(self) -> BorderFormation:
        return self.border_paths[0].formation

    def interior_guards(self) -> Configuration:
        return _interior_window(self.dims, self.interior_spec.phase, self.interior_spec.res)

    def guards(self) -> Configuration:
        return (
            frozenset(self.corner_guards)
            | _ring_cells(self.dims, self.formation)
            | self.interior_guards()
        )

    def with_formation(self, formation: BorderFormation) -> "FiniteStrategyState":
        return replace(
            self,
            border_paths=tuple(replace(ps, formation=formation) for ps in self.border_paths),
        )

    def to_json(self) -> dict:
        from .grid import config_to_json

        return {
            "dims": [self.dims.n, self.dims.m],
            "guards": config_to_json(self.guards()),
            "phase": self.interior_spec.phase.value,
            "interior_base": list(self.interior_spec.canonical_base()),
            "formations": [ps.to_json() for ps in self.border_paths],
            "roles": {
                "corner": config_to_json(frozenset(self.corner_guards)),
                "border": config_to_json(
                    frozenset(g for ps in self.border_paths for g in ps.guards())
                ),
                "interior": config_to_json(self.interior_guards()),
            },
        }


def guard_count(dims: GridDims) -> int:
    """nm/7 + 8(m+n-1)/7, always an integer under the preconditions."""
    _check_dims(dims)
    n, m = dims
    total = n * m + 8 * (m + n - 1)
    assert total % 7 == 0
    return total // 7


def init_state(dims: GridDims, formation: BorderFormation = BorderFormation.LOW_LEAF) -> FiniteStrategyState:
    """Initial state: interior on the D translate through the origin
    corner, all paths in the given leaf formation."""
    dims = GridDims(*dims)
    _check_dims(dims)
    state = FiniteStrategyState(
        dims=dims,
        interior_spec=spec_through(PatternPhase.D, Vertex(0, 0)).canonical(),
        border_paths=tuple(
            BorderPathState(p, formation) for p in ring_paths(dims)
        ),
        corner_guards=corners(dims),
    )
    count = len(state.guards())
    expected = guard_count(dims)
    assert count == expected, f"constructed {count} guards, formula says {expected}"
    return state


#推 target formation by attacked path offset: leaves pull their own
# formation; the cells adjacent to a leaf (offsets 1 and 5) are empty only
# in the formation whose occupied leaf is on the far end, so they pull the
# formation that covers them while keeping a path end occupied.  Offsets
# 2..4 are occupied in every formation and never reach here.
_OFFSET_TARGET = {
    0: BorderFormation.LOW_LEAF,
    1: BorderFormation.HIGH_LEAF,
    5: BorderFormation.LOW_LEAF,
    6: BorderFormation.HIGH_LEAF,
}


def _formation_moves(
    state: FiniteStrategyState, target: BorderFormation
) -> List[GuardMove]:
    """Per-path elementwise offset shift; every pair differs by at most 1."""
    moves = []
    old = FORMATION_OFFSETS[state.formation]
    new = FORMATION_OFFSETS[target]
    for ps in state.border_paths:
        for a, b in zip(old, new):
            if a != b:
                moves.append(GuardMove(ps.path.cell(a), ps.path.cell(b)))
    return moves


def _interior_transition(
    state: FiniteStrategyState, attack: Vertex
) -> Tuple[AttackResponse, FiniteStrategyState]:
    """Flip the interior to the opposite translate through the attack and
    reconcile the border by matching."""
    pre_spec = state.interior_spec
    post_spec = spec_through(pre_spec.phase.opposite(), attack).canonical()
    pre = state.guards()
    fixed = set(state.corner_guards)
    steps = class_steps(pre_spec, attack)

    for target_formation in (state.formation, _other_leaf(state.formation)):
        post_state = replace(state, interior_spec=post_spec).with_formation(target_formation)
        post = post_state.guards()
        if len(post) != len(pre):  # invariant; never expected to differ
            continue
        left = sorted(pre - fixed)
        right = post - fixed
        seed = {}
        adj = {}
        for u in left:
            ux, uy = u
            if u in right:
                seed[u] = u
            else:
                step = steps.get((ux % 7, uy % 7))
                if step:
                    t = (ux + step[0], uy + step[1])
                    if t in right:
                        seed[u] = t
            cands = [
                t
                for t in (
                    (ux - 1, uy - 1), (ux - 1, uy), (ux - 1, uy + 1),
                    (ux, uy - 1), (ux, uy), (ux, uy + 1),
                    (ux + 1, uy - 1), (ux + 1, uy), (ux + 1, uy + 1),
                )
                if t in right
            ]
            adj[u] = cands
        match = augment_max_matching(adj, seed)
        if len(match) != len(left):
            continue
        moves = tuple(
            GuardMove(u, Vertex(*match[u])) for u in left if match[u] != u
        )
        response = AttackResponse(Vertex(*attack), frozenset(), moves)
        return response, post_state
    raise InfeasibleResponseError(
        f"no legal transition for interior attack {tuple(attack)}"
    )


def _other_leaf(formation: BorderFormation) -> BorderFormation:
    if formation is BorderFormation.LOW_LEAF:
        return BorderFormation.HIGH_LEAF
    return BorderFormation.LOW_LEAF


def _respond_impl(
    state: FiniteStrategyState, attack: Vertex
) -> Tuple[AttackResponse, FiniteStrategyState]:
    guards = state.guards()
    if attack in guards:
        return empty_response(attack), state

    rect = interior_rect(state.dims)
    if rect.contains(attack):
        return _interior_transition(state, attack)

    # Unoccupied border cell: it lies on some path at an offset empty in
    # the current formation; all paths move to the formation covering it.
    for ps in state.border_paths:
        off = ps.path.offset_of(attack)
        if off is not None:
            target = _OFFSET_TARGET[off]
            moves = _formation_moves(state, target)
            response = AttackResponse(attack, frozenset(), tuple(moves))
            return response, state.with_formation(target)
    raise DomainError(f"attack {tuple(attack)} on no path (corner cells are always occupied)")


@lru_cache(maxsize=None)
def _canonical_state(
    dims: GridDims, phase: PatternPhase, res: int, formation: BorderFormation
) -> FiniteStrategyState:
    return FiniteStrategyState(
        dims=dims,
        interior_spec=next(
            PatternSpec(phase, Vertex(x, y)).canonical()
            for x in range(7)
            for y in range(7)
            if PatternSpec(phase, Vertex(x, y)).res == res
        ),
        border_paths=tuple(BorderPathState(p, formation) for p in ring_paths(dims)),
        corner_guards=corners(dims),
    )


@lru_cache(maxsize=65536)
def _cached_transition(
    dims: GridDims,
    phase: PatternPhase,
    res: int,
    formation: BorderFormation,
    attack: Vertex,
) -> Tuple[AttackResponse, FiniteStrategyState]:
    return _respond_impl(_canonical_state(dims, phase, res, formation), attack)


def respond(
    state: FiniteStrategyState, attack: Vertex
) -> Tuple[AttackResponse, FiniteStrategyState]:
    """Answer one attack; returns the response and the successor state.

    The state is memoryless (dims, interior translate, formation label),
    so transitions are cached on that key.
    """
    attack = Vertex(*attack)
    if not in_bounds(attack, state.dims):
        raise DomainError(f"attack {tuple(attack)} outside grid")
    return _cached_transition(
        state.dims,
        state.interior_spec.phase,
        state.interior_spec.res,
        state.formation,
        attack,
    )


class BorderStrategy:
    """Stateful adapter driving the border strategy through the referee."""

    strategy_id = "border"

    def __init__(self, dims: GridDims):
        self.dims = GridDims(*dims)
        _check_dims(self.dims)
        self._state = init_state(self.dims)

    def reset(self) -> Configuration:
        self._state = init_state(self.dims)
        return self._state.guards()

    @property
    def state(self) -> FiniteStrategyState:
        return self._state

    def respond(self, attack: Vertex) -> AttackResponse:
        response, self._state = respond(self._state, attack)
        return response

    def snapshot(self) -> dict:
        return self._state.to_json()
