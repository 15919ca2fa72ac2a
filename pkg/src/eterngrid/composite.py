"""General finite grids (n, m >= 9): largest good subgrid plus guarded strips.

The largest a x b subgrid with a = b = 2 (mod 7) is anchored at the corner
opposite the leftovers and runs the border strategy unchanged.  The
remaining m-b rows (full width) and n-a columns (remaining height) overlap
near one corner and are guarded separately, one guard per block of
Chebyshev diameter <= 1, so a block guard can always step onto any
attacked cell of its block without help.

Block layout.  Leftover rows are taken in pairs from the bottom, two full-
width rows per unit, ceil(n/2) blocks each (2x2, with a 1x2 tail when n is
odd).  An odd row count makes the last unit's blocks span the boundary row
pair inside the strip corner and a single row beside the subgrid.  Leftover
columns are taken in pairs, with blocks paired over the full height but
keeping only those clear of the row-strip region: each column unit keeps
ceil(m/2) - alpha blocks, which yields the advertised total

    alpha * ceil(n/2) + beta * ceil(m/2) - alpha * beta.

The two guard pools never mix: strip guards stay inside their blocks and
subgrid guards stay inside the subgrid.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Tuple

from . import border
from .grid import Configuration, DomainError, GridDims, Rect, Vertex, in_bounds
from .responder import AttackResponse, GuardMove, empty_response

ALPHA_TABLE = {2: 0, 3: 1, 4: 1, 5: 2, 6: 2, 0: 3, 1: 3}


@dataclass(frozen=True)
class Decomposition:
    dims: GridDims
    a: int
    b: int
    alpha: int
    beta: int
    strip_rows: Rect  # full-width leftover rows (height may be 0 -> None)
    strip_cols: Rect
    subgrid: Rect

    def subgrid_offset(self) -> Tuple[int, int]:
        return (self.subgrid.x0, self.subgrid.y0)


def decompose(dims: GridDims, swap_roles: bool = False) -> Decomposition:
    """Unique maximal decomposition per the divisibility rules.

    The published case tables key alpha on m mod 7 and beta on n mod 7,
    with alpha paying for the leftover rows; that reading is
    self-consistent (alpha always equals ceil((m-b)/2)) and is the
    default.  ``swap_roles`` applies the sometimes-suspected transposed
    reading (alpha keyed on n, beta on m) instead; whenever
    n != m (mod 7) that reading buys the wrong number of row/column units
    and cannot cover the leftovers, which is reported as a DomainError --
    evidence that the printed orientation is the intended one.
    """
    dims = GridDims(*dims)
    n, m = dims
    if n < 9 or m < 9:
        raise DomainError(f"composite strategy needs n, m >= 9, got {n}x{m}")
    a = n - ((n - 2) % 7)
    b = m - ((m - 2) % 7)
    alpha = ALPHA_TABLE[(n if swap_roles else m) % 7]
    beta = ALPHA_TABLE[(m if swap_roles else n) % 7]
    if alpha != -(-(m - b) // 2) or beta != -(-(n - a) // 2):
        raise DomainError(
            f"role-swapped tables cannot cover the leftovers of {n}x{m}: "
            f"alpha={alpha} for {m - b} rows, beta={beta} for {n - a} columns"
        )
    # Degenerate rects are not representable; keep width/height >= 1 and
    # rely on alpha/beta == 0 to mean "no strip".
    strip_rows = Rect(0, 0, n, max(m - b, 1))
    strip_cols = Rect(0, 0, max(n - a, 1), m)
    return Decomposition(
        dims=dims,
        a=a,
        b=b,
        alpha=alpha,
        beta=beta,
        strip_rows=strip_rows,
        strip_cols=strip_cols,
        subgrid=Rect(n - a, m - b, a, b),
    )


@dataclass(frozen=True)
class Block:
    cells: Tuple[Vertex, ...]

    def __post_init__(self) -> None:
        for u in self.cells:
            for v in self.cells:
                if max(abs(u.x - v.x), abs(u.y - v.y)) > 1:
                    raise AssertionError(f"block diameter > 1: {self.cells}")


def _row_unit_blocks(dec: Decomposition, rows: Tuple[int, ...], clip_to_strip: bool) -> List[Block]:
    """Full-width blocks over the given rows; when ``clip_to_strip`` the
    upper row is kept only left of the subgrid."""
    n = dec.dims.n
    boundary = dec.dims.n - dec.a
    blocks = []
    for x0 in range(0, n, 2):
        xs = [x for x in (x0, x0 + 1) if x < n]
        cells = []
        for y in rows:
            for x in xs:
                if clip_to_strip and y >= dec.dims.m - dec.b and x >= boundary:
                    continue
                cells.append(Vertex(x, y))
        if cells:
            blocks.append(Block(tuple(cells)))
    return blocks


def _col_unit_blocks(dec: Decomposition, cols: Tuple[int, ...], y_start: int) -> List[Block]:
    m = dec.dims.m
    blocks = []
    for y0 in range(0, m, 2):
        ys = [y for y in (y0, y0 + 1) if y < m]
        if ys[-1] < y_start:
            continue  # owned by the row strips
        cells = tuple(Vertex(x, y) for y in ys for x in cols)
        blocks.append(Block(cells))
    return blocks


def strip_blocks(dec: Decomposition) -> Tuple[Block, ...]:
    n, m = dec.dims
    rows_left = m - dec.b
    cols_left = n - dec.a
    blocks: List[Block] = []

    full_pairs = rows_left // 2
    for r in range(full_pairs):
        blocks.extend(_row_unit_blocks(dec, (2 * r, 2 * r + 1), clip_to_strip=False))
    if rows_left % 2:
        # Last unit owns the final leftover row across the full width plus,
        # left of the subgrid, the boundary row above it.
        blocks.extend(_row_unit_blocks(dec, (rows_left - 1, rows_left), clip_to_strip=True))

    y_start = rows_left + (rows_left % 2)
    for s in range(cols_left // 2):
        blocks.extend(_col_unit_blocks(dec, (2 * s, 2 * s + 1), y_start))
    if cols_left % 2:
        blocks.extend(_col_unit_blocks(dec, (cols_left - 1,), y_start))

    expected = dec.alpha * (-(-n // 2)) + dec.beta * (-(-m // 2)) - dec.alpha * dec.beta
    if len(blocks) != expected:
        raise AssertionError(
            f"strip block count {len(blocks)} != formula {expected} for {n}x{m}"
        )
    seen: Dict[Vertex, int] = {}
    for i, blk in enumerate(blocks):
        for c in blk.cells:
            if c in seen:
                raise AssertionError(f"cell {tuple(c)} in two blocks")
            seen[c] = i
    for y in range(m):
        for x in range(n):
            inside_subgrid = x >= n - dec.a and y >= m - dec.b
            if inside_subgrid != (Vertex(x, y) not in seen):
                raise AssertionError(f"ownership mismatch at {(x, y)}")
    return tuple(blocks)


@dataclass(frozen=True)
class StripState:
    blocks: Tuple[Block, ...]
    guards: Tuple[Vertex, ...]  # one per block, inside it

    def owner_of(self, v: Vertex) -> Optional[int]:
        for i, blk in enumerate(self.blocks):
            if v in blk.cells:
                return i
        return None

    def to_json(self) -> dict:
        return {
            "blocks": [[[c.x, c.y] for c in blk.cells] for blk in self.blocks],
            "guards": [[g.x, g.y] for g in self.guards],
        }


def init_strips(dec: Decomposition) -> StripState:
    blocks = strip_blocks(dec)
    return StripState(blocks, tuple(min(blk.cells) for blk in blocks))


@dataclass(frozen=True)
class CompositeState:
    decomposition: Decomposition
    inner: border.FiniteStrategyState  # subgrid-local coordinates
    strips: StripState

    def guards(self) -> Configuration:
        ox, oy = self.decomposition.subgrid_offset()
        out = set(self.strips.guards)
        for g in self.inner.guards():
            out.add(Vertex(g.x + ox, g.y + oy))
        return frozenset(out)

    def to_json(self) -> dict:
        from .grid import config_to_json

        ox, oy = self.decomposition.subgrid_offset()
        inner_json = self.inner.to_json()
        inner_json["dims"] = [self.decomposition.dims.n, self.decomposition.dims.m]
        inner_json["guards"] = config_to_json(self.guards())
        roles = inner_json["roles"]
        for key in ("corner", "border", "interior"):
            roles[key] = [[x + ox, y + oy] for x, y in roles[key]]
        roles["strips"] = config_to_json(frozenset(self.strips.guards))
        inner_json["subgrid"] = [ox, oy, self.decomposition.a, self.decomposition.b]
        inner_json["strips"] = self.strips.to_json()
        return inner_json


def guard_count(dims: GridDims) -> int:
    """Exact Theorem-3 style bound: ab/7 + 8(a+b-1)/7 + alpha*ceil(n/2)
    + beta*ceil(m/2) - alpha*beta."""
    dec = decompose(dims)
    n, m = dec.dims
    strips = dec.alpha * (-(-n // 2)) + dec.beta * (-(-m // 2)) - dec.alpha * dec.beta
    return border.guard_count(GridDims(dec.a, dec.b)) + strips


def init_state(dims: GridDims) -> CompositeState:
    dec = decompose(dims)
    state = CompositeState(
        decomposition=dec,
        inner=border.init_state(GridDims(dec.a, dec.b)),
        strips=init_strips(dec),
    )
    count = len(state.guards())
    expected = guard_count(dims)
    assert count == expected, f"constructed {count} guards, formula says {expected}"
    return state


def _translate_response(resp: AttackResponse, ox: int, oy: int) -> AttackResponse:
    return AttackResponse(
        Vertex(resp.attacked.x + ox, resp.attacked.y + oy),
        frozenset(Vertex(v.x + ox, v.y + oy) for v in resp.anchors),
        tuple(
            GuardMove(Vertex(m.src.x + ox, m.src.y + oy), Vertex(m.dst.x + ox, m.dst.y + oy))
            for m in resp.moves
        ),
    )


def respond(state: CompositeState, attack: Vertex) -> Tuple[AttackResponse, CompositeState]:
    """Two disjoint strategies: delegate subgrid attacks, answer strip
    attacks with the owning block's guard."""
    attack = Vertex(*attack)
    dec = state.decomposition
    if not in_bounds(attack, dec.dims):
        raise DomainError(f"attack {tuple(attack)} outside grid")
    ox, oy = dec.subgrid_offset()
    if dec.subgrid.contains(attack):
        local = Vertex(attack.x - ox, attack.y - oy)
        resp, inner2 = border.respond(state.inner, local)
        return _translate_response(resp, ox, oy), replace(state, inner=inner2)
    idx = state.strips.owner_of(attack)
    assert idx is not None
    guard = state.strips.guards[idx]
    if guard == attack:
        return empty_response(attack), state
    move = GuardMove(guard, attack)
    guards = list(state.strips.guards)
    guards[idx] = attack
    new_strips = replace(state.strips, guards=tuple(guards))
    response = AttackResponse(attack, frozenset(), (move,))
    return response, replace(state, strips=new_strips)


class CompositeStrategy:
    """Stateful adapter driving the composite strategy through the referee."""

    strategy_id = "composite"

    def __init__(self, dims: GridDims):
        self.dims = GridDims(*dims)
        self._state = init_state(self.dims)

    def reset(self) -> Configuration:
        self._state = init_state(self.dims)
        return self._state.guards()

    @property
    def state(self) -> CompositeState:
        return self._state

    def respond(self, attack: Vertex) -> AttackResponse:
        response, self._state = respond(self._state, attack)
        return response

    def snapshot(self) -> dict:
        return self._state.to_json()


def make_strategy(kind: str, dims: GridDims):
    if kind == "border":
        return border.BorderStrategy(dims)
    if kind == "composite":
        return CompositeStrategy(dims)
    raise DomainError(f"unknown strategy {kind!r}")
