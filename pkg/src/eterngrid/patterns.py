"""The two periodic dominating families D and D' on the infinite king graph.

Both families are translates of rank-2 integer lattices of determinant 7,
so each has density one guard per seven vertices and contains (7,0) and
(0,7).  Starting from the generating rules (a member (i,j) implies members
(i+2,j+1) and (i-1,j+3) for D, and the analogous pair for D'):

    D  = base + <(2,1), (7,7)>     membership: (y - 4x) mod 7 constant
    D' = base + <(1,3), (2,-1)>    membership: (x + 2y) mod 7 constant

Membership therefore reduces to one modular residue, which also serves as
the class label used by the responder: the quotient of either lattice by
the 7x7 torus has exactly 7 classes, one per column and one per row.

A translate is identified by any of its members; the canonical base is the
unique member inside the fundamental 7x7 tile at the origin with minimal
(y, x).  Two PatternSpecs are equal iff their member sets are equal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .grid import Configuration, Rect, Vertex


class PatternPhase(enum.Enum):
    D = "D"
    DPRIME = "Dprime"

    def opposite(self) -> "PatternPhase":
        return PatternPhase.DPRIME if self is PatternPhase.D else PatternPhase.D


# Lattice bases, exposed for tests; membership below never enumerates them.
GENERATORS = {
    PatternPhase.D: ((2, 1), (7, 7)),
    PatternPhase.DPRIME: ((1, 3), (2, -1)),
}


def residue(phase: PatternPhase, v: Vertex) -> int:
    """The translate-identifying residue of v under the given phase lattice."""
    if phase is PatternPhase.D:
        return (v[1] - 4 * v[0]) % 7
    return (v[0] + 2 * v[1]) % 7


def _column_row_residue(phase: PatternPhase, c: int, x: int) -> int:
    """Row residue (mod 7) of the unique member in column-class x."""
    if phase is PatternPhase.D:
        return (4 * x + c) % 7
    # x + 2y = c  =>  y = 4(c - x)  since 2*4 = 8 = 1 (mod 7)
    return (4 * (c - x)) % 7


@dataclass(frozen=True)
class PatternSpec:
    """One translate of a pattern family: phase plus any anchoring member.

    The stored base is kept as given; equality and hashing go through the
    canonical base so equivalent anchorings compare equal.
    """

    phase: PatternPhase
    base: Vertex

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", Vertex(*self.base))

    @property
    def res(self) -> int:
        return residue(self.phase, self.base)

    def canonical_base(self) -> Vertex:
        """The member of the fundamental 7x7 tile with minimal (y, x)."""
        best = None
        for x in range(7):
            y = _column_row_residue(self.phase, self.res, x)
            if best is None or (y, x) < best:
                best = (y, x)
        return Vertex(best[1], best[0])

    def canonical(self) -> "PatternSpec":
        return PatternSpec(self.phase, self.canonical_base())

    def contains(self, v: Vertex) -> bool:
        return residue(self.phase, v) == self.res

    def member_in_column(self, x: int, y_lo: int, y_hi: int):
        """Yield members (x, y) with y_lo <= y < y_hi."""
        ry = _column_row_residue(self.phase, self.res, x % 7)
        start = y_lo + ((ry - y_lo) % 7)
        for y in range(start, y_hi, 7):
            yield Vertex(x, y)

    def window(self, rect: Rect) -> Configuration:
        """All members inside rect."""
        out = []
        for x in range(rect.x0, rect.x0 + rect.w):
            out.extend(self.member_in_column(x, rect.y0, rect.y0 + rect.h))
        return frozenset(out)

    def to_json(self) -> dict:
        b = self.canonical_base()
        return {"phase": self.phase.value, "base": [b.x, b.y]}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PatternSpec):
            return NotImplemented
        return self.phase is other.phase and self.res == other.res

    def __hash__(self) -> int:
        return hash((self.phase, self.res))


def spec_through(phase: PatternPhase, v: Vertex) -> PatternSpec:
    """The unique translate of the given phase containing v."""
    return PatternSpec(phase, Vertex(*v))


def spec_from_json(obj: dict) -> PatternSpec:
    return PatternSpec(PatternPhase(obj["phase"]), Vertex(*obj["base"]))


def contains(spec: PatternSpec, v: Vertex) -> bool:
    return spec.contains(Vertex(*v))


def window(spec: PatternSpec, rect: Rect) -> Configuration:
    return spec.window(rect)


def identify(config: Configuration, rect: Rect) -> Optional[PatternSpec]:
    """Recover the unique spec whose window over rect equals config.

    Returns None for the empty configuration, when no translate of either
    phase matches, or in the degenerate small-window case where both
    phases match (windows containing a full 7x7 tile are always
    unambiguous).
    """
    if not config:
        return None
    probe = min(config)
    matches = []
    for phase in (PatternPhase.D, PatternPhase.DPRIME):
        cand = spec_through(phase, probe)
        if cand.window(rect) == config:
            matches.append(cand.canonical())
    if len(matches) == 1:
        return matches[0]
    return None
