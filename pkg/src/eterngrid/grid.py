"""Strong-grid (king graph) topology.

Vertices are integer lattice points (x, y) with x indexing the first path
factor (columns, length n) and y the second (rows, length m).  Two vertices
are adjacent exactly when their Chebyshev distance is 1, which gives every
interior vertex 8 neighbours (the king moves).  Finite grids restrict
coordinates to 0 <= x < n, 0 <= y < m; "infinite mode" simply means no
bounds are applied, and callers work with membership predicates or windows
instead of materialised vertex sets.

All values here are immutable and all functions pure, so they are safe to
share across concurrent simulation workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional


class DomainError(ValueError):
    """Raised when an argument violates a documented precondition."""


class Vertex(NamedTuple):
    """A grid vertex.  Serialises as the two-element array [x, y]."""

    x: int
    y: int

    def translate(self, dx: int, dy: int) -> "Vertex":
        return Vertex(self.x + dx, self.y + dy)


class GridDims(NamedTuple):
    """Dimensions of a finite strong grid P_n x| P_m (n columns, m rows)."""

    n: int
    m: int


# A configuration is a set of guard-occupied vertices; guards are
# indistinguishable and no two may share a vertex, so a frozenset is the
# canonical representation.
Configuration = frozenset


@dataclass(frozen=True)
class Rect:
    """Axis-aligned window [x0, x0+w) x [y0, y0+h) used for pattern windows."""

    x0: int
    y0: int
    w: int
    h: int

    def __post_init__(self) -> None:
        if self.w < 1 or self.h < 1:
            raise DomainError(f"rect extents must be positive, got {self.w}x{self.h}")

    def contains(self, v: Vertex) -> bool:
        return self.x0 <= v.x < self.x0 + self.w and self.y0 <= v.y < self.y0 + self.h

    def cells(self) -> Iterator[Vertex]:
        for y in range(self.y0, self.y0 + self.h):
            for x in range(self.x0, self.x0 + self.w):
                yield Vertex(x, y)

    def shrink(self, margin: int) -> "Rect":
        if self.w <= 2 * margin or self.h <= 2 * margin:
            raise DomainError("rect too small to shrink by %d" % margin)
        return Rect(self.x0 + margin, self.y0 + margin, self.w - 2 * margin, self.h - 2 * margin)


def parse_dims(text: str) -> GridDims:
    """Parse "NxM" into GridDims((n, m)); n is the first path factor."""
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise DomainError(f"dims must look like '9x9', got {text!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise DomainError(f"dims must be integers: {text!r}") from exc
    if n < 1 or m < 1:
        raise DomainError(f"dims must be >= 1, got {n}x{m}")
    return GridDims(n, m)


def in_bounds(v: Vertex, dims: GridDims) -> bool:
    return 0 <= v.x < dims.n and 0 <= v.y < dims.m


def chebyshev_distance(u: Vertex, v: Vertex) -> int:
    """max(|dx|, |dy|); two vertices are adjacent iff this equals 1."""
    return max(abs(u.x - v.x), abs(u.y - v.y))


def neighbors(v: Vertex, dims: Optional[GridDims] = None) -> frozenset:
    """All vertices at Chebyshev distance exactly 1, clipped to dims if given."""
    if dims is not None and not in_bounds(v, dims):
        raise DomainError(f"vertex {tuple(v)} outside grid {dims.n}x{dims.m}")
    out = []
    for dx in (-1, 0, 1):
        for dy in (-1, 0, 1):
            if dx == 0 and dy == 0:
                continue
            w = Vertex(v.x + dx, v.y + dy)
            if dims is None or in_bounds(w, dims):
                out.append(w)
    return frozenset(out)


def is_dominating(config: Configuration, dims: GridDims) -> bool:
    """True iff every grid vertex is within Chebyshev distance 1 of a guard.

    Straightforward reference implementation; the referee uses a vectorised
    equivalent on its hot path (the two are cross-checked by tests).
    """
    for g in config:
        if not in_bounds(g, dims):
            raise DomainError(f"guard {tuple(g)} outside grid {dims.n}x{dims.m}")
    covered = set()
    for g in config:
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                covered.add((g.x + dx, g.y + dy))
    for y in range(dims.m):
        for x in range(dims.n):
            if (x, y) not in covered:
                return False
    return True


def dominates_rect(config: Configuration, rect: Rect) -> bool:
    """True iff every cell of rect is within distance 1 of some guard.

    Used for infinite-grid windows, where guards just outside the window
    would cover a one-cell rim; callers shrink the rect accordingly.
    """
    covered = set()
    for g in config:
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                covered.add((g.x + dx, g.y + dy))
    return all((c.x, c.y) in covered for c in rect.cells())


def config_from(points: Iterable) -> Configuration:
    """Build a Configuration from (x, y) pairs, rejecting duplicates."""
    pts = [Vertex(int(x), int(y)) for x, y in points]
    cfg = frozenset(pts)
    if len(cfg) != len(pts):
        raise DomainError("duplicate guard positions in configuration")
    return cfg


def config_to_json(config: Configuration) -> list:
    """Canonical JSON form: sorted list of [x, y] pairs."""
    return [[v.x, v.y] for v in sorted(config)]
