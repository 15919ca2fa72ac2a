"""Exact eternal domination numbers for tiny graphs.

Greatest-fixed-point elimination over the configuration game graph: start
from every dominating k-subset, repeatedly delete configurations that fail
to defend some attacked vertex (no surviving successor that contains the
attack and is reachable by an all-guards king... graph move), and read the
answer off the first k whose fixed point is nonempty.  The fixed point is
the greatest one, so it does not depend on deletion order; eliminations
here run in bulk-synchronous rounds, which is deterministic, and a
sequential mode exists so tests can confirm order independence.

Configurations are vertex bitmasks; transition feasibility (a perfect
matching of guards onto the successor along closed neighbourhoods) is
decided by augmenting-path matching and memoised, since the same pair is
queried across rounds.

This is the ground truth for small instances only; grids at strategy scale
are far beyond exhaustive reach.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .grid import DomainError

DEFAULT_VERTEX_CAP = 16


class ResourceCapError(DomainError):
    """The graph exceeds the exhaustive-search vertex cap."""


@dataclass(frozen=True)
class SmallGraph:
    """Simple undirected graph on vertices 0..n-1 with bitmask adjacency."""

    n: int
    adj: Tuple[int, ...]  # adj[v] = bitmask of neighbours, v excluded

    @staticmethod
    def from_edges(n: int, edges: Sequence[Tuple[int, int]]) -> "SmallGraph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) out of range")
            if u == v:
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return SmallGraph(n, tuple(adj))

    def closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def edges(self) -> List[Tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.adj[u] >> v & 1:
                    out.append((u, v))
        return out


def path_graph(n: int) -> SmallGraph:
    return SmallGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SmallGraph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    return SmallGraph.from_edges(n, edges)


def strong_grid_graph(n: int, m: int) -> SmallGraph:
    """P_n x| P_m with vertices numbered x + n*y."""
    edges = []
    for y in range(m):
        for x in range(n):
            u = x + n * y
            for dx in (-1, 0, 1):
                for dy in (-1, 0, 1):
                    if dx == dy == 0:
                        continue
                    nx, ny = x + dx, y + dy
                    if 0 <= nx < n and 0 <= ny < m:
                        v = nx + n * ny
                        if u < v:
                            edges.append((u, v))
    return SmallGraph.from_edges(n * m, edges)


def parse_graph(spec: str) -> SmallGraph:
    """path:N | cycle:N | strong:NxM | a filename of 'u v' edge lines."""
    if ":" in spec:
        kind, arg = spec.split(":", 1)
        if kind == "path":
            return path_graph(int(arg))
        if kind == "cycle":
            return cycle_graph(int(arg))
        if kind == "strong":
            n, m = arg.lower().split("x")
            return strong_grid_graph(int(n), int(m))
        raise DomainError(f"unknown graph generator {kind!r}")
    with open(spec) as fh:
        return parse_edge_list(fh.read())


def parse_edge_list(text: str) -> SmallGraph:
    edges = []
    hi = -1
    for line in text.splitlines():
        line = line.split("#")[0].strip()
        if not line:
            continue
        u, v = (int(t) for t in line.split())
        edges.append((u, v))
        hi = max(hi, u, v)
    return SmallGraph.from_edges(hi + 1, edges)


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def is_dominating_mask(g: SmallGraph, mask: int) -> bool:
    cover = 0
    for v in _bits(mask):
        cover |= g.closed(v)
    return cover == (1 << g.n) - 1


def dominating_sets(g: SmallGraph, k: int) -> List[int]:
    out = []
    for combo in itertools.combinations(range(g.n), k):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if is_dominating_mask(g, mask):
            out.append(mask)
    return out


def domination_number(g: SmallGraph) -> int:
    for k in range(1, g.n + 1):
        if dominating_sets(g, k):
            return k
    raise AssertionError("whole vertex set always dominates")


def transition_feasible(g: SmallGraph, frm: int, to: int) -> bool:
    """Perfect matching of guards from ``frm`` onto ``to`` where every
    guard moves within its closed neighbourhood."""
    if frm == to:
        return True
    src = _bits(frm)
    dst = _bits(to)
    if len(src) != len(dst):
        return False
    pair_to: Dict[int, int] = {}

    def try_assign(u: int, banned: int) -> Tuple[bool, int]:
        choices = g.closed(u) & to
        for v in _bits(choices):
            if banned >> v & 1:
                continue
            banned |= 1 << v
            w = pair_to.get(v)
            if w is None:
                pair_to[v] = u
                return True, banned
            ok, banned = try_assign(w, banned)
            if ok:
                pair_to[v] = u
                return True, banned
        return False, banned

    for u in src:
        ok, _ = try_assign(u, 0)
        if not ok:
            return False
    return True


@dataclass
class SafeSet:
    """Configurations of k guards surviving the elimination fixed point."""

    k: int
    configurations: FrozenSet[int]


class _TransitionCache:
    def __init__(self, g: SmallGraph):
        self.g = g
        self.cache: Dict[Tuple[int, int], bool] = {}

    def feasible(self, frm: int, to: int) -> bool:
        key = (frm, to)
        hit = self.cache.get(key)
        if hit is None:
            hit = transition_feasible(self.g, frm, to)
            self.cache[key] = hit
        return hit


def _defended(g: SmallGraph, cache: _TransitionCache, cfg: int, alive, by_vertex) -> bool:
    for v in range(g.n):
        if cfg >> v & 1:
            continue  # occupied: the identity transition defends
        ok = False
        for succ in by_vertex[v]:
            if succ in alive and cache.feasible(cfg, succ):
                ok = True
                break
        if not ok:
            return False
    return True


def safe_set(g: SmallGraph, k: int, *, order: str = "rounds") -> SafeSet:
    """The greatest set of mutually-defensible dominating k-configurations.

    ``order`` picks the elimination schedule ("rounds" is bulk-synchronous;
    "sequential" and "sequential-reversed" re-check eagerly in a fixed
    scan order); all schedules reach the same fixed point.
    """
    cands = dominating_sets(g, k)
    alive = set(cands)
    cache = _TransitionCache(g)
    by_vertex: List[List[int]] = [[] for _ in range(g.n)]
    for cfg in cands:
        for v in _bits(cfg):
            by_vertex[v].append(cfg)

    if order == "rounds":
        while True:
            dead = [c for c in sorted(alive) if not _defended(g, cache, c, alive, by_vertex)]
            if not dead:
                break
            alive.difference_update(dead)
    elif order in ("sequential", "sequential-reversed"):
        scan = sorted(alive, reverse=order.endswith("reversed"))
        changed = True
        while changed:
            changed = False
            for c in scan:
                if c in alive and not _defended(g, cache, c, alive, by_vertex):
                    alive.discard(c)
                    changed = True
    else:
        raise DomainError(f"unknown elimination order {order!r}")
    return SafeSet(k, frozenset(alive))


def eternal_domination_number(
    g: SmallGraph,
    k_max: Optional[int] = None,
    *,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> Optional[int]:
    """Smallest k <= k_max with a nonempty safe set; None if all exceed
    k_max ("exceeds k_max")."""
    if g.n > vertex_cap:
        raise ResourceCapError(
            f"graph has {g.n} vertices, exhaustive cap is {vertex_cap}"
        )
    if k_max is None:
        k_max = -(-g.n // 2) + 1
    for k in range(domination_number(g), min(k_max, g.n) + 1):
        if safe_set(g, k).configurations:
            return k
    return None


def defends(g: SmallGraph, cfg: int, v: int, safe: SafeSet) -> bool:
    """Can ``cfg`` answer an attack on v inside the safe set?"""
    if cfg >> v & 1:
        return cfg in safe.configurations
    for succ in safe.configurations:
        if succ >> v & 1 and transition_feasible(g, cfg, succ):
            return True
    return False


def brute_force_defends(g: SmallGraph, cfg: int, v: int, safe: SafeSet) -> bool:
    """Independent check of ``defends``: enumerate every assignment of the
    guards to target vertices recursively, no matching machinery."""
    guards = _bits(cfg)

    def successors(i: int, used: int):
        if i == len(guards):
            yield used
            return
        for t in _bits(g.closed(guards[i]) & ~_occupied_mask(used, guards, i)):
            yield from successors(i + 1, used | (1 << t))

    def _occupied_mask(used: int, gs, i: int) -> int:
        return used

    if cfg >> v & 1:
        return cfg in safe.configurations
    seen = set()
    for succ in successors(0, 0):
        if succ in seen:
            continue
        seen.add(succ)
        if succ >> v & 1 and succ in safe.configurations:
            return True
    return False


def random_graph(n: int, p: float, seed: int) -> SmallGraph:
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return SmallGraph.from_edges(n, edges)
