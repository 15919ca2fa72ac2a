"""Deterministic maximum bipartite matching (Hopcroft-Karp).

Used by the responder (guard relocation), the referee (all-guards-move
legality), the finite-grid strategies (border reconciliation), and the
exact oracle (configuration transitions).  Determinism matters for
replayable transcripts, so the algorithm avoids set iteration: results
depend only on the insertion order of the adjacency mapping, which callers
build in sorted order.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, Optional

_INF = -1


def hopcroft_karp(adj: Dict, seed: Optional[Dict] = None) -> Dict:
    """Maximum matching for the bipartite graph {left: [right, ...]}.

    ``seed`` optionally supplies an initial (partial) matching, e.g. the
    obvious identity pairs; invalid seed entries are ignored.  Returns a
    dict mapping matched left vertices to right vertices.
    """
    pair_left: Dict = {}
    pair_right: Dict = {}
    if seed:
        for u, v in seed.items():
            if u in adj and v in adj[u] and u not in pair_left and v not in pair_right:
                pair_left[u] = v
                pair_right[v] = u

    dist: Dict = {}

    def bfs() -> bool:
        queue = deque()
        for u in adj:
            if u not in pair_left:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = pair_right.get(v)
                if w is None:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u) -> bool:
        for v in adj[u]:
            w = pair_right.get(v)
            if w is None or (dist[w] == dist[u] + 1 and dfs(w)):
                pair_left[u] = v
                pair_right[v] = u
                return True
        dist[u] = _INF
        return False

    while bfs():
        for u in adj:
            if u not in pair_left:
                dfs(u)
    return pair_left


def perfect_matching(adj: Dict, right_size: int, seed: Optional[Dict] = None) -> Optional[Dict]:
    """A perfect matching covering all of ``adj`` and all ``right_size``
    right vertices, or None if none exists."""
    if len(adj) != right_size:
        return None
    match = hopcroft_karp(adj, seed)
    if len(match) != len(adj):
        return None
    return match


def augment_max_matching(adj: Dict, seed: Optional[Dict] = None) -> Dict:
    """Maximum matching by Kuhn augmentation from a seed matching.

    Equivalent to hopcroft_karp but much faster when the seed already
    covers almost everything (one alternating-path search per unseeded
    left vertex).  Deterministic for a given adjacency order.
    """
    pair_left: Dict = {}
    pair_right: Dict = {}
    if seed:
        for u, v in seed.items():
            if u in adj and v in adj[u] and u not in pair_left and v not in pair_right:
                pair_left[u] = v
                pair_right[v] = u

    def try_augment(u, visited) -> bool:
        for v in adj[u]:
            if v in visited:
                continue
            visited.add(v)
            w = pair_right.get(v)
            if w is None or try_augment(w, visited):
                pair_left[u] = v
                pair_right[v] = u
                return True
        return False

    for u in adj:
        if u not in pair_left:
            try_augment(u, set())
    return pair_left
