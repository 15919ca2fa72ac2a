"""Game loop and legality checking for the all-guards-move model.

The referee is strategy-agnostic: a transition from one configuration to
another is legal exactly when a perfect king-step matching exists between
them, the guard count is unchanged, the attacked vertex ends up occupied,
and the new configuration dominates the grid.  A strategy's reported move
list is used only as a certificate that can prove matching existence
cheaply; if it does not check out, the referee falls back to solving the
matching itself, so mislabeled moves cannot fool it.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Protocol, Sequence, Tuple

import numpy as np
from scipy import ndimage

from .grid import (
    Configuration,
    DomainError,
    GridDims,
    Rect,
    Vertex,
    chebyshev_distance,
    config_to_json,
    in_bounds,
)
from .matching import perfect_matching
from .responder import AttackResponse, GuardMove, TransitionError
from .responder import apply as apply_response

NOT_ADJACENT_MOVE = "NOT_ADJACENT_MOVE"
VERTEX_COLLISION = "VERTEX_COLLISION"
ATTACK_UNSERVED = "ATTACK_UNSERVED"
DOMINATION_LOST = "DOMINATION_LOST"
GUARD_COUNT_CHANGED = "GUARD_COUNT_CHANGED"
SOURCE_MISSING = "SOURCE_MISSING"


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str

    def to_json(self) -> dict:
        return {"code": self.code, "detail": self.detail}


@dataclass(frozen=True)
class TransitionVerdict:
    violations: Tuple[Violation, ...] = ()

    @property
    def legal(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"legal": self.legal, "violations": [v.to_json() for v in self.violations]}


def _occupancy(config: Configuration, dims: GridDims) -> np.ndarray:
    occ = np.zeros((dims.m, dims.n), dtype=bool)
    for v in config:
        occ[v.y, v.x] = True
    return occ


def dominates_fast(config: Configuration, dims: GridDims) -> bool:
    """Vectorised equivalent of grid.is_dominating (3x3 box dilation)."""
    if not config:
        return False
    occ = _occupancy(config, dims)
    cov = occ.copy()
    cov[1:] |= occ[:-1]
    cov[:-1] |= occ[1:]
    cov2 = cov.copy()
    cov2[:, 1:] |= cov[:, :-1]
    cov2[:, :-1] |= cov[:, 1:]
    return bool(cov2.all())


def movement_feasible(
    before: Configuration,
    after: Configuration,
    certificate: Optional[AttackResponse] = None,
) -> bool:
    """Does a perfect king-step matching take ``before`` to ``after``?

    A valid certificate (its application reproduces ``after`` exactly)
    proves feasibility constructively; otherwise Hopcroft-Karp decides.
    """
    if len(before) != len(after):
        return False
    if certificate is not None:
        try:
            if apply_response(before, certificate) == after:
                return True
        except TransitionError:
            pass
    stay = before & after
    move_from = sorted(before - after)
    move_to = sorted(after - before)
    adj = {
        u: [v for v in move_to if chebyshev_distance(u, v) <= 1]
        for u in move_from
    }
    if perfect_matching(adj, len(move_to)) is not None:
        return True
    # Pinning common vertices is usually optimal but not complete; decide
    # exactly on the full bipartite graph before declaring infeasibility.
    full_from = sorted(before)
    full_to = sorted(after)
    adj = {
        u: [v for v in full_to if chebyshev_distance(u, v) <= 1]
        for u in full_from
    }
    return perfect_matching(adj, len(full_to)) is not None


def validate_transition(
    before: Configuration,
    after: Configuration,
    attack: Vertex,
    dims: Optional[GridDims] = None,
    *,
    scope: Optional[Rect] = None,
    certificate: Optional[AttackResponse] = None,
) -> TransitionVerdict:
    """Judge one attack-response transition.

    Exactly one of ``dims`` (finite grid) or ``scope`` (window of an
    infinite pattern) selects the domination check; window domination is
    required on the rect shrunk by one cell, since dominators of the rim
    may legitimately sit outside the window.
    """
    attack = Vertex(*attack)
    violations: List[Violation] = []
    if len(after) != len(before):
        violations.append(
            Violation(GUARD_COUNT_CHANGED, f"{len(before)} -> {len(after)}")
        )
    if attack not in after:
        violations.append(Violation(ATTACK_UNSERVED, f"{tuple(attack)} unoccupied"))
    if dims is not None:
        dominated = dominates_fast(after, dims)
    elif scope is not None:
        from .grid import dominates_rect

        dominated = dominates_rect(after, scope.shrink(1))
    else:
        raise DomainError("validate_transition needs dims or scope")
    if not dominated:
        violations.append(Violation(DOMINATION_LOST, "some vertex uncovered"))
    if len(after) == len(before) and not movement_feasible(before, after, certificate):
        violations.append(
            Violation(NOT_ADJACENT_MOVE, "no king-step perfect matching")
        )
    return TransitionVerdict(tuple(violations))


def config_hash(config: Configuration) -> str:
    payload = json.dumps(config_to_json(config), separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# Attackers


class Strategy(Protocol):  # pragma: no cover - structural typing only
    strategy_id: str
    dims: GridDims

    def reset(self) -> Configuration: ...

    def respond(self, attack: Vertex) -> AttackResponse: ...

    def snapshot(self) -> dict: ...


def greedy_attack(config: Configuration, dims: GridDims) -> Vertex:
    """The vertex furthest (Euclidean) from all guards; ties go to the
    lexicographically smallest (x, y).  Deterministic: squared distances
    are integers, so the float transform ties exactly."""
    if not config:
        return Vertex(0, 0)
    occ = _occupancy(config, dims)
    dist = ndimage.distance_transform_edt(~occ)
    best = dist.max()
    ys, xs = np.nonzero(dist == best)
    order = np.lexsort((ys, xs))
    i = order[0]
    return Vertex(int(xs[i]), int(ys[i]))


class RandomAttacker:
    """Uniform attacks over all cells (occupied cells included: attacking
    a guarded vertex is legal and needs no response)."""

    kind = "random"

    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)

    def next_attack(self, config: Configuration, dims: GridDims) -> Vertex:
        return Vertex(self._rng.randrange(dims.n), self._rng.randrange(dims.m))

    def describe(self) -> str:
        return f"random(seed={self.seed})"


class GreedyAttacker:
    kind = "greedy"

    def next_attack(self, config: Configuration, dims: GridDims) -> Vertex:
        return greedy_attack(config, dims)

    def describe(self) -> str:
        return "greedy"


class ScriptedAttacker:
    kind = "scripted"

    def __init__(self, attacks: Sequence):
        self.attacks = [Vertex(*a) for a in attacks]
        self._i = 0

    def next_attack(self, config: Configuration, dims: GridDims) -> Vertex:
        if self._i >= len(self.attacks):
            raise IndexError("scripted attack list exhausted")
        v = self.attacks[self._i]
        self._i += 1
        if not in_bounds(v, dims):
            raise DomainError(f"scripted attack {tuple(v)} outside grid")
        return v

    def describe(self) -> str:
        return f"scripted({len(self.attacks)})"


def make_attacker(kind: str, *, seed: int = 0, attacks: Optional[Sequence] = None):
    if kind == "random":
        return RandomAttacker(seed)
    if kind == "greedy":
        return GreedyAttacker()
    if kind == "scripted":
        return ScriptedAttacker(attacks or [])
    raise DomainError(f"unknown attacker kind {kind!r}")


# ---------------------------------------------------------------------------
# Transcripts and the simulation loop


@dataclass(frozen=True)
class StepRecord:
    index: int
    attack: Vertex
    response: Optional[AttackResponse]
    verdict: TransitionVerdict
    post_hash: str

    def to_json(self) -> dict:
        return {
            "step": self.index,
            "attack": [self.attack.x, self.attack.y],
            "response": self.response.to_json() if self.response else None,
            "verdict": self.verdict.to_json(),
            "post_hash": self.post_hash,
        }


@dataclass
class GameTranscript:
    dims: GridDims
    strategy_id: str
    attacker: str
    seed: int
    initial: Configuration
    steps: List[StepRecord] = field(default_factory=list)
    halted_early: bool = False

    @property
    def violation_count(self) -> int:
        return sum(0 if s.verdict.legal else 1 for s in self.steps)

    def header_json(self) -> dict:
        return {
            "dims": [self.dims.n, self.dims.m],
            "strategy": self.strategy_id,
            "attacker": self.attacker,
            "seed": self.seed,
            "initial": config_to_json(self.initial),
            "initial_hash": config_hash(self.initial),
        }

    def to_jsonl(self) -> str:
        lines = [json.dumps(self.header_json(), sort_keys=True, separators=(",", ":"))]
        for s in self.steps:
            lines.append(json.dumps(s.to_json(), sort_keys=True, separators=(",", ":")))
        return "\n".join(lines) + "\n"


def simulate(
    dims: GridDims,
    strategy: Strategy,
    attacker,
    steps: int,
    seed: int = 0,
    *,
    on_step: Optional[Callable[[StepRecord], None]] = None,
) -> GameTranscript:
    """Run attack -> respond -> validate for ``steps`` turns.

    Halts at the first violation.  Identical (dims, strategy id, attacker,
    seed) reproduce the transcript bit for bit.
    """
    if steps < 0:
        raise DomainError("steps must be >= 0")
    config = strategy.reset()
    transcript = GameTranscript(
        dims=dims,
        strategy_id=strategy.strategy_id,
        attacker=attacker.describe(),
        seed=seed,
        initial=config,
    )
    for i in range(steps):
        attack = attacker.next_attack(config, dims)
        violations: List[Violation] = []
        response: Optional[AttackResponse] = None
        after = config
        try:
            response = strategy.respond(attack)
            after = apply_response(config, response)
        except TransitionError as exc:
            violations.append(Violation(exc.code, exc.detail))
        verdict = validate_transition(
            config, after, attack, dims, certificate=response
        )
        if violations:
            verdict = TransitionVerdict(tuple(violations) + verdict.violations)
        record = StepRecord(i, Vertex(*attack), response, verdict, config_hash(after))
        transcript.steps.append(record)
        if on_step is not None:
            on_step(record)
        if not verdict.legal:
            transcript.halted_early = True
            break
        config = after
    return transcript


def replay_jsonl(lines: Iterable[str]) -> Tuple[int, int]:
    """Re-validate a stored transcript; returns (steps checked, violations).

    Each step is replayed against the running configuration by re-applying
    the recorded response and re-judging the transition, and the recorded
    hash is checked.
    """
    it = iter(lines)
    header = json.loads(next(it))
    dims = GridDims(*header["dims"])
    config = frozenset(Vertex(*v) for v in header["initial"])
    checked = violations = 0
    for line in it:
        if not line.strip():
            continue
        rec = json.loads(line)
        attack = Vertex(*rec["attack"])
        resp = rec["response"]
        moves = tuple(
            GuardMove(Vertex(*m["from"]), Vertex(*m["to"])) for m in resp["moves"]
        )
        anchors = frozenset(Vertex(*a) for a in resp["anchors"])
        response = AttackResponse(Vertex(*resp["attacked"]), anchors, moves)
        after = apply_response(config, response)
        verdict = validate_transition(config, after, attack, dims, certificate=response)
        checked += 1
        if not verdict.legal or config_hash(after) != rec["post_hash"]:
            violations += 1
        config = after
    return checked, violations
