import pytest

import eterngrid.responder as R
from eterngrid.grid import DomainError, Rect, Vertex
from eterngrid.patterns import PatternPhase, PatternSpec, identify, spec_through
from eterngrid.responder import (
    AttackResponse,
    GuardMove,
    InfeasibleResponseError,
    StrategyError,
    TransitionError,
    apply,
    matching_scope,
    respond_matching,
    respond_tabulated,
)
from eterngrid.tables import ATTACK_OFFSETS, PRINTED_D_ROWS

D0 = PatternSpec(PatternPhase.D, Vertex(0, 0))
DP0 = PatternSpec(PatternPhase.DPRIME, Vertex(0, 0))


def as_pairs(moves):
    return {((m.src.x, m.src.y), (m.dst.x, m.dst.y)) for m in moves}


class TestTabulated:
    def test_published_block_one_verbatim(self):
        r = respond_tabulated(D0, Vertex(0, -1))
        assert {(v.x, v.y) for v in r.anchors} == {(-1, 3), (-1, -4), (6, 3), (6, -4)}
        assert as_pairs(r.moves) == {
            ((0, 0), (0, -1)),
            ((1, -3), (2, -2)),
            ((3, -2), (4, -3)),
            ((5, -1), (5, 0)),
            ((4, 2), (3, 1)),
            ((2, 1), (1, 2)),
        }

    def test_all_published_blocks_verbatim(self):
        for delta, row in PRINTED_D_ROWS.items():
            r = respond_tabulated(D0, Vertex(*delta))
            assert {(v.x, v.y) for v in r.anchors} == {tuple(a) for a in row["anchors"]}
            assert as_pairs(r.moves) == {(tuple(s), tuple(t)) for s, t in row["moves"]}

    def test_fourth_block_contains_published_moves(self):
        r = respond_tabulated(D0, Vertex(1, 1))
        pairs = as_pairs(r.moves)
        assert ((0, 0), (1, 1)) in pairs
        assert ((2, 1), (3, 0)) in pairs

    def test_attack_on_occupied_vertex_is_empty(self):
        r = respond_tabulated(D0, Vertex(0, 0))
        assert r.is_empty

    def test_undominated_attack_is_a_strategy_error(self):
        # Cannot happen for a real translate (they dominate the plane), so
        # corrupt the membership test to exercise the guard.
        class Corrupted:
            phase = PatternPhase.D

            def contains(self, v):
                return False

        with pytest.raises(StrategyError):
            R.reference_member(Corrupted(), Vertex(3, 3))

    def test_window_apply_flips_phase(self):
        # Published response applied to its own 8x8 window yields a window
        # of the opposite family containing the attack (figure walkthrough).
        r = respond_tabulated(D0, Vertex(0, -1))
        box = Rect(-1, -4, 8, 8)
        post = apply(D0.window(box), r)
        found = identify(post, box)
        assert found is not None and found.phase is PatternPhase.DPRIME
        assert found.contains(Vertex(0, -1))

    def test_every_row_applies_cleanly_both_phases(self):
        for spec in (D0, spec_through(PatternPhase.DPRIME, Vertex(3, 2))):
            member = min(spec.window(Rect(0, 0, 7, 7)))
            for delta in ATTACK_OFFSETS:
                attack = Vertex(member.x + delta[0], member.y + delta[1])
                r = respond_tabulated(spec, attack)
                xs = [v.x for v in r.anchors]
                ys = [v.y for v in r.anchors]
                box = Rect(min(xs), min(ys), 8, 8)
                post = apply(spec.window(box), r)
                found = identify(post, box)
                assert found == R.target_spec(spec, attack)


class TestApply:
    def test_empty_response_is_identity(self):
        cfg = D0.window(Rect(0, 0, 10, 10))
        assert apply(cfg, R.empty_response(Vertex(0, 0))) == cfg

    def test_missing_source_rejected(self):
        cfg = frozenset({Vertex(0, 0)})
        bad = AttackResponse(Vertex(1, 1), frozenset(), (GuardMove(Vertex(5, 5), Vertex(5, 6)),))
        with pytest.raises(TransitionError) as exc:
            apply(cfg, bad)
        assert exc.value.code == "SOURCE_MISSING"

    def test_colliding_targets_rejected(self):
        cfg = frozenset({Vertex(0, 0), Vertex(2, 0)})
        bad = AttackResponse(
            Vertex(1, 0),
            frozenset(),
            (GuardMove(Vertex(0, 0), Vertex(1, 0)), GuardMove(Vertex(2, 0), Vertex(1, 1))),
        )
        # collide with an unmoved guard instead: target occupied
        cfg2 = frozenset({Vertex(0, 0), Vertex(1, 1)})
        bad2 = AttackResponse(Vertex(1, 1), frozenset(), (GuardMove(Vertex(0, 0), Vertex(1, 1)),))
        with pytest.raises(TransitionError):
            apply(cfg2, bad2)
        assert apply(cfg, bad) == frozenset({Vertex(1, 0), Vertex(1, 1)})

    def test_duplicate_targets_rejected_at_construction(self):
        with pytest.raises(TransitionError):
            AttackResponse(
                Vertex(1, 0),
                frozenset(),
                (GuardMove(Vertex(0, 0), Vertex(1, 0)), GuardMove(Vertex(2, 0), Vertex(1, 0))),
            )

    def test_long_moves_rejected_at_construction(self):
        with pytest.raises(TransitionError):
            AttackResponse(Vertex(2, 0), frozenset(), (GuardMove(Vertex(0, 0), Vertex(2, 0)),))


class TestMatching:
    def test_canonical_attacks_both_directions(self):
        for spec in (D0, DP0):
            for delta in ATTACK_OFFSETS:
                attack = Vertex(*delta)
                scope = matching_scope(spec, attack)
                resp = respond_matching(spec, attack, scope)
                post = apply(spec.window(scope), resp)
                target = R.target_spec(spec, attack)
                assert post == target.window(scope)
                assert attack in post

    def test_self_attack_is_empty(self):
        scope = Rect(-21, -21, 49, 49)
        assert respond_matching(D0, Vertex(0, 0), scope).is_empty

    def test_agrees_with_tabulated_target(self):
        for spec in (D0, DP0):
            member = min(spec.window(Rect(0, 0, 7, 7)))
            for delta in ATTACK_OFFSETS:
                attack = Vertex(member.x + delta[0], member.y + delta[1])
                scope = matching_scope(spec, attack)
                post = apply(spec.window(scope), respond_matching(spec, attack, scope))
                assert identify(post, scope) == R.target_spec(spec, attack)

    def test_misaligned_scope_reports_infeasible(self):
        with pytest.raises(InfeasibleResponseError):
            respond_matching(D0, Vertex(-1, -1), Rect(-21, -21, 49, 49))

    def test_scope_preconditions(self):
        with pytest.raises(DomainError):
            respond_matching(D0, Vertex(0, -1), Rect(0, 0, 48, 49))
        with pytest.raises(DomainError):
            respond_matching(D0, Vertex(0, -1), Rect(0, 0, 49, 49))  # no padding


def test_anchor_guards_stay_fixed():
    r = respond_tabulated(D0, Vertex(0, -1))
    box = Rect(-1, -4, 8, 8)
    post = apply(D0.window(box), r)
    assert r.anchors <= post


def test_response_json_shape():
    r = respond_tabulated(D0, Vertex(0, -1))
    obj = r.to_json()
    assert obj["attacked"] == [0, -1]
    assert len(obj["anchors"]) == 4 and len(obj["moves"]) == 6
    assert set(obj["moves"][0]) == {"from", "to"}
