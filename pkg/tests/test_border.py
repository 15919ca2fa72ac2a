import pytest

import eterngrid.border as B
from eterngrid.border import (
    BorderFormation,
    BorderStrategy,
    guard_count,
    init_state,
    respond,
)
from eterngrid.grid import DomainError, GridDims, Vertex, is_dominating
from eterngrid.patterns import PatternPhase, identify
from eterngrid.referee import validate_transition
from eterngrid.responder import InfeasibleResponseError, apply


def all_states(dims):
    """Every reachable strategy state: 14 translates x 2 leaf formations."""
    for phase in (PatternPhase.D, PatternPhase.DPRIME):
        for res in range(7):
            for label in (BorderFormation.LOW_LEAF, BorderFormation.HIGH_LEAF):
                yield B._canonical_state(dims, phase, res, label)


class TestCounts:
    def test_formula_values(self):
        assert guard_count(GridDims(9, 9)) == 31
        assert guard_count(GridDims(16, 16)) == 72
        assert guard_count(GridDims(9, 16)) == 48
        assert guard_count(GridDims(23, 23)) == 127

    def test_formula_matches_construction(self):
        for dims in (GridDims(9, 9), GridDims(16, 16), GridDims(9, 16)):
            assert len(init_state(dims).guards()) == guard_count(dims)

    def test_preconditions(self):
        for bad in ((8, 8), (10, 10), (9, 10), (7, 9)):
            with pytest.raises(DomainError):
                guard_count(GridDims(*bad))


class TestInit:
    def test_nine_by_nine_structure(self):
        st = init_state(GridDims(9, 9))
        guards = st.guards()
        assert len(guards) == 31
        assert is_dominating(guards, GridDims(9, 9))
        assert set(st.corner_guards) <= guards
        # interior is the D translate through the origin corner, as drawn
        interior = st.interior_guards()
        assert interior == frozenset(
            Vertex(*p) for p in [(2, 1), (4, 2), (6, 3), (1, 4), (3, 5), (5, 6), (7, 7)]
        )
        assert st.interior_spec.phase is PatternPhase.D

    def test_all_paths_share_the_formation(self):
        st = init_state(GridDims(16, 16))
        assert len({ps.formation for ps in st.border_paths}) == 1
        assert len(st.border_paths) == 8


class TestBorderAttacks:
    def test_attack_on_occupied_cell_is_empty(self):
        st = init_state(GridDims(9, 9))
        resp, st2 = respond(st, Vertex(0, 0))  # corner
        assert resp.is_empty and st2 == st
        occupied = next(iter(st.guards() - set(st.corner_guards)))
        resp, st2 = respond(st, occupied)
        assert resp.is_empty and st2 == st

    def test_leaf_attack_moves_formations_not_interior(self):
        st = init_state(GridDims(9, 9))  # low-leaf start
        attack = Vertex(7, 0)  # bottom path offset 6: the far leaf
        resp, st2 = respond(st, attack)
        assert st2.formation is BorderFormation.HIGH_LEAF
        assert st2.interior_spec == st.interior_spec
        assert attack in st2.guards()
        # interior untouched
        assert st2.interior_guards() == st.interior_guards()
        # all moves stay on the ring
        ring = {c for p in B.ring_paths(st.dims) for c in p.cells()}
        for m in resp.moves:
            assert m.src in ring and m.dst in ring

    def test_near_leaf_attack_pulls_matching_leaf_formation(self):
        st = init_state(GridDims(9, 9)).with_formation(BorderFormation.HIGH_LEAF)
        # bottom path offset 0 is (1, 0): empty in high-leaf
        resp, st2 = respond(st, Vertex(1, 0))
        assert st2.formation is BorderFormation.LOW_LEAF
        assert Vertex(1, 0) in st2.guards()

    def test_corners_never_move(self):
        st = init_state(GridDims(9, 9))
        for attack in [Vertex(1, 1), Vertex(7, 0), Vertex(4, 4), Vertex(2, 2), Vertex(7, 7)]:
            resp, st = respond(st, attack)
            for m in resp.moves:
                assert m.src not in st.corner_guards
            assert set(st.corner_guards) <= st.guards()


class TestInteriorAttacks:
    def test_phase_flips_and_is_identifiable(self):
        st = init_state(GridDims(9, 9))
        attack = Vertex(2, 2)  # interior, unoccupied initially
        resp, st2 = respond(st, attack)
        assert st2.interior_spec.phase is PatternPhase.DPRIME
        assert st2.interior_spec.contains(attack)
        found = identify(st2.interior_guards(), B.interior_rect(st.dims))
        assert found == st2.interior_spec
        assert len(st2.guards()) == 31

    def test_attack_is_served_and_legal(self):
        dims = GridDims(9, 16)
        st = init_state(dims)
        pre = st.guards()
        resp, st2 = respond(st, Vertex(3, 7))
        after = apply(pre, resp)
        assert after == st2.guards()
        verdict = validate_transition(pre, after, Vertex(3, 7), dims, certificate=resp)
        assert verdict.legal


@pytest.mark.parametrize("dims", [GridDims(9, 9), GridDims(9, 16)])
def test_exhaustive_certification(dims):
    """Every reachable state answers every possible attack legally and
    lands back inside the state schema.  With the 9x9 (and 9x16) closed
    under attack, long adversarial runs cannot escape legality."""
    fails = []
    for st in all_states(dims):
        pre = st.guards()
        for x in range(dims.n):
            for y in range(dims.m):
                attack = Vertex(x, y)
                resp, post = respond(st, attack)
                after = apply(pre, resp)
                if after != post.guards():
                    fails.append((st.interior_spec, st.formation, (x, y), "state mismatch"))
                    continue
                verdict = validate_transition(pre, after, attack, dims, certificate=resp)
                if not verdict.legal:
                    fails.append((st.interior_spec, st.formation, (x, y),
                                  [v.code for v in verdict.violations]))
    assert not fails, fails[:5]


def test_center_formation_is_a_trap():
    """The centred formation cannot answer a corner-diagonal attack from
    the translate through that corner: with no path-end guards anywhere,
    no guard can cross a corner junction, and the top/right paths must
    donate two entries against a single available absorber.  This is why
    the runtime never enters the centred formation."""
    dims = GridDims(9, 9)
    st = init_state(dims).with_formation(BorderFormation.CENTER)
    assert is_dominating(st.guards(), dims)  # it dominates; it just can't move
    with pytest.raises(InfeasibleResponseError):
        respond(st, Vertex(1, 1))


def test_leaf_formations_answer_the_corner_diagonal():
    dims = GridDims(9, 9)
    for label in (BorderFormation.LOW_LEAF, BorderFormation.HIGH_LEAF):
        st = init_state(dims).with_formation(label)
        resp, st2 = respond(st, Vertex(1, 1))
        after = apply(st.guards(), resp)
        assert validate_transition(st.guards(), after, Vertex(1, 1), dims, certificate=resp).legal


def test_snapshot_schema():
    st = init_state(GridDims(9, 9))
    snap = st.to_json()
    assert snap["dims"] == [9, 9]
    assert len(snap["guards"]) == 31
    assert snap["phase"] == "D"
    assert len(snap["formations"]) == 4
    roles = snap["roles"]
    assert len(roles["corner"]) == 4
    assert len(roles["border"]) == 20
    assert len(roles["interior"]) == 7


def test_out_of_bounds_attack_rejected():
    st = init_state(GridDims(9, 9))
    with pytest.raises(DomainError):
        respond(st, Vertex(9, 0))


def test_strategy_adapter_round_trip():
    s = BorderStrategy(GridDims(9, 9))
    cfg = s.reset()
    assert len(cfg) == 31
    r = s.respond(Vertex(1, 1))
    assert Vertex(1, 1) in apply(cfg, r)
