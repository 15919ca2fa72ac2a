import random

import pytest

import eterngrid.composite as C
from eterngrid.composite import (
    CompositeStrategy,
    decompose,
    guard_count,
    init_state,
    respond,
    strip_blocks,
)
from eterngrid.grid import DomainError, GridDims, Vertex, is_dominating
from eterngrid.referee import RandomAttacker, simulate, validate_transition
from eterngrid.responder import apply


class TestDecompose:
    def test_nine_nine(self):
        d = decompose(GridDims(9, 9))
        assert (d.a, d.b, d.alpha, d.beta) == (9, 9, 0, 0)

    def test_fourteen_fourteen(self):
        d = decompose(GridDims(14, 14))
        assert (d.a, d.b, d.alpha, d.beta) == (9, 9, 3, 3)

    def test_twelve_nine(self):
        d = decompose(GridDims(12, 9))
        assert d.a == 9 and d.b == 9
        assert d.alpha == 0  # m = 9: no leftover rows
        assert d.beta == 2  # n mod 7 = 5
        assert C.ALPHA_TABLE[12 % 7] == 2

    def test_table_matches_leftovers(self):
        for n in range(9, 31):
            for m in range(9, 31):
                d = decompose(GridDims(n, m))
                assert d.a % 7 == 2 and d.b % 7 == 2
                assert 0 <= n - d.a <= 6 and 0 <= m - d.b <= 6
                assert d.alpha == C.ALPHA_TABLE[m % 7]
                assert d.beta == C.ALPHA_TABLE[n % 7]

    def test_swapped_reading_feasibility(self):
        # The transposed reading of the case tables only covers the
        # leftovers when both residues agree; elsewhere it is infeasible,
        # which pins down the printed orientation as the intended one.
        d = decompose(GridDims(16, 9), swap_roles=True)
        assert (d.alpha, d.beta) == (0, 0)
        d = decompose(GridDims(14, 14), swap_roles=True)
        assert (d.alpha, d.beta) == (3, 3)
        with pytest.raises(DomainError):
            decompose(GridDims(12, 9), swap_roles=True)

    def test_small_grids_rejected(self):
        with pytest.raises(DomainError):
            decompose(GridDims(8, 12))


class TestCounts:
    def test_examples(self):
        assert guard_count(GridDims(9, 9)) == 31
        assert guard_count(GridDims(14, 14)) == 64
        assert guard_count(GridDims(16, 16)) == 72

    def test_formula_matches_construction_all_shapes(self):
        for n in range(9, 24):
            for m in range(9, 24):
                dims = GridDims(n, m)
                assert len(init_state(dims).guards()) == guard_count(dims)


class TestStrips:
    def test_blocks_have_diameter_one_and_partition_strips(self):
        for dims in (GridDims(14, 14), GridDims(13, 20), GridDims(10, 9), GridDims(23, 12)):
            dec = decompose(dims)
            blocks = strip_blocks(dec)  # constructor asserts partition
            for blk in blocks:
                xs = [c.x for c in blk.cells]
                ys = [c.y for c in blk.cells]
                assert max(xs) - min(xs) <= 1 and max(ys) - min(ys) <= 1

    def test_initial_state_dominates(self):
        for dims in (GridDims(14, 14), GridDims(13, 20), GridDims(10, 9)):
            st = init_state(dims)
            assert is_dominating(st.guards(), dims)

    def test_strip_attack_moves_owning_guard_only(self):
        dims = GridDims(14, 14)
        st = init_state(dims)
        # (0, 0) is a strip cell; its block guard serves it
        resp, st2 = respond(st, Vertex(0, 0))
        if not resp.is_empty:
            assert len(resp.moves) == 1
            assert resp.moves[0].dst == Vertex(0, 0)
        assert st2.inner == st.inner

    def test_subgrid_attack_delegates(self):
        dims = GridDims(14, 14)
        st = init_state(dims)
        dec = st.decomposition
        ox, oy = dec.subgrid_offset()
        inner_attack = Vertex(ox + 2, oy + 2)
        resp, st2 = respond(st, inner_attack)
        assert st2.strips == st.strips
        assert inner_attack in st2.guards()


def test_pools_stay_disjoint_under_play():
    dims = GridDims(13, 20)
    st = init_state(dims)
    dec = st.decomposition
    rng = random.Random(9)
    strip_cells = {c for blk in st.strips.blocks for c in blk.cells}
    for _ in range(500):
        attack = Vertex(rng.randrange(dims.n), rng.randrange(dims.m))
        resp, st = respond(st, attack)
        assert set(st.strips.guards) <= strip_cells
        ox, oy = dec.subgrid_offset()
        for g in st.inner.guards():
            assert dec.subgrid.contains(Vertex(g.x + ox, g.y + oy))


def test_long_random_run_is_referee_clean():
    dims = GridDims(13, 20)
    strategy = CompositeStrategy(dims)
    transcript = simulate(dims, strategy, RandomAttacker(17), 2500, 17)
    assert transcript.violation_count == 0
    assert len(transcript.steps) == 2500


def test_every_transition_certified_on_awkward_grid():
    # exhaustive over attacks from the initial state (one step deep)
    dims = GridDims(10, 12)
    st = init_state(dims)
    pre = st.guards()
    for x in range(dims.n):
        for y in range(dims.m):
            resp, post = respond(st, Vertex(x, y))
            after = apply(pre, resp)
            assert after == post.guards()
            verdict = validate_transition(pre, after, Vertex(x, y), dims, certificate=resp)
            assert verdict.legal, (x, y, [v.code for v in verdict.violations])


def test_snapshot_includes_strips():
    snap = init_state(GridDims(14, 14)).to_json()
    assert "strips" in snap and "subgrid" in snap
    assert len(snap["strips"]["guards"]) == guard_count(GridDims(14, 14)) - 31
    assert "strips" in snap["roles"]
