import random

import pytest

from bridgeburn.arena import IllegalPolicyMoveError, exhaust_vs_policy, run_match
from bridgeburn.engine import COP_TURN, GameState, cop_move_options, is_capture, make_state
from bridgeburn.families import FamilySpec, generate
from bridgeburn.graph import all_distances_from
from bridgeburn.grid2xn import Grid2xnCopTeam, thm_2xn_columns
from bridgeburn.strategies import (
    CornerIsolateRobber,
    Degree4IsolateRobber,
    EulerianStallRobber,
    FarthestRobber,
    GapIsolateRobber,
    GreedyCloserCop,
    GuardStartVertexCop,
    HypercubeMirrorCop,
    LeafIsolateRobber,
    PlanRobber,
    PolicyApplicabilityError,
    StalematePolicyRobber,
    StationaryCop,
    make_policy,
    policy_names,
    robber_distance_safe,
)


def test_catalog_names_cover_paper_strategies():
    names = policy_names()
    for required in [
        "hypercube_mirror",
        "guard_start_vertex",
        "grid2xn_cop",
        "torus_placement",
        "grid_placement",
        "greedy_closer",
        "leaf_isolate",
        "corner_isolate",
        "border_isolate",
        "gap_isolate",
        "degree4_isolate",
        "eulerian_stall",
        "stalemate_policy",
    ]:
        assert required in names


def test_make_policy_unknown():
    g = generate(FamilySpec("path", (3,)))
    with pytest.raises(PolicyApplicabilityError):
        make_policy("nope", g)


# --- applicability validation --------------------------------------------------


def test_guard_start_needs_even_degrees(fam):
    with pytest.raises(PolicyApplicabilityError):
        GuardStartVertexCop(fam("path", 4))


def test_eulerian_stall_needs_even_block_degree(fam):
    g = fam("capture_family", 2, 2)
    with pytest.raises(PolicyApplicabilityError):
        EulerianStallRobber(g, 3, 2)  # m(k-1) = 3 is odd


def test_degree4_needs_interior(fam):
    g = fam("grid", 5, 5)
    with pytest.raises(PolicyApplicabilityError):
        Degree4IsolateRobber(g, 5, 5, (0, 0), wrap=False)


def test_corner_rejects_non_corner(fam):
    with pytest.raises(PolicyApplicabilityError):
        CornerIsolateRobber(fam("grid", 2, 6), 2, 6, (3, 0))


def test_mirror_rejects_non_hypercube(fam):
    with pytest.raises(PolicyApplicabilityError):
        HypercubeMirrorCop(fam("cycle", 6))


# --- matches -------------------------------------------------------------------


def test_mirror_beats_farthest_on_q3(fam):
    g = fam("hypercube", 3)
    tr = run_match(g, HypercubeMirrorCop(g), FarthestRobber())
    assert tr.outcome.kind == "cop_win"
    assert tr.replay().robber in tr.replay().cops


def test_leaf_isolate_escapes_stationary_cop(fam):
    g = fam("path", 6)
    tr = run_match(g, StationaryCop(g, (2,)), LeafIsolateRobber(g))
    assert tr.outcome.kind == "robber_escape"


def test_eulerian_stall_survives_five_rounds(fam):
    g = fam("capture_family", 2, 2)
    tr = run_match(g, GreedyCloserCop(g, (0,)), EulerianStallRobber(g, 2, 2))
    assert tr.outcome.kind != "cop_win" or tr.outcome.round >= 5


def test_match_round_limit(fam):
    g = fam("path", 5)
    tr = run_match(g, StationaryCop(g, (2,)), PlanRobber(g, 0, []), max_rounds=3)
    assert tr.outcome.kind == "round_limit"


def test_illegal_policy_move_is_hard_error(fam):
    class BadCop(StationaryCop):
        def choose(self, g, state, pstate):
            return (state.robber,), pstate  # teleports

    g = fam("path", 5)
    with pytest.raises(IllegalPolicyMoveError) as exc:
        run_match(g, BadCop(g, (4,)), PlanRobber(g, 0, []))
    assert "stationary" in str(exc.value)


# --- exhaustive validation of the named strategies -----------------------------


@pytest.mark.parametrize("d", [2, 3])
def test_mirror_wins_always_small(fam, d):
    g = fam("hypercube", d)
    assert exhaust_vs_policy(g, HypercubeMirrorCop(g)).wins_always


def test_stalemate_policy_wins_always(fam):
    g = fam("stalemate")
    assert exhaust_vs_policy(g, StalematePolicyRobber(g), k_cops=1).wins_always


def test_guard_start_vertex_wins_on_c6(fam):
    g = fam("cycle", 6)
    assert exhaust_vs_policy(g, GuardStartVertexCop(g, 0)).wins_always


def test_grid2xn_wins_small():
    for n in range(2, 8):
        g = generate(FamilySpec("grid", (2, n)))
        assert exhaust_vs_policy(g, Grid2xnCopTeam(g, n)).wins_always, n


def test_thm_2xn_columns_shape():
    assert thm_2xn_columns(2) == [1]
    assert thm_2xn_columns(7) == [3]
    assert thm_2xn_columns(8) == [3, 4]
    assert thm_2xn_columns(22) == [3, 12, 18]
    for n in range(2, 40):
        assert len(thm_2xn_columns(n)) == -(-(n + 2) // 9)


def test_gap_isolate_lemma_scenario():
    # the anchoring cop on (j, 0) itself cannot stop the run
    g = generate(FamilySpec("grid", (2, 13)))
    pol = GapIsolateRobber(g, 13, 3)
    assert exhaust_vs_policy(g, pol, free_side_placements=[(3,)]).wins_always
    # a second cop 10+ columns right of column j is too far, as is anyone
    # parked at the far left
    g14 = generate(FamilySpec("grid", (2, 14)))
    pol14 = GapIsolateRobber(g14, 14, 3)
    far = [(row * 14 + col,) for col in (0, 13) for row in (0, 1)]
    assert exhaust_vs_policy(g14, pol14, free_side_placements=far).wins_always


def test_degree4_runs_figure_loop(fam):
    g = fam("torus", 11, 11)
    pol = Degree4IsolateRobber(g, 11, 11, (5, 5), wrap=True)
    cops = (0,)  # distance 10 from (5,5): no cop within 9
    start = pol.robber_placement(g, cops)
    assert start == 5 * 11 + 5
    ps = pol.initial_pstate(g, cops, start)
    at = lambda i, j: (j % 11) * 11 + (i % 11)  # noqa: E731
    expected = [
        at(6, 5), at(6, 4), at(5, 4), at(5, 5),  # right, up, left, down
        at(4, 5), at(4, 6), at(5, 6), at(5, 5),  # left, down, right, up
    ]
    state = GameState(0, cops, start, COP_TURN)
    walk = []
    for _ in range(8):
        state = GameState(state.burned, state.cops, state.robber, 1)  # robber to move
        dest, ps = pol.choose(g, state, ps)
        eid = g.edge_id(state.robber, dest)
        state = GameState(state.burned | (1 << eid), state.cops, dest, COP_TURN)
        walk.append(dest)
    assert walk == expected


def test_degree4_applicability_distance(fam):
    g = fam("torus", 11, 11)
    pol = Degree4IsolateRobber(g, 11, 11, (5, 5), wrap=True)
    with pytest.raises(PolicyApplicabilityError):
        pol.robber_placement(g, (5 * 11 + 7,))  # cop within distance 5


def test_eulerian_stall_pendant_escape(fam):
    g = fam("capture_family", 2, 2)
    pol = EulerianStallRobber(g, 2, 2)
    start = pol.robber_placement(g, (6,))  # cop inside a partite block
    assert start in (0, 1)
    tr = run_match(g, StationaryCop(g, (6,)), EulerianStallRobber(g, 2, 2))
    assert tr.outcome.kind == "robber_escape"


# --- distance-safety hypothesis -------------------------------------------------


def test_distance_safe_degree4_loop(fam):
    g = fam("torus", 11, 11)
    at = lambda i, j: (j % 11) * 11 + (i % 11)  # noqa: E731
    v = at(5, 5)
    walk = [v, at(6, 5), at(6, 4), at(5, 4), v, at(4, 5), at(4, 6), at(5, 6), v]
    assert robber_distance_safe(g, v, 9, walk, (at(0, 0),))
    assert not robber_distance_safe(g, v, 9, walk, (at(5, 9),))  # cop within 9


def test_distance_safe_corner_loop(fam):
    g = fam("grid", 7, 7)
    at = lambda i, j: j * 7 + i  # noqa: E731
    v = at(0, 0)
    walk = [v, at(1, 0), at(1, 1), at(0, 1), v]
    far_cop = (at(6, 6),)
    assert robber_distance_safe(g, v, 5, walk, far_cop)
    assert not robber_distance_safe(g, v, 5, walk, (at(3, 2),))  # distance 5 exactly


def test_distance_safe_rejects_runaway(fam):
    g = fam("path", 8)
    assert not robber_distance_safe(g, 0, 2, [0, 1, 2], (7,))


def test_distance_safe_rejects_non_walk(fam):
    g = fam("path", 8)
    with pytest.raises(ValueError):
        robber_distance_safe(g, 0, 3, [0, 2], (7,))


# --- legality fuzz: every policy emits only legal moves -------------------------


def _legal_cop_move(g, state, dests):
    return all(
        d == c or (g.has_edge(c, d) and not state.burned >> g.edge_id(c, d) & 1)
        for c, d in zip(state.cops, dests)
    )


@pytest.mark.parametrize("seed", range(8))
def test_cop_policies_emit_legal_moves(fam, seed):
    rnd = random.Random(seed)
    cases = [
        (fam("hypercube", 3), lambda g: HypercubeMirrorCop(g)),
        (fam("torus", 3, 3), lambda g: GuardStartVertexCop(g, 0)),
        (fam("grid", 2, 6), lambda g: Grid2xnCopTeam(g, 6)),
        (fam("cycle", 7), lambda g: GreedyCloserCop(g, (0,))),
    ]
    for g, make in cases:
        pol = make(g)
        cops = tuple(sorted(pol.cop_placement(g)))
        starts = [v for v in range(g.vertex_count) if v not in cops]
        r = rnd.choice(starts)
        state = make_state(0, cops, r, COP_TURN)
        ps = pol.initial_pstate(g, cops, r)
        for _ in range(25):
            if is_capture(state):
                break
            dests, ps = pol.choose(g, state, ps)
            assert _legal_cop_move(g, state, dests), (pol.name, state, dests)
            state = make_state(state.burned, dests, state.robber, 1)
            if is_capture(state):
                break
            # random legal robber reply
            opts = [state.robber] + [
                y for (y, eid) in g.adjacency[state.robber] if not state.burned >> eid & 1
            ]
            to = rnd.choice(opts)
            if to != state.robber:
                state = make_state(
                    state.burned | (1 << g.edge_id(state.robber, to)), state.cops, to, COP_TURN
                )
            else:
                state = make_state(state.burned, state.cops, to, COP_TURN)


@pytest.mark.parametrize("seed", range(8))
def test_robber_policies_emit_legal_moves(fam, seed):
    rnd = random.Random(seed)
    cases = [
        (fam("stalemate"), lambda g: StalematePolicyRobber(g), (0,)),
        (fam("capture_family", 2, 2), lambda g: EulerianStallRobber(g, 2, 2), (0,)),
        (fam("path", 6), lambda g: LeafIsolateRobber(g), (2,)),
        (fam("grid", 2, 8), lambda g: CornerIsolateRobber(g, 2, 8, (0, 0)), (5,)),
        (fam("torus", 11, 11), lambda g: Degree4IsolateRobber(g, 11, 11, (5, 5), True), (0,)),
    ]
    for g, make, cops in cases:
        pol = make(g)
        r = pol.robber_placement(g, cops)
        assert 0 <= r < g.vertex_count and r not in cops
        state = make_state(0, cops, r, COP_TURN)
        ps = pol.initial_pstate(g, cops, r)
        for _ in range(25):
            # random legal cop move
            dests = tuple(rnd.choice(cop_move_options(g, state.burned, c)) for c in state.cops)
            state = make_state(state.burned, dests, state.robber, 1)
            if is_capture(state):
                break
            to, ps = pol.choose(g, state, ps)
            legal = to == state.robber or (
                g.has_edge(state.robber, to)
                and not state.burned >> g.edge_id(state.robber, to) & 1
            )
            assert legal, (pol.name, state, to)
            if to != state.robber:
                state = make_state(
                    state.burned | (1 << g.edge_id(state.robber, to)), state.cops, to, COP_TURN
                )
            else:
                state = make_state(state.burned, state.cops, to, COP_TURN)
            if is_capture(state):
                break
