"""Soundness of the distance-safety hypothesis against live play.

Whenever robber_distance_safe accepts a plan, replaying that plan in the
engine against exhaustive cop play must never produce a capture before the
plan's final move.  Verified on a grid and a torus over a family of loops
and short walks.
"""

import itertools

from bridgeburn.families import FamilySpec, generate
from bridgeburn.graph import all_distances_from
from bridgeburn.strategies import robber_distance_safe


def min_robber_moves_before_capture(g, walk, cop_start):
    """Exhaustive single-cop search vs. a scripted walk.

    Returns the fewest robber moves completed at any reachable capture
    (the walk's step index), or None when no capture is possible before
    the walk ends.  The robber follows the walk verbatim; the cop tries
    everything.
    """
    k = len(walk) - 1
    prefix_burn = [0]
    for a, b in zip(walk, walk[1:]):
        prefix_burn.append(prefix_burn[-1] | (1 << g.edge_id(a, b)))
    best = None
    frontier = {(cop_start, 0)}
    seen = set(frontier)
    while frontier:
        nxt = set()
        for (cop, i) in frontier:
            burned = prefix_burn[i]
            moves = [cop] + [
                y for (y, eid) in g.adjacency[cop] if not burned >> eid & 1
            ]
            for cop2 in moves:
                if cop2 == walk[i]:  # capture on the cop half-turn
                    if best is None or i < best:
                        best = i
                    continue
                if i < k:
                    if walk[i + 1] == cop2:  # robber walks into the cop
                        if best is None or i + 1 < best:
                            best = i + 1
                        continue
                    key = (cop2, i + 1)
                    if key not in seen:
                        seen.add(key)
                        nxt.add(key)
        frontier = nxt
    return best


def _loops_through(g, n_cols, v):
    """Small candidate walks around v: unit squares and out-and-back runs."""
    i, j = v % n_cols, v // n_cols
    walks = []
    for di, dj in itertools.product((1, -1), repeat=2):
        a, b, c = (i + di, j), (i + di, j + dj), (i, j + dj)
        coords = [(i, j), a, b, c, (i, j)]
        try:
            walk = [_idx(g, n_cols, x, y) for (x, y) in coords]
        except IndexError:
            continue
        if all(g.has_edge(p, q) for p, q in zip(walk, walk[1:])):
            walks.append(walk)
    for u in g.neighbors(v):
        walks.append([v, u, v])
    return walks


def _idx(g, n_cols, x, y):
    rows = g.vertex_count // n_cols
    if not (0 <= x < n_cols and 0 <= y < rows):
        raise IndexError
    return y * n_cols + x


def _torus_idx(n_cols, rows, x, y):
    return (y % rows) * n_cols + (x % n_cols)


def _check_instance(g, n_cols, centers, d_values):
    checked = 0
    for v in centers:
        dist_v = all_distances_from(g, v)
        for walk in _loops_through(g, n_cols, v):
            for d in d_values:
                for cop in range(g.vertex_count):
                    if not robber_distance_safe(g, v, d, walk, (cop,)):
                        continue
                    checked += 1
                    k = len(walk) - 1
                    first = min_robber_moves_before_capture(g, walk, cop)
                    assert first is None or first >= k, (v, walk, d, cop, first)
    assert checked > 0  # the hypothesis must actually fire somewhere


def test_lemma_sound_on_grid_7x7():
    g = generate(FamilySpec("grid", (7, 7)))
    corners = [0, 6, 42, 48]
    interior = [3 * 7 + 3]
    _check_instance(g, 7, corners + interior, d_values=(4, 5, 6))


def test_lemma_sound_on_torus_5x5():
    g = generate(FamilySpec("torus", (5, 5)))
    _check_instance(g, 5, centers=[0, 12], d_values=(3, 4))


def test_lemma_sound_for_full_isolation_loops():
    # the 8-move interior loop with d = 9 on a torus large enough to host it
    g = generate(FamilySpec("torus", (11, 11)))
    at = lambda i, j: _torus_idx(11, 11, i, j)  # noqa: E731
    v = at(5, 5)
    walk = [v, at(6, 5), at(6, 4), at(5, 4), v, at(4, 5), at(4, 6), at(5, 6), v]
    # only the four wrap-antipodal vertices sit at distance 10 > 9 from v
    for cop in (at(0, 0), at(0, 10), at(10, 0), at(10, 10)):
        assert robber_distance_safe(g, v, 9, walk, (cop,))
        first = min_robber_moves_before_capture(g, walk, cop)
        assert first is None or first >= 8
    # a cop inside the radius is rejected by the hypothesis and can intercept
    assert not robber_distance_safe(g, v, 9, walk, (at(10, 5),))
