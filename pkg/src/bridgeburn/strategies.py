"""Scripted policies for both sides, mirroring the constructive arguments.

A policy is deterministic: given the graph, the current state, and its own
internal state it returns exactly one move for its side.  Internal state
is explicit and hashable so exhaustive validation can memoize on
(game state, policy state) pairs.

Cop policies return a tuple of destination vertices aligned with the
sorted cop multiset; robber policies return a single destination vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

from .bounds import placement_generators
from .engine import COP_TURN, ROBBER_TURN, GameState
from .families import FamilySpec, capture_family_blocks
from .graph import (
    Graph,
    all_degrees_even,
    all_distances_from,
    bfs_distance,
)

class PolicyApplicabilityError(ValueError):
    """The policy's preconditions do not hold for this graph/placement."""


class Policy:
    side: str  # "cop" | "robber"
    name: str

    def cop_placement(self, g: Graph) -> tuple[int, ...]:
        raise NotImplementedError

    def robber_placement(self, g: Graph, cops: tuple[int, ...]) -> int:
        raise NotImplementedError

    def initial_pstate(self, g: Graph, cops: tuple[int, ...], robber: int) -> Hashable:
        return None

    def choose(self, g: Graph, state: GameState, pstate: Hashable):
        """Return (move, new_pstate)."""
        raise NotImplementedError


def _current_dist(g: Graph, burned: int, u: int, v: int) -> int | None:
    d = bfs_distance(g, u, v, burned)
    return None if d < 0 else d


def _greedy_step(g: Graph, burned: int, frm: int, target: int) -> int:
    """One step reducing current-graph distance to target; stay if impossible."""
    dist = all_distances_from(g, target, burned)
    if dist[frm] <= 0:
        return frm
    best = frm
    best_d = dist[frm]
    for (y, eid) in sorted(g.adjacency[frm]):
        if burned >> eid & 1:
            continue
        if 0 <= dist[y] < best_d:
            best, best_d = y, dist[y]
    return best


# --- cop policies -------------------------------------------------------------


class StationaryCop(Policy):
    side = "cop"
    name = "stationary"

    def __init__(self, g: Graph, starts=(0,)):
        self.starts = tuple(sorted(int(s) for s in starts))

    def cop_placement(self, g):
        return self.starts

    def choose(self, g, state, pstate):
        return tuple(state.cops), pstate


class GreedyCloserCop(Policy):
    """Baseline chaser: each cop steps along a shortest unburned path."""

    side = "cop"
    name = "greedy_closer"

    def __init__(self, g: Graph, starts=(0,)):
        self.starts = tuple(sorted(int(s) for s in starts))

    def cop_placement(self, g):
        return self.starts

    def choose(self, g, state, pstate):
        dest = tuple(_greedy_step(g, state.burned, c, state.robber) for c in state.cops)
        return dest, pstate


class TorusPlacementCop(GreedyCloserCop):
    """Torus upper-bound placement; in-game play is plain greedy chasing,
    which is NOT the full multi-case chase the bound's argument uses."""

    name = "torus_placement"

    def __init__(self, g: Graph, m: int, n: int):
        if g.vertex_count != m * n:
            raise PolicyApplicabilityError("graph is not the stated torus")
        super().__init__(g, placement_generators(FamilySpec("torus", (m, n))))


class GridPlacementCop(GreedyCloserCop):
    """Grid upper-bound placement with greedy in-game play (same caveat)."""

    name = "grid_placement"

    def __init__(self, g: Graph, m: int, n: int):
        if g.vertex_count != m * n:
            raise PolicyApplicabilityError("graph is not the stated grid")
        super().__init__(g, placement_generators(FamilySpec("grid", (m, n))))


class HypercubeMirrorCop(Policy):
    """Single cop on Q_d: start at all-ones, close in, then mirror.

    Once the positions differ in exactly one coordinate the robber has
    never had set, every edge the cop needs is guaranteed unburned and
    copying the robber's coordinate flips forces capture.
    """

    side = "cop"
    name = "hypercube_mirror"

    def __init__(self, g: Graph):
        d = (g.vertex_count - 1).bit_length()
        if g.vertex_count != 1 << d or g.edge_count != d * (1 << (d - 1)):
            raise PolicyApplicabilityError("hypercube_mirror needs Q_d with binary labels")
        self.d = d

    def cop_placement(self, g):
        return ((1 << self.d) - 1,)

    def initial_pstate(self, g, cops, robber):
        # (mirror dimension or -1, robber's visited-dimension bits, robber's last seen position)
        return (-1, robber, robber)

    def choose(self, g, state, pstate):
        mode, visited, prev_r = pstate
        c, r = state.cops[0], state.robber
        visited |= r
        burned = state.burned
        if mode >= 0:
            diff = c ^ r
            kbit = 1 << mode
            if diff == kbit:
                dest = r  # robber stayed adjacent: step onto him
            else:
                jbit = diff ^ kbit
                assert jbit and jbit & (jbit - 1) == 0, "mirror invariant broken"
                dest = c ^ jbit
            return (dest,), (mode, visited, r)

        moved_away = r != prev_r and not (prev_r ^ c) & (r ^ prev_r)
        dest = None
        if moved_away:
            jbit = r ^ prev_r
            if not burned >> g.edge_id(c, c ^ jbit) & 1:
                dest = c ^ jbit
        if dest is None:
            dest = self._closer_move(g, burned, c, r, visited)
        ndiff = dest ^ r
        nmode = mode
        if ndiff and ndiff & (ndiff - 1) == 0 and not visited & ndiff:
            nmode = ndiff.bit_length() - 1
        return (dest,), (nmode, visited, r)

    def _closer_move(self, g, burned, c, r, visited):
        candidates = []
        diff = c ^ r
        b = 1
        for _ in range(self.d):
            if diff & b and not burned >> g.edge_id(c, c ^ b) & 1:
                keeps_unvisited = bool((c ^ b) & ~visited & ((1 << self.d) - 1))
                candidates.append((not keeps_unvisited, b.bit_length() - 1, c ^ b))
            b <<= 1
        if not candidates:
            return c
        return min(candidates)[2]


class GuardStartVertexCop(Policy):
    """Even-degree graphs: reach the robber's start, then shadow it.

    While guarding, the robber and the guarded vertex are the only two
    odd-degree vertices, so they always share a component and the robber
    can neither outwait nor outrun the cop.
    """

    side = "cop"
    name = "guard_start_vertex"

    def __init__(self, g: Graph, start: int = 0):
        if not all_degrees_even(g):
            raise PolicyApplicabilityError("guard_start_vertex needs all degrees even")
        self.start = int(start)

    def cop_placement(self, g):
        return (self.start,)

    def initial_pstate(self, g, cops, robber):
        d = _current_dist(g, 0, robber, robber)
        return (False, robber, d if d is not None else -1)

    def choose(self, g, state, pstate):
        reached, v, prev_rv = pstate
        c, r, burned = state.cops[0], state.robber, state.burned
        if not reached and c == v:
            reached = True
        cur = _current_dist(g, burned, r, v)
        cur_rv = cur if cur is not None else -1
        if not reached:
            dest = _greedy_step(g, burned, c, v)
            if dest == c:
                dest = _greedy_step(g, burned, c, r)
        else:
            robber_closed_in = cur_rv != -1 and (prev_rv == -1 or cur_rv < prev_rv)
            target = v if robber_closed_in else r
            dest = _greedy_step(g, burned, c, target)
        return (dest,), (reached, v, cur_rv)


# --- robber policies ----------------------------------------------------------


class FarthestRobber(Policy):
    """Baseline evader: keep the nearest cop as far away as possible."""

    side = "robber"
    name = "farthest"

    def _score(self, g, burned, v, cops):
        dist = all_distances_from(g, v, burned)
        best = None
        for c in cops:
            d = dist[c]
            if d >= 0 and (best is None or d < best):
                best = d
        return g.vertex_count + 1 if best is None else best

    def robber_placement(self, g, cops):
        choices = [v for v in range(g.vertex_count) if v not in cops]
        if not choices:
            return 0
        return max(choices, key=lambda v: (self._score(g, 0, v, cops), -v))

    def choose(self, g, state, pstate):
        options = [state.robber]
        for (y, eid) in g.adjacency[state.robber]:
            if not state.burned >> eid & 1:
                options.append(y)
        burned = state.burned
        best = max(
            options,
            key=lambda v: (
                self._score(
                    g,
                    burned if v == state.robber else burned | (1 << g.edge_id(state.robber, v)),
                    v,
                    state.cops,
                ),
                -v,
            ),
        )
        return best, pstate


class PlanRobber(Policy):
    """Follows a fixed walk, then stays put.  Building block for the
    scripted isolation sequences."""

    side = "robber"
    name = "plan"

    def __init__(self, g: Graph, start: int, walk: list[int]):
        prev = start
        for v in walk:
            if not g.has_edge(prev, v):
                raise PolicyApplicabilityError(f"plan step {prev}->{v} is not an edge")
            prev = v
        self.start = start
        self.walk = tuple(walk)

    def robber_placement(self, g, cops):
        return self.start

    def initial_pstate(self, g, cops, robber):
        return 0

    def choose(self, g, state, pstate):
        step = pstate
        if step >= len(self.walk):
            return state.robber, pstate
        dest = self.walk[step]
        if state.burned >> g.edge_id(state.robber, dest) & 1:
            return state.robber, pstate  # plan edge gone; freeze in place
        return dest, step + 1


class LeafIsolateRobber(Policy):
    """Start beside an unguarded leaf and step onto it."""

    side = "robber"
    name = "leaf_isolate"

    def __init__(self, g: Graph, leaf: int | None = None):
        self.requested_leaf = leaf
        self.leaf: int | None = None

    def robber_placement(self, g, cops):
        if self.requested_leaf is not None:
            candidates = [self.requested_leaf]
        else:
            candidates = [v for v in range(g.vertex_count) if g.degree(v) == 1]
        for leaf in candidates:
            if g.degree(leaf) != 1:
                continue
            if all(bfs_distance(g, leaf, c) > 2 for c in cops):
                self.leaf = leaf
                return g.neighbors(leaf)[0]
        raise PolicyApplicabilityError("no unguarded leaf for this cop placement")

    def initial_pstate(self, g, cops, robber):
        return 0

    def choose(self, g, state, pstate):
        if pstate == 0 and state.robber != self.leaf:
            return self.leaf, 1
        return state.robber, pstate


def _grid_coords(n_cols: int, v: int) -> tuple[int, int]:
    return v % n_cols, v // n_cols


def _grid_index(n_cols: int, i: int, j: int) -> int:
    return j * n_cols + i


class CornerIsolateRobber(PlanRobber):
    """Four-move loop around a grid corner, ending isolated on it."""

    name = "corner_isolate"

    def __init__(self, g: Graph, m: int, n: int, corner: tuple[int, int] = (0, 0)):
        ci, cj = corner
        if ci not in (0, n - 1) or cj not in (0, m - 1):
            raise PolicyApplicabilityError(f"{corner} is not a corner of the {m}x{n} grid")
        dx = 1 if ci == 0 else -1
        dy = 1 if cj == 0 else -1
        walk = [
            _grid_index(n, ci + dx, cj),
            _grid_index(n, ci + dx, cj + dy),
            _grid_index(n, ci, cj + dy),
            _grid_index(n, ci, cj),
        ]
        super().__init__(g, _grid_index(n, ci, cj), walk)
        self.name = "corner_isolate"


class BorderIsolateRobber(PlanRobber):
    """Five-move border run isolating the robber one column shy of (i, row)."""

    name = "border_isolate"

    def __init__(self, g: Graph, m: int, n: int, i: int, row: int = 0, direction: int = 1):
        dy = 1 if row == 0 else -1
        d = direction
        if not (0 <= i - 2 * d < n and 0 <= i < n):
            raise PolicyApplicabilityError("border run leaves the grid")
        start = _grid_index(n, i - 2 * d, row)
        walk = [
            _grid_index(n, i - d, row),
            _grid_index(n, i - d, row + dy),
            _grid_index(n, i, row + dy),
            _grid_index(n, i, row),
            _grid_index(n, i - d, row),
        ]
        super().__init__(g, start, walk)
        self.name = "border_isolate"


class GapIsolateRobber(BorderIsolateRobber):
    """2xn mid-grid run: cop in column j of `row`, robber isolates on (j+3, row).

    The loop dips into the opposite row, away from the cop.
    """

    name = "gap_isolate"

    def __init__(self, g: Graph, n: int, j: int, row: int = 0, direction: int = 1):
        super().__init__(g, 2, n, i=j + 4 * direction, row=row, direction=direction)
        self.name = "gap_isolate"


class Degree4IsolateRobber(Policy):
    """Eight-move double loop around an interior degree-4 vertex.

    With no cop within distance 9 the loop is fixed; with exactly one cop
    within 9 (but none within 5) the second half is chosen live, circling
    through whichever neighbor the nearby cop cannot reach in 3 steps.
    """

    side = "robber"
    name = "degree4_isolate"

    def __init__(self, g: Graph, m: int, n: int, center: tuple[int, int], wrap: bool):
        self.m, self.n, self.wrap = m, n, wrap
        self.ci, self.cj = center
        v = _grid_index(n, self.ci, self.cj)
        if g.degree(v) != 4:
            raise PolicyApplicabilityError("center must have degree 4")
        self.v = v
        self.sx = 1
        self.sy = 1

    def _at(self, a: int, b: int) -> int:
        i, j = self.ci + self.sx * a, self.cj + self.sy * b
        if self.wrap:
            i %= self.n
            j %= self.m
        if not (0 <= i < self.n and 0 <= j < self.m):
            raise PolicyApplicabilityError("isolation loop leaves the grid")
        return _grid_index(self.n, i, j)

    def robber_placement(self, g, cops):
        dist = all_distances_from(g, self.v)
        near5 = [c for c in cops if dist[c] <= 5]
        near9 = [c for c in cops if dist[c] <= 9]
        if near5 or len(near9) > 1:
            raise PolicyApplicabilityError(
                "needs no cop within distance 5 and at most one within 9"
            )
        if near9:
            self._orient_away_from(near9[0])
            self.adaptive = True
        else:
            self.adaptive = False
        return self.v

    def _orient_away_from(self, cop: int) -> None:
        # Flip axes so the nearby cop sits weakly left of and above the center.
        i, j = _grid_coords(self.n, cop)
        dx, dy = i - self.ci, j - self.cj
        if self.wrap:
            if dx > self.n // 2:
                dx -= self.n
            if dx < -(self.n // 2):
                dx += self.n
            if dy > self.m // 2:
                dy -= self.m
            if dy < -(self.m // 2):
                dy += self.m
        self.sx = 1 if dx <= 0 else -1
        self.sy = 1 if dy <= 0 else -1

    def initial_pstate(self, g, cops, robber):
        return (0, 0)  # (step, chosen second-half variant)

    def _first_half(self) -> list[int]:
        if self.adaptive:
            # up, left, down, right around the center
            return [self._at(0, -1), self._at(-1, -1), self._at(-1, 0), self._at(0, 0)]
        # the fixed figure: right, up, left, down
        return [self._at(1, 0), self._at(1, -1), self._at(0, -1), self._at(0, 0)]

    def _second_half(self, variant: int) -> list[int]:
        if not self.adaptive:
            # left, down, right, up
            return [self._at(-1, 0), self._at(-1, 1), self._at(0, 1), self._at(0, 0)]
        if variant == 1:  # through (i+1, j) first; (i, j+1) is uncovered
            return [self._at(1, 0), self._at(1, 1), self._at(0, 1), self._at(0, 0)]
        return [self._at(0, 1), self._at(1, 1), self._at(1, 0), self._at(0, 0)]

    def choose(self, g, state, pstate):
        step, variant = pstate
        if step < 4:
            dest = self._first_half()[step]
            return dest, (step + 1, variant)
        if step == 4 and self.adaptive and variant == 0:
            down, right = self._at(0, 1), self._at(1, 0)

            def nearest(target):
                ds = [bfs_distance(g, c, target, state.burned) for c in state.cops]
                ds = [d for d in ds if d >= 0]
                return min(ds) if ds else 1 << 30

            # circle through the side no cop can cover within 3 steps
            variant = 1 if nearest(down) > 3 else 2 if nearest(right) > 3 else 1
        if step < 8:
            dest = self._second_half(variant)[step - 4]
            if state.burned >> g.edge_id(state.robber, dest) & 1:
                return state.robber, (step, variant)
            return dest, (step + 1, variant)
        return state.robber, pstate


class EulerianStallRobber(Policy):
    """Stalling robber on the quadratic-capture-time family.

    Burns every partite-block edge along a fixed Eulerian circuit before
    capture becomes possible; bolts for a pendant the moment the cop
    leaves the central clique unguarded.
    """

    side = "robber"
    name = "eulerian_stall"

    def __init__(self, g: Graph, m: int, k: int):
        if m * (k - 1) % 2:
            raise PolicyApplicabilityError("needs m(k-1) even for the Eulerian circuit")
        if k < 2:
            raise PolicyApplicabilityError("needs k >= 2 partite blocks")
        if g.vertex_count != m * k + 2 * k:
            raise PolicyApplicabilityError("graph is not capture_family(m, k)")
        self.m, self.k = m, k
        self.vs, self.us, self.blocks = capture_family_blocks(m, k)
        self.block_of = {}
        for i, block in enumerate(self.blocks):
            for s in block:
                self.block_of[s] = i

    def robber_placement(self, g, cops):
        if len(cops) != 1:
            raise PolicyApplicabilityError("eulerian_stall plays against one cop")
        cop = cops[0]
        if cop not in self.vs:
            for vj in self.vs:
                if vj != cop and not g.has_edge(vj, cop):
                    self.mode0 = "pendant"
                    self.circuit: tuple[int, ...] = ()
                    return vj
            raise AssertionError("some clique vertex always avoids an off-clique cop")
        j = min(i for i in range(self.k) if i != cop)
        start = self.blocks[j][0]
        self.mode0 = "stall"
        self.circuit = tuple(_eulerian_circuit(g, start, set().union(*map(set, self.blocks))))
        return start

    def initial_pstate(self, g, cops, robber):
        # (mode, circuit position); modes: 0 stall, 1 escape->v, 2 escape->u, 3 done/pendant
        return (3, 0) if self.mode0 == "pendant" else (0, 0)

    def choose(self, g, state, pstate):
        mode, pos = pstate
        r, cop, burned = state.robber, state.cops[0], state.burned
        if mode == 3:
            if r in self.vs:  # pendant dash: v_j -> u_j
                uj = self.us[self.vs.index(r)]
                if not burned >> g.edge_id(r, uj) & 1:
                    return uj, (3, pos)
            return r, (3, pos)
        if mode == 2:
            if r in self.vs:
                uj = self.us[self.vs.index(r)]
                if not burned >> g.edge_id(r, uj) & 1 and cop != uj:
                    return uj, (3, pos)
            return r, (3, pos)
        if mode == 1:
            t = self.block_of[r]
            vt = self.vs[t]
            if cop != vt and not burned >> g.edge_id(r, vt) & 1:
                return vt, (2, pos)
            mode = 0  # escape window closed; fall back to stalling
        # stall mode
        t = self.block_of[r]
        vt = self.vs[t]
        if cop in self.vs:
            if cop == vt:  # adjacent through the gateway: forced along the circuit
                nxt = self._advance(burned, r, pos)
                if nxt is not None:
                    return nxt
                return r, (0, pos)  # circuit exhausted: await capture
            return r, (0, pos)
        # cop strayed off the clique
        d_vt = bfs_distance(g, cop, vt, burned)
        if (d_vt < 0 or d_vt >= 2) and not burned >> g.edge_id(r, vt) & 1:
            return vt, (2, pos)
        if g.has_edge(cop, r) and not burned >> g.edge_id(cop, r) & 1:
            nxt = self._advance(burned, r, pos)
            if nxt is not None and nxt[0] != cop:
                return nxt
        return r, (0, pos)

    def _advance(self, burned, r, pos):
        if pos + 1 < len(self.circuit) and self.circuit[pos] == r:
            nxt = self.circuit[pos + 1]
            return (nxt, (0, pos + 1))
        return None


def _eulerian_circuit(g: Graph, start: int, allowed: set[int]) -> list[int]:
    """Hierholzer's circuit over the subgraph induced by `allowed`,
    smallest-neighbor-first, beginning and ending at `start`."""
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in allowed}
    for v in allowed:
        for (u, eid) in sorted(g.adjacency[v]):
            if u in allowed:
                adj[v].append((u, eid))
    used: set[int] = set()
    ptr = {v: 0 for v in allowed}
    stack = [start]
    out: list[int] = []
    while stack:
        v = stack[-1]
        found = False
        while ptr[v] < len(adj[v]):
            u, eid = adj[v][ptr[v]]
            ptr[v] += 1
            if eid not in used:
                used.add(eid)
                stack.append(u)
                found = True
                break
        if not found:
            out.append(stack.pop())
    out.reverse()
    return out


class StalematePolicyRobber(Policy):
    """The six-vertex stalemate analysis: dash for a pendant when the cop
    commits, otherwise sit tight forever."""

    side = "robber"
    name = "stalemate_policy"

    U, V, W, X, Y, Z = range(6)

    def __init__(self, g: Graph):
        expected = {(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (3, 5)}
        if g.vertex_count != 6 or set(g.edges) != expected:
            raise PolicyApplicabilityError("stalemate_policy needs the stalemate graph")

    def robber_placement(self, g, cops):
        if len(cops) != 1:
            raise PolicyApplicabilityError("stalemate_policy plays against one cop")
        c = cops[0]
        if c in (self.V, self.Y):
            return self.X
        if c in (self.X, self.Z):
            return self.V
        return self.W if c == self.U else self.U

    def choose(self, g, state, pstate):
        r, c = state.robber, state.cops[0]
        dest = r
        if r == self.X and c != self.Z:
            dest = self.Z
        elif r == self.V and c != self.Y:
            dest = self.Y
        elif r == self.W:
            if c == self.V:
                dest = self.X
            elif c == self.X:
                dest = self.V
        elif r == self.U:
            if c == self.X:
                dest = self.V
            elif c == self.V:
                dest = self.X
        if dest != r and state.burned >> g.edge_id(r, dest) & 1:
            dest = r
        return dest, pstate


# --- the distance-safety hypothesis -------------------------------------------


def robber_distance_safe(
    g: Graph,
    v: int,
    d: int,
    planned_moves: list[int],
    cop_placements: tuple[int, ...],
) -> bool:
    """Check the robber-safety hypothesis for a planned walk.

    planned_moves is the full walk w_0, w_1, ..., w_K (w_0 = start).  True
    iff i + dist(w_i, v) < d for every prefix position i < K (distances in
    the intact graph) and no cop starts within distance d of v.  Under
    that hypothesis no cop can capture the robber before his K-th move.
    """
    if not planned_moves:
        raise ValueError("planned_moves must contain at least the start vertex")
    for a, b in zip(planned_moves, planned_moves[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"planned_moves is not a walk: {a}->{b} missing")
    dist_v = all_distances_from(g, v)
    if any(0 <= dist_v[c] <= d for c in cop_placements):
        return False
    for i, w in enumerate(planned_moves[:-1]):
        if dist_v[w] < 0 or i + dist_v[w] >= d:
            return False
    return True


# --- catalog ------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    side: str
    factory: object  # (Graph, [params]) -> Policy
    summary: str


def _build_catalog():
    from .grid2xn import Grid2xnCopTeam

    def two(f):
        return lambda g, p: f(g, int(p[0]), int(p[1]))

    return {
        "stationary": CatalogEntry(
            "cop", lambda g, p: StationaryCop(g, [int(x) for x in p] or (0,)), "stand still"
        ),
        "greedy_closer": CatalogEntry(
            "cop",
            lambda g, p: GreedyCloserCop(g, [int(x) for x in p] or (0,)),
            "always step along a shortest path to the robber",
        ),
        "hypercube_mirror": CatalogEntry(
            "cop", lambda g, p: HypercubeMirrorCop(g), "close in, then mirror on Q_d"
        ),
        "guard_start_vertex": CatalogEntry(
            "cop",
            lambda g, p: GuardStartVertexCop(g, int(p[0]) if p else 0),
            "even-degree guard of the robber's start",
        ),
        "grid2xn_cop": CatalogEntry(
            "cop", lambda g, p: Grid2xnCopTeam(g, int(p[0])), "2xn placement and chase"
        ),
        "torus_placement": CatalogEntry("cop", two(TorusPlacementCop), "torus bound placement"),
        "grid_placement": CatalogEntry("cop", two(GridPlacementCop), "grid bound placement"),
        "farthest": CatalogEntry(
            "robber", lambda g, p: FarthestRobber(), "greedily keep away from the cops"
        ),
        "leaf_isolate": CatalogEntry(
            "robber",
            lambda g, p: LeafIsolateRobber(g, int(p[0]) if p else None),
            "step onto an unguarded leaf",
        ),
        "corner_isolate": CatalogEntry(
            "robber",
            lambda g, p: CornerIsolateRobber(g, int(p[0]), int(p[1]), (int(p[2]), int(p[3]))),
            "corner loop (m, n, ci, cj)",
        ),
        "border_isolate": CatalogEntry(
            "robber",
            lambda g, p: BorderIsolateRobber(g, *[int(x) for x in p]),
            "border run (m, n, i[, row[, dir]])",
        ),
        "gap_isolate": CatalogEntry(
            "robber",
            lambda g, p: GapIsolateRobber(g, *[int(x) for x in p]),
            "2xn mid-grid run (n, j[, dir])",
        ),
        "degree4_isolate": CatalogEntry(
            "robber",
            lambda g, p: Degree4IsolateRobber(
                g, int(p[0]), int(p[1]), (int(p[2]), int(p[3])), bool(int(p[4]))
            ),
            "interior double loop (m, n, i, j, wrap)",
        ),
        "eulerian_stall": CatalogEntry(
            "robber", two(EulerianStallRobber), "stall along an Eulerian circuit (m, k)"
        ),
        "stalemate_policy": CatalogEntry(
            "robber", lambda g, p: StalematePolicyRobber(g), "Figure-1 stalemate play"
        ),
    }


def make_policy(name: str, g: Graph, params: list = ()) -> Policy:
    catalog = _build_catalog()
    if name not in catalog:
        raise PolicyApplicabilityError(f"unknown policy {name!r}")
    return catalog[name].factory(g, list(params))


def policy_names() -> list[str]:
    return sorted(_build_catalog().keys())
