"""Exact game solving by attractor computation over the reachable game graph.

The cop side wins from exactly the least fixed point W of:

* captured states are in W;
* a CopTurn state is in W iff some successor is in W;
* a RobberTurn state is in W iff every successor is in W.

States outside W, including all infinite plays, are robber wins (the
robber plays a safety game).  W and its ranks are computed retrograde
with per-state outstanding-successor counters, so cycles default to
robber wins without any loop bookkeeping.

Ranks count half-turns; a capture on the cop half-turn of round t has
rank 2t-1 from the round-t CopTurn state, and a robber move into capture
has rank 2t, so rounds = ceil(rank / 2).

The reachable graph is grown in stages (horizon doubling).  States past
the current horizon count as robber wins, which is pessimistic for the
cop, so a cop win certified with rank below the horizon is exact; robber
wins are only reported once the reachable graph is fully expanded.  This
keeps dense graphs with fast captures cheap while staying exact.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .engine import (
    BRIDGE_BURNING,
    COP_TURN,
    ROBBER_TURN,
    GameState,
    Variant,
    cop_successors,
    is_capture,
    robber_successors,
)
from .graph import Graph, component_bitmask, is_connected

DEFAULT_BUDGET = 10**7


class BudgetExceeded(Exception):
    """Raised when a solve touches more states than its budget allows."""

    def __init__(self, explored: int):
        super().__init__(f"explored-state budget exceeded ({explored} states)")
        self.explored = explored


class DisconnectedGraphError(ValueError):
    """Whole-game solving assumes a connected graph."""


class CaptureTimeDomainError(ValueError):
    """capt_b is defined only for graphs with bridge-burning cop number 1."""


class PositionValue(NamedTuple):
    winner: str  # "cop" | "robber"
    rounds: int | None  # present iff winner == "cop"
    explored: int


@dataclass(frozen=True)
class SolveResult:
    winner: str
    k: int
    optimal_placement: tuple[int, ...] | None
    capture_time_rounds: int | None
    explored_states: int

    def to_json_dict(self) -> dict:
        return {
            "winner": self.winner,
            "k": self.k,
            "placement": list(self.optimal_placement) if self.optimal_placement else None,
            "captureTimeRounds": self.capture_time_rounds,
            "exploredStates": self.explored_states,
        }


@dataclass(frozen=True)
class CopNumberResult:
    value: int | None  # None when the search exceeded k_max
    k_max: int
    explored_states: int

    @property
    def exceeded(self) -> bool:
        return self.value is None


class _GameSpace:
    """Reachable game graph from one initial state, grown stage by stage."""

    KIND_COP = 0
    KIND_ROBBER = 1
    KIND_CAPTURED = 2
    KIND_ESCAPED = 3

    def __init__(self, g: Graph, init: GameState, variant: Variant, budget: int | None):
        self.g = g
        self.variant = variant
        self.budget = budget
        self.ids: dict[GameState, int] = {}
        self.keys: list[GameState] = []
        self.kind: list[int] = []
        self.depth: list[int] = []
        self.preds: list[list[int]] = []
        self.robber_succ_count: list[int] = []
        self.captured_ids: list[int] = []
        self._comp_cache: dict[tuple[int, int], int] = {}
        self._queue: deque[int] = deque()
        self._fully_expanded = False
        self._intern(init.canonical(), 0)

    def _component(self, burned: int, robber: int) -> int:
        key = (burned, robber)
        comp = self._comp_cache.get(key)
        if comp is None:
            comp = component_bitmask(self.g, robber, burned)
            self._comp_cache[key] = comp
        return comp

    def _classify(self, s: GameState) -> int:
        if s.robber in s.cops:
            return self.KIND_CAPTURED
        comp = self._component(s.burned, s.robber)
        if not any(comp >> c & 1 for c in s.cops):
            return self.KIND_ESCAPED
        return self.KIND_COP if s.phase == COP_TURN else self.KIND_ROBBER

    def _intern(self, s: GameState, depth: int) -> int:
        sid = self.ids.get(s)
        if sid is not None:
            return sid
        sid = len(self.keys)
        if self.budget is not None and sid >= self.budget:
            raise BudgetExceeded(sid)
        self.ids[s] = sid
        self.keys.append(s)
        k = self._classify(s)
        self.kind.append(k)
        self.depth.append(depth)
        self.preds.append([])
        self.robber_succ_count.append(0)
        if k == self.KIND_CAPTURED:
            self.captured_ids.append(sid)
        elif k in (self.KIND_COP, self.KIND_ROBBER):
            self._queue.append(sid)
        return sid

    def successors(self, s: GameState) -> list[GameState]:
        if s.phase == COP_TURN:
            return cop_successors(self.g, s)
        return [t for (t, _mv) in robber_successors(self.g, s, self.variant)]

    def expand_to(self, horizon: int) -> None:
        """Expand every queued state of depth < horizon."""
        q = self._queue
        while q and self.depth[q[0]] < horizon:
            sid = q.popleft()
            s = self.keys[sid]
            d = self.depth[sid] + 1
            succ_ids = [self._intern(t, d) for t in self.successors(s)]
            if self.kind[sid] == self.KIND_ROBBER:
                self.robber_succ_count[sid] = len(succ_ids)
            for t in succ_ids:
                self.preds[t].append(sid)
        if not q:
            self._fully_expanded = True

    @property
    def fully_expanded(self) -> bool:
        return self._fully_expanded

    def frontier_ids(self) -> set[int]:
        return set(self._queue)

    def run_attractor(self) -> tuple[bytearray, list[int]]:
        """Retrograde pass; returns (in-W flags, half-turn ranks)."""
        n = len(self.keys)
        won = bytearray(n)
        rank = [0] * n
        pending = self.robber_succ_count.copy()
        frontier = self.frontier_ids()
        # Unexpanded states stay out of W: pessimistic for the cop side.
        bfs: deque[int] = deque()
        for sid in self.captured_ids:
            won[sid] = 1
            bfs.append(sid)
        while bfs:
            sid = bfs.popleft()
            r1 = rank[sid] + 1
            for p in self.preds[sid]:
                if won[p] or p in frontier:
                    continue
                if self.kind[p] == self.KIND_COP:
                    won[p] = 1
                    rank[p] = r1
                    bfs.append(p)
                else:
                    pending[p] -= 1
                    if pending[p] == 0:
                        won[p] = 1
                        rank[p] = r1
                        bfs.append(p)
        return won, rank


def solve_position(
    g: Graph,
    state: GameState,
    variant: Variant = BRIDGE_BURNING,
    budget: int | None = DEFAULT_BUDGET,
) -> PositionValue:
    """Decide one position exactly: CopWin(rounds) or RobberWin."""
    state = state.canonical()
    _validate_state(g, state)
    if is_capture(state):
        return PositionValue("cop", 0, 1)
    space = _GameSpace(g, state, variant, budget)
    horizon = 4
    while True:
        space.expand_to(horizon)
        won, rank = space.run_attractor()
        if won[0]:
            rho = rank[0]
            if rho < horizon or space.fully_expanded:
                return PositionValue("cop", (rho + 1) // 2, len(space.keys))
        elif space.fully_expanded:
            return PositionValue("robber", None, len(space.keys))
        horizon *= 2


def _validate_state(g: Graph, s: GameState) -> None:
    for v in (*s.cops, s.robber):
        if not (0 <= v < g.vertex_count):
            raise ValueError(f"state references invalid vertex {v}")
    if s.burned >> g.edge_count:
        raise ValueError("burned mask has bits beyond edge_count")
    if s.phase not in (COP_TURN, ROBBER_TURN):
        raise ValueError(f"bad phase {s.phase}")


def extract_strategy(
    g: Graph,
    state: GameState,
    variant: Variant = BRIDGE_BURNING,
    budget: int | None = DEFAULT_BUDGET,
) -> dict[GameState, GameState] | None:
    """Optimal cop move per winning CopTurn state, or None if the robber wins.

    The chosen move minimizes the attractor rank, ties broken by smallest
    successor state, so the mapping is deterministic.
    """
    state = state.canonical()
    space = _GameSpace(g, state, variant, budget)
    while not space.fully_expanded:
        space.expand_to(1 << 62)
    won, rank = space.run_attractor()
    if not won[0]:
        return None
    strategy: dict[GameState, GameState] = {}
    for sid, s in enumerate(space.keys):
        if not won[sid] or space.kind[sid] != space.KIND_COP:
            continue
        best: tuple[int, GameState] | None = None
        for t in space.successors(s):
            tid = space.ids[t]
            if won[tid] and (best is None or (rank[tid], t) < best):
                best = (rank[tid], t)
        assert best is not None
        strategy[s] = best[1]
    return strategy


class _PlacementOutcome(NamedTuple):
    placement: tuple[int, ...]
    cop_wins: bool
    worst_rounds: int
    explored: int


def _robber_start_order(g: Graph, placement: tuple[int, ...]) -> list[int]:
    """Starts far from the cops first: finds refuting robber wins quickly.

    Order is a per-placement heuristic only; results never depend on it.
    """
    from .graph import all_distances_from

    dmin = [g.vertex_count + 1] * g.vertex_count
    for c in set(placement):
        for v, d in enumerate(all_distances_from(g, c)):
            if 0 <= d < dmin[v]:
                dmin[v] = d
    starts = [v for v in range(g.vertex_count) if v not in placement]
    starts.sort(key=lambda v: (-dmin[v], v))
    return starts


def _evaluate_placement(
    g: Graph,
    placement: tuple[int, ...],
    variant: Variant,
    budget: int | None,
) -> _PlacementOutcome:
    """Budget counts total explored states across this placement's solves."""
    starts = _robber_start_order(g, placement)
    if not starts:
        # Every vertex is occupied; the robber is captured at placement time.
        return _PlacementOutcome(placement, True, 0, 0)
    explored = 0
    worst = 0
    for r in starts:
        remaining = None if budget is None else budget - explored
        if remaining is not None and remaining <= 0:
            raise BudgetExceeded(explored)
        try:
            val = solve_position(g, GameState(0, placement, r, COP_TURN), variant, remaining)
        except BudgetExceeded as e:
            raise BudgetExceeded(explored + e.explored) from None
        explored += val.explored
        if val.winner == "robber":
            return _PlacementOutcome(placement, False, 0, explored)
        worst = max(worst, val.rounds)
    return _PlacementOutcome(placement, True, worst, explored)


def _thread_count(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("BRIDGEBURN_THREADS", "1") or "0")
    if threads == 0:
        threads = os.cpu_count() or 1
    return max(1, threads)


def cop_wins_with_k(
    g: Graph,
    k: int,
    variant: Variant = BRIDGE_BURNING,
    budget: int | None = DEFAULT_BUDGET,
    threads: int | None = None,
) -> SolveResult:
    """Search all initial cop multisets of size k against best robber play.

    The cop side wins iff some placement beats every robber start.  The
    reported placement is the lexicographically least one among those
    minimizing worst-case capture rounds; a robber start on top of a cop
    counts as capture in round 0 and is never chosen while another vertex
    exists.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    if not is_connected(g):
        raise DisconnectedGraphError("cop_wins_with_k requires a connected graph")
    placements = list(itertools.combinations_with_replacement(range(g.vertex_count), k))
    nworkers = _thread_count(threads)
    if nworkers > 1 and len(placements) > 1:
        # Parallel tasks each own the full budget (no shared mutable state).
        outcomes = _evaluate_parallel(g, placements, variant, budget, nworkers)
        explored = sum(o.explored for o in outcomes)
    else:
        outcomes = []
        explored = 0
        for p in placements:
            remaining = None if budget is None else budget - explored
            if remaining is not None and remaining <= 0:
                raise BudgetExceeded(explored)
            try:
                outcomes.append(_evaluate_placement(g, p, variant, remaining))
            except BudgetExceeded as e:
                raise BudgetExceeded(explored + e.explored) from None
            explored += outcomes[-1].explored
    best: _PlacementOutcome | None = None
    for o in outcomes:  # lex placement order; strict < keeps the least argmin
        if o.cop_wins and (best is None or o.worst_rounds < best.worst_rounds):
            best = o
    if best is None:
        return SolveResult("robber", k, None, None, explored)
    return SolveResult("cop", k, best.placement, best.worst_rounds, explored)


def _evaluate_parallel(g, placements, variant, budget, nworkers):
    from concurrent.futures import ProcessPoolExecutor

    # Placements are independent tasks; the merge is by placement order, so
    # scheduling cannot change the result.
    with ProcessPoolExecutor(max_workers=nworkers) as pool:
        futures = [
            pool.submit(_evaluate_placement, g, p, variant, budget) for p in placements
        ]
        return [f.result() for f in futures]


def bridge_burning_cop_number(
    g: Graph,
    k_max: int = 8,
    variant: Variant = BRIDGE_BURNING,
    budget: int | None = DEFAULT_BUDGET,
    threads: int | None = None,
) -> CopNumberResult:
    """Least k <= k_max such that k cops win; monotonicity in k is assumed."""
    explored = 0
    for k in range(1, k_max + 1):
        res = cop_wins_with_k(g, k, variant, budget, threads)
        explored += res.explored_states
        if res.winner == "cop":
            return CopNumberResult(k, k_max, explored)
    return CopNumberResult(None, k_max, explored)


def capture_time_bb(
    g: Graph,
    budget: int | None = DEFAULT_BUDGET,
    threads: int | None = None,
) -> SolveResult:
    """Worst-case rounds for one cop on a graph with c_b = 1 (capt_b)."""
    res = cop_wins_with_k(g, 1, BRIDGE_BURNING, budget, threads)
    if res.winner != "cop":
        raise CaptureTimeDomainError("capture time is defined only when c_b(G) = 1")
    assert res.capture_time_rounds is not None
    assert res.capture_time_rounds <= g.edge_count * g.vertex_count
    return res
