"""Match runner and exhaustive one-sided policy validation.

run_match plays two policies against each other and records a replayable
transcript.  exhaust_vs_policy pins one side to a policy and searches
every move (and optionally every placement) of the free side:

* fixed cop: the product system is a one-robber-chooser graph, so the
  policy is beaten iff an escape or a repeatable position is reachable;
* fixed robber: the cop chooses, so the policy is beaten iff any capture
  is reachable, and breadth-first order yields an earliest-capture
  counterexample transcript.

Nodes are (game state, policy internal state) pairs, which keeps the
memoization sound for stateful policies.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .engine import (
    COP_TURN,
    ROBBER,
    ROBBER_TURN,
    GameState,
    MoveRecord,
    Outcome,
    Transcript,
    is_capture,
    robber_component_check,
)
from .graph import Graph
from .solver import BudgetExceeded
from .strategies import Policy

DEFAULT_EXHAUST_BUDGET = 10**7


class IllegalPolicyMoveError(ValueError):
    def __init__(self, policy: Policy, detail: str):
        super().__init__(f"policy {policy.name!r} returned an illegal move: {detail}")
        self.policy = policy


@dataclass(frozen=True)
class Verdict:
    outcome: str  # "wins" | "beaten"
    nodes_searched: int
    counterexample: Transcript | None = None

    @property
    def wins_always(self) -> bool:
        return self.outcome == "wins"

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "nodesSearched": self.nodes_searched,
            "counterexample": None
            if self.counterexample is None
            else self.counterexample.to_json_dict(),
        }


def _apply_cop_move(g: Graph, s: GameState, dest: tuple[int, ...], policy: Policy):
    if len(dest) != len(s.cops):
        raise IllegalPolicyMoveError(policy, f"returned {len(dest)} moves for {len(s.cops)} cops")
    records = []
    for idx, (frm, to) in enumerate(zip(s.cops, dest)):
        if frm != to:
            if not g.has_edge(frm, to):
                raise IllegalPolicyMoveError(policy, f"cop {frm}->{to} is not an edge")
            if s.burned >> g.edge_id(frm, to) & 1:
                raise IllegalPolicyMoveError(policy, f"cop {frm}->{to} crosses a burned edge")
        records.append(MoveRecord(idx, frm, to))
    return GameState(s.burned, tuple(sorted(dest)), s.robber, ROBBER_TURN), records


def _apply_robber_move(g: Graph, s: GameState, to: int, policy: Policy):
    frm = s.robber
    if frm == to:
        return GameState(s.burned, s.cops, frm, COP_TURN), [MoveRecord(ROBBER, frm, to)]
    if not g.has_edge(frm, to):
        raise IllegalPolicyMoveError(policy, f"robber {frm}->{to} is not an edge")
    eid = g.edge_id(frm, to)
    if s.burned >> eid & 1:
        raise IllegalPolicyMoveError(policy, f"robber {frm}->{to} crosses a burned edge")
    return (
        GameState(s.burned | (1 << eid), s.cops, to, COP_TURN),
        [MoveRecord(ROBBER, frm, to, eid)],
    )


def run_match(
    g: Graph,
    cop: Policy,
    robber: Policy,
    max_rounds: int | None = None,
) -> Transcript:
    """Alternate half-turns until capture, permanent escape, or the limit."""
    if cop.side != "cop" or robber.side != "robber":
        raise ValueError("run_match needs one cop policy and one robber policy")
    if max_rounds is None:
        max_rounds = max(1, g.edge_count * g.vertex_count)
    cops = tuple(sorted(cop.cop_placement(g)))
    r0 = robber.robber_placement(g, cops)
    state = GameState(0, cops, r0, COP_TURN)
    t = Transcript(graph=g, initial=state)
    if is_capture(state):
        t.outcome = Outcome("cop_win", round=0)
        return t
    cop_ps = cop.initial_pstate(g, cops, r0)
    rob_ps = robber.initial_pstate(g, cops, r0)
    for rnd in range(1, max_rounds + 1):
        move, cop_ps = cop.choose(g, state, cop_ps)
        state, records = _apply_cop_move(g, state, tuple(move), cop)
        t.turns.append(records)
        if is_capture(state):
            t.outcome = Outcome("cop_win", round=rnd)
            return t
        dest, rob_ps = robber.choose(g, state, rob_ps)
        state, records = _apply_robber_move(g, state, dest, robber)
        t.turns.append(records)
        if is_capture(state):
            t.outcome = Outcome("cop_win", round=rnd)
            return t
        if not robber_component_check(g, state):
            t.outcome = Outcome("robber_escape", round=rnd, reason="isolated")
            return t
    t.outcome = Outcome("round_limit", round=max_rounds)
    return t


# --- exhaustive validation ----------------------------------------------------


def exhaust_vs_policy(
    g: Graph,
    fixed: Policy,
    free_side_placements=None,
    k_cops: int = 1,
    budget: int | None = DEFAULT_EXHAUST_BUDGET,
) -> Verdict:
    """Search all free-side play against the pinned policy.

    free_side_placements restricts the free side's initial choices (cop
    multisets when the robber is pinned; robber vertices when the cop is
    pinned).  The verdict's counterexample is the earliest loss by round
    (fixed robber) or the first refutation in search order (fixed cop).
    """
    if fixed.side == "robber":
        return _exhaust_cops_vs_robber(g, fixed, free_side_placements, k_cops, budget)
    return _exhaust_robbers_vs_cop(g, fixed, free_side_placements, budget)


def _robber_moves(g: Graph, s: GameState):
    yield s.robber
    for (y, eid) in g.adjacency[s.robber]:
        if not s.burned >> eid & 1:
            yield y


def _cop_team_moves(g: Graph, s: GameState):
    per_cop = []
    for c in s.cops:
        opts = [c]
        for (y, eid) in g.adjacency[c]:
            if not s.burned >> eid & 1:
                opts.append(y)
        per_cop.append(opts)
    seen = set()
    for combo in itertools.product(*per_cop):
        if combo not in seen:
            seen.add(combo)
            yield combo


def _exhaust_cops_vs_robber(g, fixed, placements, k_cops, budget):
    if placements is None:
        placements = itertools.combinations_with_replacement(range(g.vertex_count), k_cops)
    nodes = 0
    best: tuple[int, Transcript] | None = None  # (capture half-depth, transcript)
    for placement in placements:
        cops = tuple(sorted(placement))
        r0 = fixed.robber_placement(g, cops)
        init = GameState(0, cops, r0, COP_TURN)
        ps0 = fixed.initial_pstate(g, cops, r0)
        if is_capture(init):
            tr = Transcript(graph=g, initial=init, outcome=Outcome("cop_win", round=0))
            return Verdict("beaten", nodes + 1, tr)
        # BFS by half-turns; cop branches, robber move pinned by the policy.
        seen = {(init, ps0): None}
        frontier: deque = deque([((init, ps0), 0)])
        while frontier:
            (node, depth) = frontier.popleft()
            if best is not None and depth >= best[0]:
                break
            state, ps = node
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(nodes)
            if state.phase == COP_TURN:
                children = []
                for combo in _cop_team_moves(g, state):
                    records = [MoveRecord(i, f, t) for i, (f, t) in enumerate(zip(state.cops, combo))]
                    children.append((GameState(state.burned, tuple(sorted(combo)), state.robber, ROBBER_TURN), ps, records))
            else:
                dest, nps = fixed.choose(g, state, ps)
                nstate, records = _apply_robber_move(g, state, dest, fixed)
                children = [(nstate, nps, records)]
            for (nstate, nps, records) in children:
                key = (nstate, nps)
                if key in seen:
                    continue
                seen[key] = (node, records)
                if is_capture(nstate):
                    tr = _rebuild_transcript(g, init, seen, key)
                    tr.outcome = Outcome("cop_win", round=(depth + 2) // 2)
                    if best is None or depth + 1 < best[0]:
                        best = (depth + 1, tr)
                    continue
                if not robber_component_check(g, nstate):
                    continue  # escaped: the fixed robber wins this branch
                frontier.append((key, depth + 1))
    if best is None:
        return Verdict("wins", nodes)
    return Verdict("beaten", nodes, best[1])


def _exhaust_robbers_vs_cop(g, fixed, placements, budget):
    cops = tuple(sorted(fixed.cop_placement(g)))
    if placements is None:
        starts = [v for v in range(g.vertex_count) if v not in cops]
        if not starts:
            starts = list(range(g.vertex_count))
    else:
        starts = list(placements)
    nodes = 0
    # Iterative DFS with an explicit GRAY set: a repeated in-progress node
    # means the robber can loop forever, beating the cop policy.
    done: set = set()
    for r0 in starts:
        init = GameState(0, cops, r0, COP_TURN)
        if is_capture(init):
            continue
        ps0 = fixed.initial_pstate(g, cops, r0)
        root = (init, ps0)
        parent = {root: None}
        gray: set = set()
        stack: list[tuple] = [(root, None)]  # (node, child iterator)
        while stack:
            node, it = stack[-1]
            if it is None:
                if node in done:
                    stack.pop()
                    continue
                if node in gray:
                    stack.pop()
                    continue
                nodes += 1
                if budget is not None and nodes > budget:
                    raise BudgetExceeded(nodes)
                state, ps = node
                if is_capture(state):
                    done.add(node)
                    stack.pop()
                    continue
                if not robber_component_check(g, state):
                    tr = _rebuild_transcript(g, init, parent, node)
                    tr.outcome = Outcome("robber_escape", reason="isolated")
                    return Verdict("beaten", nodes, tr)
                gray.add(node)
                it = self_iter = _node_children(g, fixed, node)
                stack[-1] = (node, self_iter)
            try:
                child, records = next(it)
            except StopIteration:
                gray.discard(node)
                done.add(node)
                stack.pop()
                continue
            if child in gray:
                parent.setdefault(child, (node, records))
                tr = _rebuild_transcript(g, init, parent, child)
                tr.outcome = Outcome("robber_escape", reason="repeatable position")
                return Verdict("beaten", nodes, tr)
            if child not in done:
                parent.setdefault(child, (node, records))
                stack.append((child, None))
    return Verdict("wins", nodes)


def _node_children(g, fixed, node):
    state, ps = node
    if state.phase == COP_TURN:
        dest, nps = fixed.choose(g, state, ps)
        nstate, records = _apply_cop_move(g, state, tuple(dest), fixed)
        yield (nstate, nps), records
    else:
        for to in _robber_moves(g, state):
            nstate, records = _apply_robber_move(g, state, to, fixed)
            yield (nstate, ps), records


def _rebuild_transcript(g, init, parent, node) -> Transcript:
    chain = []
    cur = node
    while parent[cur] is not None:
        prev, records = parent[cur]
        chain.append(records)
        cur = prev
    chain.reverse()
    return Transcript(graph=g, initial=init, turns=chain)
