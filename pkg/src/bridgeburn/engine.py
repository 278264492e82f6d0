"""Bridge-burning game rules: states, legal moves, transitions, terminals.

A round is one cop half-turn followed by one robber half-turn.  Every cop
independently stays or crosses one unburned edge; the robber stays or
crosses one unburned incident edge, and crossing permanently deletes that
edge for both sides.  Capture (any cop sharing the robber's vertex) is
checked after every half-turn and ends the game immediately.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .graph import Graph, component_bitmask

COP_TURN = 0
ROBBER_TURN = 1

ROBBER = -1  # MoveRecord.actor value for the robber; cops use their index


class PhaseError(ValueError):
    pass


class IllegalMoveError(ValueError):
    pass


class GameState(NamedTuple):
    """Search node: burned-edge bitmask, sorted cop multiset, robber, phase."""

    burned: int
    cops: tuple[int, ...]
    robber: int
    phase: int

    def canonical(self) -> "GameState":
        return self._replace(cops=tuple(sorted(self.cops)))


def make_state(burned: int, cops: Iterable[int], robber: int, phase: int) -> GameState:
    return GameState(burned, tuple(sorted(cops)), robber, phase)


class MoveRecord(NamedTuple):
    actor: int  # cop index, or ROBBER
    from_vertex: int
    to_vertex: int
    burned_edge: int | None = None  # set iff the robber actually moved


@dataclass(frozen=True)
class Variant:
    """burning=False recovers classic Cops and Robbers (no edge deletion)."""

    burning: bool = True


BRIDGE_BURNING = Variant(burning=True)
CLASSIC = Variant(burning=False)


def is_capture(s: GameState) -> bool:
    return s.robber in s.cops


def cop_move_options(g: Graph, burned: int, c: int) -> list[int]:
    """Vertices one cop at c may occupy next turn (stay first, then neighbors)."""
    opts = [c]
    for (y, eid) in g.adjacency[c]:
        if not burned >> eid & 1:
            opts.append(y)
    return opts


def cop_successors(g: Graph, s: GameState) -> list[GameState]:
    """All one-turn cop-team moves, canonicalized and deduplicated.

    Cops move simultaneously and independently; two cops may swap across
    one edge.  The burned mask never changes on a cop turn.
    """
    if s.phase != COP_TURN:
        raise PhaseError("cop_successors requires a CopTurn state")
    burned = s.burned
    option_lists = [cop_move_options(g, burned, c) for c in s.cops]
    seen: set[tuple[int, ...]] = set()
    out: list[GameState] = []
    for combo in itertools.product(*option_lists):
        cops = tuple(sorted(combo))
        if cops not in seen:
            seen.add(cops)
            out.append(GameState(burned, cops, s.robber, ROBBER_TURN))
    return out


def robber_successors(
    g: Graph, s: GameState, variant: Variant = BRIDGE_BURNING
) -> list[tuple[GameState, MoveRecord]]:
    """Stay, plus one successor per unburned incident edge.

    Moving burns the crossed edge (bridge-burning variant only).  Moving
    onto a cop is legal and yields a captured state.
    """
    if s.phase != ROBBER_TURN:
        raise PhaseError("robber_successors requires a RobberTurn state")
    r = s.robber
    out = [(GameState(s.burned, s.cops, r, COP_TURN), MoveRecord(ROBBER, r, r))]
    for (y, eid) in g.adjacency[r]:
        if s.burned >> eid & 1:
            continue
        mask = s.burned | (1 << eid) if variant.burning else s.burned
        out.append((GameState(mask, s.cops, y, COP_TURN), MoveRecord(ROBBER, r, y, eid)))
    return out


def robber_component_check(g: Graph, s: GameState) -> bool:
    """True iff some cop still shares the robber's component.

    False means the robber has escaped permanently: burning only ever
    splits components further, so no cop can ever reach him again.
    """
    comp = component_bitmask(g, s.robber, s.burned)
    return any(comp >> c & 1 for c in s.cops)


# --- transcripts -------------------------------------------------------------


@dataclass(frozen=True)
class Outcome:
    kind: str  # "cop_win" | "robber_escape" | "round_limit"
    round: int | None = None
    reason: str | None = None


@dataclass
class Transcript:
    """Full record of one play-through; replayable move by move."""

    graph: Graph
    initial: GameState
    turns: list[list[MoveRecord]] = field(default_factory=list)
    outcome: Outcome | None = None

    def replay(self) -> GameState:
        """Re-apply every recorded move, validating legality; returns final state."""
        s = self.initial
        for half_turn in self.turns:
            if s.phase == COP_TURN:
                if len(half_turn) != len(s.cops):
                    raise IllegalMoveError("cop half-turn needs one move per cop")
                new_cops = list(s.cops)
                for mv in half_turn:
                    if new_cops[mv.actor] != mv.from_vertex:
                        raise IllegalMoveError(f"cop {mv.actor} not at {mv.from_vertex}")
                    if mv.from_vertex != mv.to_vertex:
                        eid = self.graph.edge_id(mv.from_vertex, mv.to_vertex)
                        if s.burned >> eid & 1:
                            raise IllegalMoveError(f"cop {mv.actor} crossed burned edge {eid}")
                    new_cops[mv.actor] = mv.to_vertex
                s = make_state(s.burned, new_cops, s.robber, ROBBER_TURN)
            else:
                (mv,) = half_turn
                if mv.actor != ROBBER or mv.from_vertex != s.robber:
                    raise IllegalMoveError("robber half-turn mismatch")
                if mv.from_vertex == mv.to_vertex:
                    s = GameState(s.burned, s.cops, s.robber, COP_TURN)
                else:
                    eid = self.graph.edge_id(mv.from_vertex, mv.to_vertex)
                    if s.burned >> eid & 1:
                        raise IllegalMoveError(f"robber crossed burned edge {eid}")
                    if mv.burned_edge != eid:
                        raise IllegalMoveError("robber move must record its burned edge")
                    s = GameState(s.burned | (1 << eid), s.cops, mv.to_vertex, COP_TURN)
        return s

    def robber_move_count(self) -> int:
        return sum(
            1
            for half in self.turns
            for mv in half
            if mv.actor == ROBBER and mv.from_vertex != mv.to_vertex
        )

    def to_json_dict(self) -> dict:
        from .graph import to_json_dict

        out = {
            "graph": to_json_dict(self.graph),
            "cops0": list(self.initial.cops),
            "robber0": self.initial.robber,
            "turns": [
                {
                    "actor": "robber" if mv.actor == ROBBER else f"cop{mv.actor}",
                    "from": mv.from_vertex,
                    "to": mv.to_vertex,
                    "burned": mv.burned_edge,
                }
                for half in self.turns
                for mv in half
            ],
        }
        if self.outcome is not None:
            out["outcome"] = {
                "kind": self.outcome.kind,
                "round": self.outcome.round,
                "reason": self.outcome.reason,
            }
        return out
