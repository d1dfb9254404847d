"""Deterministic game engine and transcripts."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from ..board import BoardGraph, Graph
from ..errors import AdjudicationError
from ..game import GameState, Side
from .base import SURRENDER, History, Strategy
from .scoring import phi as phi_of
from .scoring import uses_phi


@dataclass
class TurnRecord:
    turn: int
    cops: tuple[int, ...]
    robber: int
    cop_move: tuple[int, ...]
    robber_move: int | None
    phi: int
    r_size: int


@dataclass
class Transcript:
    graph: str
    cops_name: str
    robber_name: str
    k: int
    start_cops: tuple[int, ...]
    start_robber: int
    turns: list[TurnRecord] = field(default_factory=list)
    result: str = "cap"  # "captured" | "cap"
    result_turn: int = 0
    certificate: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def captured(self) -> bool:
        return self.result == "captured"

    @property
    def phis(self) -> list[int]:
        return [t.phi for t in self.turns]

    def to_json(self, g: Graph) -> dict:
        lab = g.label
        out = {
            "graph": self.graph,
            "cops": self.cops_name,
            "robber": self.robber_name,
            "start": {"cops": [lab(c) for c in self.start_cops], "robber": lab(self.start_robber)},
            "turns": [
                {
                    "cops": [lab(c) for c in t.cops],
                    "robber": lab(t.robber),
                    "copMove": [lab(c) for c in t.cop_move],
                    "robberMove": None if t.robber_move is None else lab(t.robber_move),
                    "phi": t.phi,
                    "rSize": t.r_size,
                }
                for t in self.turns
            ],
            "result": {"type": self.result, "turn": self.result_turn},
        }
        if self.certificate:
            out["result"]["certificate"] = "solver"
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def dumps(self, g: Graph) -> str:
        return json.dumps(self.to_json(g), sort_keys=False)

    def summary_row(self, g: Graph) -> dict:
        phis = self.phis
        return {
            "n": getattr(g, "n", len(g.vertices)),
            "k": self.k,
            "cops": self.cops_name,
            "robber": self.robber_name,
            "result": self.result,
            "turns": self.result_turn,
            "max_phi": max(phis) if phis else "",
            "min_phi": min(phis) if phis else "",
        }


SUMMARY_FIELDS = ["n", "k", "cops", "robber", "result", "turns", "max_phi", "min_phi"]


def summary_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SUMMARY_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _phi(g: Graph, v: int) -> int:
    return phi_of(g.n, g.coord(v)) if uses_phi(g) else 0


def simulate(
    g: Graph,
    cops: Strategy,
    robber: Strategy,
    cop_start=None,
    robber_start=None,
    turn_cap: int = 500,
) -> Transcript:
    """Play placement, then alternate cop and robber moves until capture or the cap."""
    if cops.side != "cops" or robber.side != "robber":
        raise ValueError("strategy sides do not match (cops, robber)")
    if turn_cap < 1:
        raise ValueError("turn cap must be at least 1")

    start = tuple(cop_start) if cop_start is not None else tuple(cops.place(g))
    if len(start) != cops.k or any(c not in g.adj for c in start):
        raise AdjudicationError(cops.describe(), f"illegal placement {start}")
    r0 = robber_start if robber_start is not None else robber.place(g, start)
    if r0 not in g.adj:
        raise AdjudicationError(robber.describe(), f"illegal placement {r0}")

    tr = Transcript(g.describe(), cops.describe(), robber.describe(), cops.k, start, r0)
    state = GameState(start, r0, Side.COPS)
    history = History()
    history.visited.add(state.key())
    if state.captured:
        tr.result, tr.result_turn = "captured", 0
        return tr

    for turn in range(1, turn_cap + 1):
        history.turn = turn
        move = tuple(cops.move(g, state, history))
        if len(move) != len(state.cops) or any(m not in g.closed(c) for c, m in zip(state.cops, move)):
            raise AdjudicationError(cops.describe(), f"illegal joint move {state.cops} -> {move}")
        after = GameState(move, state.robber, Side.ROBBER)
        history.visited.add(after.key())
        r_size = len(g.closed(state.robber) - set(move))
        rec = TurnRecord(turn, state.cops, state.robber, move, None, _phi(g, state.robber), r_size)
        tr.turns.append(rec)
        if after.captured:
            tr.result, tr.result_turn = "captured", turn
            return tr
        r = robber.move(g, after, history)
        if r is SURRENDER:
            r = state.robber
        if r not in g.closed(state.robber):
            raise AdjudicationError(robber.describe(), f"illegal move {state.robber} -> {r}")
        rec.robber_move = r
        if isinstance(g, BoardGraph):
            (x0, y0), (x1, y1) = g.coord(state.robber), g.coord(r)
            history.robber_steps.append((x1 - x0, y1 - y0))
        else:
            history.robber_steps.append(None)
        state = GameState(move, r, Side.COPS)
        history.visited.add(state.key())
        if state.captured:
            tr.result, tr.result_turn = "captured", turn
            return tr

    tr.result, tr.result_turn = "cap", turn_cap
    cert = getattr(robber, "certificate", None)
    if cert is not None:
        tr.certificate = bool(cert(g, state))
    tr.notes.extend(cops.notes + robber.notes)
    return tr
