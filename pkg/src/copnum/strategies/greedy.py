"""Greedy one-move-lookahead play driven by the robber's short diagonal.

Cops minimize, over their joint moves, the best score the robber can reach
with its reply; the robber maximizes, over its replies, the cops' best
answer one move later.  Scores are (Phi, number of safe replies) pairs as
packed by :mod:`.scoring`.
"""

from __future__ import annotations

import numpy as np

from ..board import BoardGraph, Graph
from ..game import GameState, Side
from .base import SURRENDER, History, Strategy, central_diagonal
from .scoring import CAPTURE, DOOMED, cop_move_values, response_value, scorer


def greedy_cop_move(
    g: Graph, state: GameState, visited=frozenset(), widen: bool = True
) -> tuple[int, ...]:
    """Joint move aligned with ``state.cops``.

    Order of preference: capture; smallest worst-case Phi; fewest safe robber
    replies; a resulting position not in ``visited``; lexicographically first.
    With ``widen``, if every move at the best score repeats a position, the
    next score level is tried, so the cops never cycle while an unvisited
    move exists.  Without it, repeats fall through to the lexicographic choice.
    """
    sc = scorer(g)
    dests, vals = cop_move_values(sc, sc.loc(state.cops), sc.index[state.robber])
    flat = vals.ravel()
    best = flat.min()
    tied = np.flatnonzero(flat == best)

    def key(i):
        return tuple(sc.vertices[dests[c][j]] for c, j in enumerate(np.unravel_index(i, vals.shape)))

    for i in tied:
        move = key(i)
        if (tuple(sorted(move)), state.robber, int(Side.ROBBER)) not in visited:
            return move
    if widen and best != CAPTURE:
        for i in np.argsort(flat, kind="stable")[len(tied):]:
            move = key(i)
            if (tuple(sorted(move)), state.robber, int(Side.ROBBER)) not in visited:
                return move
    return key(tied[0])


def robber_reply_scores(g: Graph, cops: tuple[int, ...], options) -> list[int]:
    """Greedy robber score for standing on each option next to ``cops``."""
    sc = scorer(g)
    cl = sc.loc(cops)
    guarded = sc.guarded(cl)
    out = []
    for v in options:
        i = sc.index[v]
        out.append(DOOMED if guarded[i] else response_value(sc, cl, i))
    return out


def greedy_robber_move(g: Graph, state: GameState, visited=frozenset()):
    """Best reply in N[robber] minus the cops' squares, or SURRENDER if none."""
    options = sorted(g.closed(state.robber) - set(state.cops))
    if not options:
        return SURRENDER
    scores = robber_reply_scores(g, state.cops, options)
    best = max(scores)
    return options[scores.index(best)]


class GreedyCops(Strategy):
    name = "greedy"
    side = "cops"

    def __init__(self, k: int = 3, start=None, widen: bool = True):
        super().__init__(k)
        self.start = start
        self.widen = widen

    def place(self, g, cops=None):
        if self.start is not None:
            return tuple(self.start)
        if isinstance(g, BoardGraph):
            return central_diagonal(g, self.k)
        return tuple(g.vertices[: self.k])

    def move(self, g, state, history: History):
        return greedy_cop_move(g, state, history.visited, self.widen)


class GreedyRobber(Strategy):
    name = "greedy"
    side = "robber"

    def place(self, g, cops=None):
        cops = tuple(sorted(cops))
        options = [v for v in g.vertices if v not in cops]
        if not options:
            return g.vertices[0]
        scores = robber_reply_scores(g, cops, options)
        return options[scores.index(max(scores))]

    def move(self, g, state, history: History):
        return greedy_robber_move(g, state, history.visited)
