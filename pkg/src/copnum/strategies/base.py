from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from ..board import BoardGraph, Graph
from ..game import GameState


class _Surrender:
    def __repr__(self):
        return "SURRENDER"


SURRENDER = _Surrender()


@dataclass
class History:
    """What a strategy may consult besides the current state."""

    visited: set = field(default_factory=set)
    robber_steps: list[tuple[int, int] | None] = field(default_factory=list)
    turn: int = 0

    @property
    def last_robber_step(self):
        return self.robber_steps[-1] if self.robber_steps else None


class Strategy:
    """A named move rule for one side.

    ``side`` is ``"cops"`` or ``"robber"``; ``k`` is the number of pieces moved.
    Cop moves are tuples aligned with ``state.cops``; robber moves are a vertex.
    """

    name = "strategy"
    side = "cops"

    def __init__(self, k: int = 1, **params):
        self.k = k
        self.params = params
        self.notes: list[str] = []

    def place(self, g: Graph, cops: tuple[int, ...] | None = None):
        raise NotImplementedError

    def move(self, g: Graph, state: GameState, history: History):
        raise NotImplementedError

    def describe(self) -> str:
        return f"{self.name}:{self.k}" if self.side == "cops" else self.name


def central_diagonal(g: BoardGraph, k: int) -> tuple[int, ...]:
    """k squares on the main diagonal around the center, starting at m - 1."""
    m = (g.n + 1) // 2
    out = []
    for j in range(k):
        c = min(max(m - 1 + j, 1), g.n)
        out.append(g.vid(c, c))
    return tuple(out)


@lru_cache(maxsize=64)
def _distances(g: Graph, target: int) -> dict[int, int]:
    dist = {target: 0}
    queue = deque([target])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def chase_move(g: Graph, cops: tuple[int, ...], robber: int) -> tuple[int, ...]:
    """Each cop steps to the neighbor nearest the robber (capture if possible)."""
    dist = _distances(g, robber)
    far = len(g.vertices) + 1
    out = []
    for c in cops:
        out.append(min(sorted(g.closed(c)), key=lambda u: (dist.get(u, far), u)))
    return tuple(out)
