"""Optimal-play oracles read off a solved capture-depth table."""

from __future__ import annotations

import numpy as np

from ..board import Graph
from ..errors import DomainError
from ..game import GameState
from .core import SolveResult, solve_k
from .dense import INF


class CopOracle:
    """Moves the cops to a successor of strictly smaller capture depth."""

    def __init__(self, g: Graph, result: SolveResult):
        self.g = g
        self.k = result.k
        self.result = result
        self.table = result.table

    def depth(self, state: GameState) -> int | None:
        return self.table.depth(state.cops, state.robber)

    def start(self) -> tuple[int, ...]:
        if self.result.optimal_start is None:
            raise DomainError("cops have no winning start")
        return self.result.optimal_start

    def move(self, state: GameState) -> tuple[int, ...]:
        """Joint move aligned with ``state.cops``."""
        d = self.depth(state)
        if d is None:
            raise DomainError(f"state {state.key()} is not cop-win")
        nbhds = [sorted(self.g.closed(c)) for c in state.cops]
        rnb = sorted(self.g.closed(state.robber))
        vals = self.table.joint_move_depths(nbhds, state.robber, rnb)
        # first joint move (lex order) achieving the minimum
        idx = np.unravel_index(int(np.argmin(vals)), vals.shape)
        assert vals[idx] <= max(d - 1, 0)
        return tuple(nbhds[i][j] for i, j in enumerate(idx))


class RobberOracle:
    """Moves the robber to the successor with the largest capture depth.

    From a position the cops cannot win this always keeps the robber outside
    the cop-win region.
    """

    def __init__(self, g: Graph, result: SolveResult):
        self.g = g
        self.table = result.table

    def _score(self, cops, r) -> int:
        if r in cops:
            return -1
        d = self.table.depth(cops, r)
        return INF if d is None else d

    def place(self, cops: tuple[int, ...]) -> int:
        cops = tuple(sorted(cops))
        return max(self.g.vertices, key=lambda r: (self._score(cops, r), -r))

    def move(self, state: GameState) -> int:
        if state.captured:
            raise DomainError("robber already captured")
        options = sorted(self.g.closed(state.robber))
        return max(options, key=lambda r: (self._score(state.cops, r), -r))

    def escapes(self, state: GameState) -> bool:
        """Certificate that the robber survives forever from this robber-to-move state."""
        return any(self._score(state.cops, r) == INF for r in self.g.closed(state.robber))


def extract_strategies(g: Graph, k: int, result: SolveResult | None = None, **opts):
    """(cop oracle, robber oracle) for ``k`` cops on ``g``."""
    if result is None or result.table is None:
        result = solve_k(g, k, track_strategy=True, **opts)
    return CopOracle(g, result), RobberOracle(g, result)
