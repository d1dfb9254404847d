from __future__ import annotations

from ..board import BoardGraph
from ..solver import extract_strategies, solve_k
from .base import Strategy, central_diagonal, chase_move


class OracleCops(Strategy):
    """Optimal cops from the exact solver; plain chasing where the cops cannot win."""

    name = "oracle"
    side = "cops"

    def __init__(self, k: int = 1, **solve_opts):
        super().__init__(k)
        self.solve_opts = solve_opts
        self._cache = {}

    def oracle(self, g):
        if g not in self._cache:
            res = solve_k(g, self.k, track_strategy=True, **self.solve_opts)
            self._cache[g] = extract_strategies(g, self.k, res)
        return self._cache[g]

    def place(self, g, cops=None):
        cop, _ = self.oracle(g)
        if cop.result.cops_win:
            return cop.start()
        if isinstance(g, BoardGraph):
            return central_diagonal(g, self.k)
        return tuple(g.vertices[: self.k])

    def move(self, g, state, history):
        cop, _ = self.oracle(g)
        if cop.depth(state) is not None:
            return cop.move(state)
        return chase_move(g, state.cops, state.robber)


class OracleRobber(Strategy):
    """Optimal robber against ``k`` cops: always maximizes remaining capture depth."""

    name = "oracle"
    side = "robber"

    def __init__(self, k: int = 1, **solve_opts):
        super().__init__(1)
        self.cops_k = k
        self.solve_opts = solve_opts
        self._cache = {}

    def oracle(self, g):
        if g not in self._cache:
            res = solve_k(g, self.cops_k, track_strategy=True, **self.solve_opts)
            self._cache[g] = extract_strategies(g, self.cops_k, res)
        return self._cache[g]

    def place(self, g, cops=None):
        return self.oracle(g)[1].place(cops)

    def move(self, g, state, history):
        return self.oracle(g)[1].move(state)

    def certificate(self, g, state) -> bool:
        """True if the solver proves the cops cannot win from this position."""
        return self.oracle(g)[0].depth(state) is None
