from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Any

import numpy as np

from ..board import BoardGraph, Graph, board_automorphisms, components
from ..errors import BudgetExceeded
from . import dense, retrograde
from .codec import multiset_count

logger = logging.getLogger(__name__)

K_MAX = 4
DEFAULT_STATE_BUDGET = 2**31
# dense arrays cost roughly 16 bytes per cell at peak
DEFAULT_DENSE_CELLS = 2**27
RETROGRADE_LIMIT = 400_000


def state_budget() -> int:
    env = os.environ.get("COPNUM_STATE_BUDGET")
    return int(env) if env else DEFAULT_STATE_BUDGET


def state_count(V: int, k: int) -> int:
    """Multiset states: C(V+k-1, k) cop placements x V robber squares x 2 sides."""
    return multiset_count(V, k) * V * 2


def closed_adjacency(g: Graph) -> np.ndarray:
    V = len(g.vertices)
    index = {v: i for i, v in enumerate(g.vertices)}
    A = np.eye(V, dtype=bool)
    for v, ns in g.adj.items():
        for u in ns:
            A[index[v], index[u]] = True
    return A


@dataclass
class SolveResult:
    k: int
    cops_win: bool
    optimal_start: tuple[int, ...] | None
    capture_time: int | None
    state_count: int
    peak_memory_estimate: int
    method: str = "dense"
    layers: int = 0
    table: Any = field(default=None, repr=False, compare=False)

    def to_json(self, g: Graph | None = None) -> dict:
        start = None
        if self.optimal_start is not None:
            start = [g.label(v) if g is not None else v for v in self.optimal_start]
        return {
            "k": self.k,
            "copsWin": self.cops_win,
            "optimalStart": start,
            "captureTime": self.capture_time,
            "stateCount": self.state_count,
        }


def _start_values(table, vertices, k) -> tuple[np.ndarray, np.ndarray]:
    """Sorted start tuples (local indices, lex order) and their worst-case depth."""
    V = len(vertices)
    starts = np.array(list(combinations_with_replacement(range(V), k)), dtype=np.int64).reshape(-1, k)
    if isinstance(table, dense.DenseTable):
        worst = table.T.reshape(V**k, V).max(axis=1)
        flat = np.ravel_multi_index(starts.T, (V,) * k)
        return starts, worst[flat].astype(np.int64)
    vals = []
    for s in starts:
        cops = tuple(vertices[i] for i in s)
        ds = [table.depth(cops, r) for r in vertices]
        vals.append(max(dense.INF if d is None else d for d in ds))
    return starts, np.array(vals, dtype=np.int64)


def _canonical_mask(starts: np.ndarray, perms: list[np.ndarray], V: int) -> np.ndarray:
    k = starts.shape[1]
    own = np.ravel_multi_index(starts.T, (V,) * k)
    best = own.copy()
    for p in perms:
        img = np.sort(p[starts], axis=1)
        best = np.minimum(best, np.ravel_multi_index(img.T, (V,) * k))
    return own == best


def solve_k(
    g: Graph,
    k: int,
    *,
    use_symmetry: bool = False,
    track_strategy: bool = False,
    budget: int | None = None,
    dense_cells: int = DEFAULT_DENSE_CELLS,
    method: str = "auto",
) -> SolveResult:
    """Decide whether ``k`` cops win on ``g`` under optimal play.

    The cops pick a start multiset, the robber answers with any vertex, then
    the cops move first.  Every piece may stay put; cops may share a square;
    capture happens on co-location after either side's move.  Capture time
    counts cop moves.

    ``method`` is ``"dense"`` (vectorized fixed point), ``"retrograde"``
    (reference counter sweep, small graphs only) or ``"auto"``.
    """
    if k < 1:
        raise ValueError("cop count must be at least 1")
    if k > K_MAX:
        raise ValueError(f"cop count must be at most {K_MAX}")
    V = len(g.vertices)
    n_states = state_count(V, k)
    limit = state_budget() if budget is None else budget
    if n_states > limit:
        raise BudgetExceeded("state budget", n_states, limit)

    if method == "auto":
        method = "dense"
    perms = board_automorphisms(g) if use_symmetry else []
    perm_dicts = [p.permutation(g) for p in perms] if isinstance(g, BoardGraph) else []

    if method == "dense":
        cells = V ** (k + 1)
        if cells > dense_cells:
            raise BudgetExceeded("dense cell limit", cells, dense_cells)
        T, layers = dense.fixed_point(closed_adjacency(g), k)
        table = dense.DenseTable(g.vertices, T, k)
        peak = cells * 16
    elif method == "retrograde":
        if n_states > RETROGRADE_LIMIT:
            raise BudgetExceeded("retrograde reference limit", n_states, RETROGRADE_LIMIT)
        closed = {v: g.closed(v) for v in g.vertices}
        table = retrograde.retrograde_solve(g.vertices, closed, k, perm_dicts if len(perm_dicts) > 1 else None)
        layers = max(table.cop_depth.values(), default=0)
        peak = n_states * 3
    else:
        raise ValueError(f"unknown method {method!r}")

    starts, worst = _start_values(table, g.vertices, k)
    if len(perm_dicts) > 1:
        index = {v: i for i, v in enumerate(g.vertices)}
        local = [np.array([index[p[v]] for v in g.vertices]) for p in perm_dicts]
        keep = _canonical_mask(starts, local, V)
        starts, worst = starts[keep], worst[keep]
    best = int(worst.min())
    cops_win = best < dense.INF
    optimal_start = capture = None
    if cops_win:
        i = int(np.argmax(worst == best))
        optimal_start = tuple(g.vertices[j] for j in starts[i])
        capture = best
    logger.info("solve k=%d on %s: cops_win=%s capture=%s", k, g.describe(), cops_win, capture)
    return SolveResult(
        k=k,
        cops_win=cops_win,
        optimal_start=optimal_start,
        capture_time=capture,
        state_count=n_states,
        peak_memory_estimate=peak,
        method=method,
        layers=layers,
        table=table if track_strategy else None,
    )


def is_winning_start(g: Graph, k: int, start, result: SolveResult | None = None) -> bool:
    """True if the cops win from ``start`` against every robber placement."""
    if result is None or result.table is None:
        result = solve_k(g, k, track_strategy=True)
    start = tuple(sorted(start))
    return all(result.table.depth(start, r) is not None for r in g.vertices)


@dataclass
class ComponentValue:
    vertices: frozenset[int]
    value: int | None  # None when unresolved

    @property
    def resolved(self) -> bool:
        return self.value is not None


@dataclass
class CopNumberReport:
    components: list[ComponentValue]

    @property
    def values(self) -> list[int | None]:
        return [c.value for c in self.components]

    @property
    def total(self) -> int | None:
        """Additive cop number; None if any component is unresolved."""
        if any(c.value is None for c in self.components):
            return None
        return sum(c.value for c in self.components)

    @property
    def max_component(self) -> int | None:
        if any(c.value is None for c in self.components):
            return None
        return max(c.value for c in self.components)

    def to_json(self) -> dict:
        return {
            "components": [
                {"size": len(c.vertices), "value": c.value if c.resolved else "unresolved"}
                for c in self.components
            ],
            "total": self.total if self.total is not None else "unresolved",
            "maxComponent": self.max_component if self.max_component is not None else "unresolved",
        }


def cop_number(
    g: Graph,
    per_component: bool = True,
    *,
    k_max: int = K_MAX,
    budget: int | None = None,
    dense_cells: int = DEFAULT_DENSE_CELLS,
) -> CopNumberReport:
    """Least winning k for each component (or the whole graph)."""
    parts = components(g) if per_component else [frozenset(g.vertices)]
    out = []
    for comp in parts:
        sub = g.induced(comp) if len(comp) < len(g.vertices) else g
        value = None
        for k in range(1, k_max + 1):
            try:
                res = solve_k(sub, k, budget=budget, dense_cells=dense_cells)
            except BudgetExceeded as exc:
                logger.warning("component of size %d unresolved at k=%d: %s", len(comp), k, exc)
                break
            if res.cops_win:
                value = k
                break
        out.append(ComponentValue(comp, value))
    return CopNumberReport(out)
