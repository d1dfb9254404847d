"""Reference retrograde sweep over packed multiset states.

This is the textbook algorithm: terminal captures are seeded, every robber
position keeps a counter of robber moves not yet known to lose, and each
edge is relaxed once.  It is pure Python and meant for small graphs, where
it serves as an independent check on the dense engine.

With symmetry enabled the sweep runs on orbit representatives under the
board automorphisms.  Counters do not survive the quotient, so a robber
representative is re-examined whenever one of its successors is resolved.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import product

import numpy as np

from .codec import multiset_count, rank, unrank

INF = np.iinfo(np.int16).max


class RetroTable:
    """Capture depths of cops-to-move positions, indexed by packed state."""

    def __init__(self, vertices, nbhd, k, perms: Sequence[Sequence[int]] | None):
        self.vertices = tuple(vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.V = len(self.vertices)
        self.k = k
        self.nbhd = nbhd  # local closed neighborhoods
        self.perms = perms or [tuple(range(self.V))]
        self._joint: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        self.cop_depth: dict[int, int] = {}
        self.rob_depth: dict[int, int] = {}
        self.edges_relaxed = 0

    # state helpers (local indices)
    def code(self, cops: tuple[int, ...], r: int) -> int:
        return rank(cops, self.V) * self.V + r

    def canon(self, cops: tuple[int, ...], r: int) -> int:
        if len(self.perms) == 1:
            return self.code(cops, r)
        return min(self.code(tuple(sorted(p[c] for c in cops)), p[r]) for p in self.perms)

    def joint(self, cops: tuple[int, ...]) -> list[tuple[int, ...]]:
        out = self._joint.get(cops)
        if out is None:
            out = sorted({tuple(sorted(m)) for m in product(*(self.nbhd[c] for c in cops))})
            self._joint[cops] = out
        return out

    def depth(self, cops: tuple[int, ...], robber: int) -> int | None:
        loc = tuple(sorted(self.index[c] for c in cops))
        d = self.cop_depth.get(self.canon(loc, self.index[robber]))
        return d

    def joint_move_depths(self, nbhds, robber, robber_nbhd) -> np.ndarray:
        out = np.empty(tuple(len(nb) for nb in nbhds), dtype=np.int32)
        for idx in np.ndindex(out.shape):
            move = tuple(nbhds[i][j] for i, j in enumerate(idx))
            if robber in move:
                out[idx] = 0
                continue
            worst = 0
            for r2 in robber_nbhd:
                d = self.depth(move, r2)
                worst = max(worst, INF if d is None else d)
            out[idx] = worst
        return out


def retrograde_solve(vertices, closed_nbhd: dict[int, frozenset[int]], k: int, perms=None) -> RetroTable:
    """Run the sweep.  ``closed_nbhd`` maps vertex id to N[v]; ``perms`` are
    automorphisms given as vertex-id dictionaries (identity implied if None)."""
    vertices = tuple(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    V = len(vertices)
    nbhd = [tuple(sorted(index[u] for u in closed_nbhd[v])) for v in vertices]
    local_perms = None
    if perms:
        local_perms = [tuple(index[p[v]] for v in vertices) for p in perms]
    table = RetroTable(vertices, nbhd, k, local_perms)
    NC = multiset_count(V, k)
    if local_perms is None or len(local_perms) == 1:
        _sweep_counters(table, NC)
    else:
        _sweep_quotient(table, NC)
    return table


def _sweep_counters(t: RetroTable, NC: int) -> None:
    V, k, nbhd = t.V, t.k, t.nbhd
    counter = np.zeros(NC * V, dtype=np.uint16)
    rob_won = np.zeros(NC * V, dtype=bool)
    frontier = []
    rob_level = []
    for cr in range(NC):
        cops = unrank(cr, V, k)
        for r in range(V):
            code = cr * V + r
            if r in cops:
                t.cop_depth[code] = 0
                t.rob_depth[code] = 0
                rob_won[code] = True
                frontier.append((cops, r))
                rob_level.append((cops, r))
            else:
                counter[code] = len(nbhd[r])
    d = 0
    while frontier or rob_level:
        # robber positions whose last escape just closed have depth d
        for cops, r2 in frontier:
            cr = rank(cops, V)
            for r in nbhd[r2]:
                code = cr * V + r
                if rob_won[code]:
                    continue
                t.edges_relaxed += 1
                counter[code] -= 1
                if counter[code] == 0:
                    rob_won[code] = True
                    t.rob_depth[code] = d
                    rob_level.append((cops, r))
        nxt = []
        for cops, r in rob_level:
            for pred in t.joint(cops):
                t.edges_relaxed += 1
                code = rank(pred, V) * V + r
                if code not in t.cop_depth:
                    t.cop_depth[code] = d + 1
                    nxt.append((pred, r))
        frontier, rob_level = nxt, []
        d += 1


def _sweep_quotient(t: RetroTable, NC: int) -> None:
    V, k, nbhd = t.V, t.k, t.nbhd
    frontier = []
    rob_level = []
    for cr in range(NC):
        cops = unrank(cr, V, k)
        for r in range(V):
            code = cr * V + r
            if r in cops and t.canon(cops, r) == code:
                t.cop_depth[code] = 0
                t.rob_depth[code] = 0
                frontier.append((cops, r))
                rob_level.append((cops, r))
    d = 0
    while frontier or rob_level:
        for cops, r2 in frontier:
            for r in nbhd[r2]:
                code = t.canon(cops, r)
                if code in t.rob_depth:
                    continue
                rc, rr = divmod(code, V)
                rcops = unrank(rc, V, k)
                t.edges_relaxed += 1
                if all(t.canon(rcops, x) in t.cop_depth for x in nbhd[rr]):
                    t.rob_depth[code] = d
                    rob_level.append((rcops, rr))
        nxt = []
        for cops, r in rob_level:
            for pred in t.joint(cops):
                t.edges_relaxed += 1
                code = t.canon(pred, r)
                if code not in t.cop_depth:
                    t.cop_depth[code] = d + 1
                    pc, pr = divmod(code, V)
                    nxt.append((unrank(pc, V, k), pr))
        frontier, rob_level = nxt, []
        d += 1
