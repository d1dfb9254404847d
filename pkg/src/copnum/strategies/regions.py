"""Evasion regions and a robber that stays inside one.

A region robber only steps onto squares of its region that no cop can reach
next move.  Among those it prefers the square where, after the cops' best
reply, it keeps the most safe follow-up squares inside the region.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from ..board import BoardGraph, Direction, DirectionSet, Graph, board_lines, build_royal
from ..errors import FitError
from .base import SURRENDER, Strategy
from .scoring import response_value, scorer


def octagon_region(n: int, side_len: int = 8) -> frozenset[int]:
    """Centered octagon whose eight sides each hold ``side_len`` squares.

    The bounding box is ``3 * side_len - 2`` wide: an axis-parallel side of
    ``side_len`` squares plus two diagonal sides of ``side_len`` squares that
    share their end squares with it.  Returns vertex ids on the n x n board.
    """
    if side_len < 1:
        raise ValueError("side length must be positive")
    width = 3 * side_len - 2
    if n < width:
        raise FitError(f"octagon with sides of {side_len} does not fit on a {n}x{n} board", width)
    o = (n - width) // 2
    cut = side_len - 1
    last = width - 1
    out = set()
    for u in range(width):
        for v in range(width):
            if min(u + v, last - u + v, u + last - v, 2 * last - u - v) >= cut:
                out.add((o + u) * n + (o + v))
    return frozenset(out)


def guard_threshold(k: int) -> int:
    """Most squares of one robber line that k - 1 attacking cops can cover, the robber's own included."""
    return (k - 1) * (k - 2) + 1


def _long_line_offsets(n: int, d: Direction, more_than: int) -> list[int]:
    return [off for off, pts in board_lines(n, d).items() if len(pts) > more_than]


def _strip_region(dirs: DirectionSet, n: int, threshold: int) -> frozenset[int]:
    bounds = []
    for d in dirs:
        offs = _long_line_offsets(n, d, threshold)
        if len(offs) < 2:
            return frozenset()
        bounds.append((d, offs[0], offs[-1]))
    out = set()
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if all(lo <= d.offset(x, y) <= hi for d, lo, hi in bounds):
                out.add((x - 1) * n + (y - 1))
    return frozenset(out)


def evasion_region(
    dirs: Iterable, n: int, k: int | None = None, scan_limit: int = 400
) -> tuple[frozenset[int], int | None]:
    """Region where a robber can evade ``k - 1`` cops on a royal board, and the least n where it exists.

    For each direction, the long lines are those with more than
    ``guard_threshold(k)`` squares; the region is the intersection of the
    strips between the two extreme long lines of every direction.  The second
    value is the least board size (scanning upward from 2) where every
    direction has at least two long lines and the region is nonempty.
    """
    dirs = DirectionSet(dirs)
    k = dirs.k if k is None else k
    t = guard_threshold(k)
    minimal = None
    for m in range(2, scan_limit + 1):
        if _strip_region(dirs, m, t):
            minimal = m
            break
    return _strip_region(dirs, n, t), minimal


def region_line_spans(g: BoardGraph, region: frozenset[int]) -> int:
    """Smallest count, over region squares and directions, of region squares on that line."""
    n = g.n
    smallest = None
    for d in g.dirs:
        for pts in board_lines(n, d).values():
            on = [p for p in pts if (p[0] - 1) * n + (p[1] - 1) in region]
            if on and (smallest is None or len(on) < smallest):
                smallest = len(on)
    return 0 if smallest is None else smallest


def robust_size(dirs: Iterable, k: int | None = None, start: int = 2, limit: int = 200) -> int | None:
    """Least n whose evasion region is nonempty and meets every line through it in more than the guard threshold."""
    dirs = DirectionSet(dirs)
    k = dirs.k if k is None else k
    t = guard_threshold(k)
    for m in range(start, limit + 1):
        region = _strip_region(dirs, m, t)
        if region and region_line_spans(build_royal(m, dirs), region) > t:
            return m
    return None


class RegionRobber(Strategy):
    """Robber confined to a vertex set; leaves it only when every region move is guarded."""

    name = "region"
    side = "robber"

    def __init__(self, region: Iterable[int] | None = None, region_name: str = "region", builder=None):
        super().__init__(1)
        self.region = None if region is None else frozenset(region)
        self.builder = builder
        self.name = region_name
        self._built: dict[Graph, frozenset[int]] = {}

    def region_for(self, g: Graph) -> frozenset[int]:
        if self.region is not None:
            return self.region
        if g not in self._built:
            self._built[g] = frozenset(self.builder(g))
        return self._built[g]

    def _score(self, g: Graph, cops, options, region) -> list[int]:
        sc = scorer(g)
        cl = sc.loc(cops)
        out = []
        for v in options:
            follow = np.array(sorted(sc.index[u] for u in g.closed(v) if u in region), dtype=np.int64)
            out.append(response_value(sc, cl, sc.index[v], replies=follow, weights=np.ones(len(follow), dtype=np.int64)))
        return out

    def _choose(self, g: Graph, cops, candidates) -> int | None:
        sc = scorer(g)
        guarded = sc.guarded(sc.loc(cops))
        region = self.region_for(g)
        safe = [v for v in candidates if not guarded[sc.index[v]]]
        inside = [v for v in safe if v in region]
        pool = inside or safe
        if not pool:
            return None
        scores = self._score(g, cops, pool, region)
        return pool[scores.index(max(scores))]

    def place(self, g, cops=None):
        cops = tuple(sorted(cops or ()))
        free = [v for v in g.vertices if v not in cops]
        choice = self._choose(g, cops, free) if cops else None
        if choice is None:
            region = self.region_for(g)
            inside = [v for v in free if v in region]
            return (inside or free or g.vertices)[0]
        return choice

    def move(self, g, state, history):
        options = sorted(g.closed(state.robber) - set(state.cops))
        if not options:
            return SURRENDER
        choice = self._choose(g, state.cops, options)
        return options[0] if choice is None else choice
