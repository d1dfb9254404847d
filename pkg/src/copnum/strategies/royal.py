"""Line-guarding cops for royal graphs.

With one cop per direction, a robber whose every line holds a cop has no
safe move: any square it can reach lies on one of those lines.  Each turn
the cops are matched to directions so that as many as possible land on the
robber's line of their direction; the others step toward the robber.
"""

from __future__ import annotations

from itertools import permutations

from ..board import BoardGraph
from ..errors import UnsupportedModeError
from .base import Strategy, _distances, central_diagonal


class RoyalGuardingCops(Strategy):
    name = "royal_guarding"
    side = "cops"

    def place(self, g, cops=None):
        if not isinstance(g, BoardGraph) or g.mode != "royal":
            raise UnsupportedModeError("line guarding needs a royal graph")
        if self.k != g.dirs.k:
            raise ValueError(f"line guarding uses one cop per direction ({g.dirs.k}), got {self.k}")
        return central_diagonal(g, self.k)

    def move(self, g: BoardGraph, state, history):
        r = state.robber
        for i, c in enumerate(state.cops):
            if r in g.closed(c):
                out = list(state.cops)
                out[i] = r
                return tuple(out)
        rx, ry = g.coord(r)
        dist = _distances(g, r)
        far = len(g.vertices) + 1
        # per cop and direction: best square of N[c] on the robber's line, or None
        aligned = []
        for c in state.cops:
            row = []
            for d in g.dirs:
                target = d.offset(rx, ry)
                hits = sorted(u for u in g.closed(c) if d.offset(*g.coord(u)) == target)
                row.append(hits[0] if hits else None)
            aligned.append(row)
        best = None
        for perm in permutations(range(len(g.dirs))):
            hit = sum(aligned[i][p] is not None for i, p in enumerate(perm))
            if best is None or hit > best[0]:
                best = (hit, perm)
        perm = best[1]
        out = []
        for i, c in enumerate(state.cops):
            u = aligned[i][perm[i]]
            if u is None:
                u = min(sorted(g.closed(c)), key=lambda w: (dist.get(w, far), w))
            out.append(u)
        return tuple(out)
