"""Knight-board strategies: rigid cop formations and the robber's small safe subgraphs.

A formation is a fixed set of offsets from an anchor square.  Each turn the
formation may shift by any translation of at most two squares per axis that
its cops can realize simultaneously, with cops free to swap roles (a diagonal
of three knights can slide one square sideways this way).
"""

from __future__ import annotations

from itertools import permutations, product

from ..board import BoardGraph
from ..errors import BudgetExceeded, FitError
from ..solver import extract_strategies, solve_k
from .base import Strategy, _distances
from .regions import RegionRobber
from .scoring import scorer

# Pattern on a 7 x 7 board: two interlocking 8-cycles, every square of
# degree four inside the set.
DEGREE4_PATTERN = (
    (2, 2), (4, 1), (6, 2), (7, 4), (6, 6), (4, 7), (2, 6), (1, 4),
    (3, 3), (4, 5), (5, 3), (3, 4), (5, 5), (4, 3), (3, 5), (5, 4),
)  # fmt: skip


def degree4_region(n: int) -> frozenset[int]:
    """The 16-square knight subgraph of degree four, centered on the n x n board."""
    if n < 7:
        raise FitError("the degree-four knight subgraph needs a 7x7 block", 7)
    o = (n - 7) // 2
    return frozenset((x + o - 1) * n + (y + o - 1) for x, y in DEGREE4_PATTERN)


def four_cycle_region(n: int) -> frozenset[int]:
    """A central knight 4-cycle: v, v+(1,2), v+(3,3), v+(2,1)."""
    if n < 4:
        raise FitError("a knight 4-cycle needs a 4x4 block", 4)
    o = (n - 4) // 2
    pts = ((1, 1), (2, 3), (4, 4), (3, 2))
    return frozenset((x + o - 1) * n + (y + o - 1) for x, y in pts)


def four_cycle_robber() -> RegionRobber:
    return RegionRobber(region_name="four_cycle", builder=lambda g: four_cycle_region(g.n))


def degree4_robber() -> RegionRobber:
    return RegionRobber(region_name="degree4_subgraph", builder=lambda g: degree4_region(g.n))


def _match(g: BoardGraph, cops, targets) -> tuple[int, ...] | None:
    """Assign each cop a distinct target within its closed neighborhood, lex-first."""
    for perm in permutations(targets):
        if all(t in g.closed(c) for c, t in zip(cops, perm)):
            return tuple(perm)
    return None


class FormationCops(Strategy):
    """Cops that keep a rigid formation and slide it toward the robber.

    Candidate shifts are ranked by: no safe robber reply; distance from the
    robber to the formation center; mimicking the robber's last step; fewest
    safe replies; then the shift itself.  A cop that can capture always does.
    """

    side = "cops"
    offsets: tuple[tuple[int, int], ...] = ()

    def anchor_start(self, g: BoardGraph) -> tuple[int, int]:
        m = (g.n + 1) // 2
        return m, m

    def _squares(self, g: BoardGraph, anchor) -> list[int] | None:
        ax, ay = anchor
        pts = [(ax + dx, ay + dy) for dx, dy in self.offsets]
        if not all(g.on_board(x, y) for x, y in pts):
            return None
        return sorted(g.vid(x, y) for x, y in pts)

    def place(self, g, cops=None):
        if not isinstance(g, BoardGraph):
            raise ValueError("formations need a board graph")
        sq = self._squares(g, self.anchor_start(g))
        if sq is None:
            raise FitError(f"{self.name} does not fit on a {g.n}x{g.n} board", self.min_size())
        return tuple(sq)

    def min_size(self) -> int:
        xs = [dx for dx, _ in self.offsets]
        ys = [dy for _, dy in self.offsets]
        return max(max(xs) - min(xs), max(ys) - min(ys)) + 1

    def _anchor_of(self, g: BoardGraph, cops) -> tuple[int, int] | None:
        have = sorted(cops)
        dx0, dy0 = self.offsets[0]
        for c in cops:
            x, y = g.coord(c)
            a = (x - dx0, y - dy0)
            if self._squares(g, a) == have:
                return a
        return None

    def endgame(self, g, state, history):
        return None

    def move(self, g: BoardGraph, state, history):
        r = state.robber
        for i, c in enumerate(state.cops):
            if r in g.closed(c):
                out = list(state.cops)
                out[i] = r
                return tuple(out)
        special = self.endgame(g, state, history)
        if special is not None:
            return special
        anchor = self._anchor_of(g, state.cops)
        if anchor is None:
            return _step_toward(g, state.cops, r)
        sc = scorer(g)
        ri = sc.index[r]
        replies = [u for u in sc.nbhd[ri]]
        rx, ry = g.coord(r)
        last = history.last_robber_step
        cx = sum(dx for dx, _ in self.offsets)
        cy = sum(dy for _, dy in self.offsets)
        k = len(self.offsets)
        best = None
        for t in product(range(-2, 3), repeat=2):
            a = (anchor[0] + t[0], anchor[1] + t[1])
            sq = self._squares(g, a)
            if sq is None:
                continue
            mv = _match(g, state.cops, sq)
            if mv is None:
                continue
            guarded = sc.guarded(sc.loc(mv))
            safe = sum(1 for u in replies if not guarded[u] and sc.vertices[u] not in mv)
            # distance in k-scaled coordinates to the formation centroid
            dist = max(abs(k * rx - (k * a[0] + cx)), abs(k * ry - (k * a[1] + cy)))
            key = (safe > 0, dist, t != last, safe, t)
            if best is None or key < best[0]:
                best = (key, mv)
        return best[1]


def _step_toward(g, cops, robber):
    dist = _distances(g, robber)
    far = len(g.vertices) + 1
    return tuple(min(sorted(g.closed(c)), key=lambda u: (dist.get(u, far), u)) for c in cops)


class SquareFormationCops(FormationCops):
    """Four knights on a 2x2 block; for odd n one of them starts on the center square."""

    name = "square_formation"
    offsets = ((0, 0), (0, 1), (1, 0), (1, 1))

    def __init__(self, k: int = 4):
        if k != 4:
            raise ValueError("the square formation uses exactly 4 cops")
        super().__init__(k)


class DiagonalFormationCops(FormationCops):
    """Three knights on a diagonal of length three around a central square.

    Once the robber is inside the box spanned by the formation's closed
    neighborhoods, play is handed to the exact 3-cop solver when it fits the
    budget; otherwise the formation keeps chasing and a note records that the
    endgame is unresolved.
    """

    name = "diagonal_formation"
    offsets = ((-1, -1), (0, 0), (1, 1))

    def __init__(self, k: int = 3, **solve_opts):
        if k != 3:
            raise ValueError("the diagonal formation uses exactly 3 cops")
        super().__init__(k)
        self.solve_opts = solve_opts
        self._oracles = {}

    def oracle(self, g):
        if g not in self._oracles:
            try:
                res = solve_k(g, 3, track_strategy=True, **self.solve_opts)
                self._oracles[g] = extract_strategies(g, 3, res)[0]
            except BudgetExceeded as exc:
                self._oracles[g] = None
                self.notes.append(f"endgame unresolved: exact 3-cop solve skipped ({exc.bound})")
        return self._oracles[g]

    def in_hull(self, g: BoardGraph, cops, robber) -> bool:
        pts = [g.coord(u) for c in cops for u in g.closed(c)]
        x, y = g.coord(robber)
        return min(p[0] for p in pts) <= x <= max(p[0] for p in pts) and min(p[1] for p in pts) <= y <= max(
            p[1] for p in pts
        )

    def endgame(self, g, state, history):
        if not self.in_hull(g, state.cops, state.robber):
            return None
        cop = self.oracle(g)
        if cop is None or cop.depth(state) is None:
            return None
        return tuple(cop.move(state))
