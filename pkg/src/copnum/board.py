"""Chess, royal and animal graphs on the n x n lattice.

Squares are 1-indexed ``(x, y)`` pairs (x = file, y = rank).  Vertex ids use
the fixed codec ``(x - 1) * n + (y - 1)`` so that every downstream artifact
(state packing, JSON, transcripts) is deterministic.

Royal graphs join every pair of squares whose displacement is parallel to a
direction of the set (queen-like, whole-line moves).  Animal graphs join a
square only to the nearest lattice point along each step (king/knight-like).
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import Literal

from .errors import ConstructionError, UnsupportedModeError

Coord = tuple[int, int]
Mode = Literal["royal", "animal"]

QUEEN_DIRS = ((1, 0), (0, 1), (1, 1), (1, -1))
ROOK_DIRS = ((1, 0), (0, 1))
BISHOP_DIRS = ((1, 1), (1, -1))
KING_STEPS = QUEEN_DIRS
KNIGHT_STEPS = ((1, 2), (2, 1), (2, -1), (1, -2))
PIECES = ("king", "knight", "rook", "bishop", "queen")


def _sign_canonical(dx: int, dy: int) -> Coord:
    if dx < 0 or (dx == 0 and dy < 0):
        return -dx, -dy
    return dx, dy


@dataclass(frozen=True, order=True)
class Direction:
    """A primitive, sign-canonical lattice direction.

    Any nonzero vector is accepted and reduced, so ``Direction(-2, -4)``
    equals ``Direction(1, 2)``.
    """

    dx: int
    dy: int

    def __post_init__(self):
        dx, dy = int(self.dx), int(self.dy)
        if dx == 0 and dy == 0:
            raise ConstructionError("direction must be a nonzero vector")
        g = math.gcd(dx, dy)
        dx, dy = _sign_canonical(dx // g, dy // g)
        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "dy", dy)

    def __iter__(self) -> Iterator[int]:
        return iter((self.dx, self.dy))

    def offset(self, x: int, y: int) -> int:
        """Index of the line with this direction through (x, y)."""
        return self.dy * x - self.dx * y


class DirectionSet(tuple):
    """Ordered set of distinct directions (duplicates after reduction are dropped)."""

    def __new__(cls, dirs: Iterable[Direction | tuple[int, int]]):
        seen: dict[Direction, None] = {}
        for d in dirs:
            d = d if isinstance(d, Direction) else Direction(*d)
            seen.setdefault(d, None)
        if not seen:
            raise ConstructionError("direction set must not be empty")
        return super().__new__(cls, seen)

    @property
    def k(self) -> int:
        return len(self)

    def as_lists(self) -> list[list[int]]:
        return [[d.dx, d.dy] for d in self]


def parse_dirs(text: str) -> list[tuple[int, int]]:
    """Parse the ``"dx,dy;dx,dy"`` grammar used on the command line."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ConstructionError(f"bad direction {chunk!r}; expected 'dx,dy'")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ConstructionError(f"bad direction {chunk!r}") from exc
    if not out:
        raise ConstructionError("empty direction list")
    return out


class Graph:
    """Undirected simple graph on integer vertex ids."""

    def __init__(self, adj: Mapping[int, Iterable[int]]):
        self.adj: dict[int, frozenset[int]] = {
            v: frozenset(adj[v]) for v in sorted(adj)
        }
        self.vertices: tuple[int, ...] = tuple(self.adj)
        for v, ns in self.adj.items():
            if v in ns:
                raise ConstructionError(f"self-loop at {v}")
            for u in ns:
                if v not in self.adj.get(u, ()):
                    raise ConstructionError(f"asymmetric edge {v}->{u}")

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed(self, v: int) -> frozenset[int]:
        """N[v]: the vertex together with its neighbors."""
        return self.adj[v] | {v}

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in self.adj for v in self.adj[u] if u < v)

    def induced(self, vertices: Iterable[int]) -> Graph:
        keep = set(vertices)
        return Graph({v: self.adj[v] & keep for v in keep})

    def label(self, v: int):
        return v

    def describe(self) -> str:
        return f"graph[{len(self)}]"


class BoardGraph(Graph):
    """Immutable lattice graph on (a subset of) the n x n board."""

    def __init__(
        self,
        n: int,
        mode: Mode,
        dirs: DirectionSet,
        steps: tuple[Coord, ...],
        adj: Mapping[int, Iterable[int]],
        piece: str | None = None,
    ):
        super().__init__(adj)
        self.n = n
        self.mode = mode
        self.dirs = dirs
        self.steps = steps
        self.piece = piece

    # vertex codec
    def vid(self, x: int, y: int) -> int:
        return (x - 1) * self.n + (y - 1)

    def coord(self, v: int) -> Coord:
        return v // self.n + 1, v % self.n + 1

    def label(self, v: int) -> list[int]:
        return list(self.coord(v))

    def on_board(self, x: int, y: int) -> bool:
        return 1 <= x <= self.n and 1 <= y <= self.n

    @property
    def is_full(self) -> bool:
        return len(self.vertices) == self.n * self.n

    def induced(self, vertices: Iterable[int]) -> BoardGraph:
        keep = set(vertices)
        return BoardGraph(
            self.n,
            self.mode,
            self.dirs,
            self.steps,
            {v: self.adj[v] & keep for v in keep},
            piece=self.piece,
        )

    def describe(self) -> str:
        name = self.piece or f"{self.mode}{self.dirs.as_lists()}"
        suffix = "" if self.is_full else f"[{len(self)} vertices]"
        return f"{name}:{self.n}{suffix}"


def build_royal(
    n: int, dirs: Iterable[Direction | tuple[int, int]], piece: str | None = None
) -> BoardGraph:
    """Royal graph: squares adjacent iff their displacement is parallel to a direction."""
    if n < 1:
        raise ConstructionError("board size must be positive")
    dirs = DirectionSet(dirs)
    adj: dict[int, set[int]] = {(x - 1) * n + (y - 1): set() for x in range(1, n + 1) for y in range(1, n + 1)}
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            v = (x - 1) * n + (y - 1)
            for d in dirs:
                for sign in (1, -1):
                    px, py = x + sign * d.dx, y + sign * d.dy
                    while 1 <= px <= n and 1 <= py <= n:
                        adj[v].add((px - 1) * n + (py - 1))
                        px += sign * d.dx
                        py += sign * d.dy
    steps = tuple((d.dx, d.dy) for d in dirs)
    return BoardGraph(n, "royal", dirs, steps, adj, piece=piece)


def build_animal(
    n: int, steps: Iterable[tuple[int, int]], piece: str | None = None
) -> BoardGraph:
    """Animal graph: squares adjacent iff they differ by exactly one step (either sign)."""
    if n < 1:
        raise ConstructionError("board size must be positive")
    raw: dict[Coord, None] = {}
    for s in steps:
        sx, sy = int(s[0]), int(s[1])
        if sx == 0 and sy == 0:
            raise ConstructionError("step vector must be nonzero")
        raw.setdefault(_sign_canonical(sx, sy), None)
    if not raw:
        raise ConstructionError("step set must not be empty")
    dirs = DirectionSet(raw)
    adj: dict[int, set[int]] = {(x - 1) * n + (y - 1): set() for x in range(1, n + 1) for y in range(1, n + 1)}
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            v = (x - 1) * n + (y - 1)
            for sx, sy in raw:
                for px, py in ((x + sx, y + sy), (x - sx, y - sy)):
                    if 1 <= px <= n and 1 <= py <= n:
                        adj[v].add((px - 1) * n + (py - 1))
    return BoardGraph(n, "animal", dirs, tuple(raw), adj, piece=piece)


def preset(piece: str, n: int) -> BoardGraph:
    """One of the five classical chess graphs on the n x n board."""
    if piece == "queen":
        return build_royal(n, QUEEN_DIRS, piece="queen")
    if piece == "rook":
        return build_royal(n, ROOK_DIRS, piece="rook")
    if piece == "bishop":
        return build_royal(n, BISHOP_DIRS, piece="bishop")
    if piece == "king":
        return build_animal(n, KING_STEPS, piece="king")
    if piece == "knight":
        return build_animal(n, KNIGHT_STEPS, piece="knight")
    raise ConstructionError(f"unknown piece {piece!r}; choose from {', '.join(PIECES)}")


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, largest first, ties by smallest vertex id."""
    seen: set[int] = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if u not in comp:
                    comp.add(u)
                    queue.append(u)
        seen |= comp
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (-len(c), min(c)))
    return comps


def _line(n: int, x: int, y: int, d: Direction) -> tuple[Coord, ...]:
    bx, by = x, y
    while 1 <= bx - d.dx <= n and 1 <= by - d.dy <= n:
        bx -= d.dx
        by -= d.dy
    pts = []
    while 1 <= bx <= n and 1 <= by <= n:
        pts.append((bx, by))
        bx += d.dx
        by += d.dy
    return tuple(pts)


def lines_through(g: BoardGraph, v: int) -> dict[Direction, tuple[int, ...]]:
    """Full board line through ``v`` for each direction, ordered along the direction."""
    if g.mode != "royal":
        raise UnsupportedModeError("lines_through needs a royal graph; animal adjacency is not line-structured")
    x, y = g.coord(v)
    return {d: tuple(g.vid(*p) for p in _line(g.n, x, y, d)) for d in g.dirs}


def board_lines(n: int, d: Direction | tuple[int, int]) -> dict[int, tuple[Coord, ...]]:
    """Every line of direction ``d`` on the n x n board, keyed by its offset."""
    d = d if isinstance(d, Direction) else Direction(*d)
    out: dict[int, list[Coord]] = {}
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            out.setdefault(d.offset(x, y), []).append((x, y))
    return {k: tuple(sorted(v, key=lambda p: d.dx * p[0] + d.dy * p[1])) for k, v in sorted(out.items())}


@dataclass(frozen=True)
class Symmetry:
    """One of the 8 dihedral maps of the square board, as an integer matrix."""

    name: str
    a: int
    b: int
    c: int
    d: int

    def vector(self, dx: int, dy: int) -> Coord:
        return self.a * dx + self.b * dy, self.c * dx + self.d * dy

    def square(self, n: int, x: int, y: int) -> Coord:
        # act on doubled, centered coordinates so the board center is fixed
        u, w = 2 * x - (n + 1), 2 * y - (n + 1)
        u, w = self.vector(u, w)
        return (u + n + 1) // 2, (w + n + 1) // 2

    def permutation(self, g: BoardGraph) -> dict[int, int]:
        return {v: g.vid(*self.square(g.n, *g.coord(v))) for v in g.vertices}


DIHEDRAL = (
    Symmetry("identity", 1, 0, 0, 1),
    Symmetry("rot90", 0, -1, 1, 0),
    Symmetry("rot180", -1, 0, 0, -1),
    Symmetry("rot270", 0, 1, -1, 0),
    Symmetry("flip_x", -1, 0, 0, 1),
    Symmetry("flip_y", 1, 0, 0, -1),
    Symmetry("transpose", 0, 1, 1, 0),
    Symmetry("antitranspose", 0, -1, -1, 0),
)


def board_automorphisms(g: Graph) -> list[Symmetry]:
    """Dihedral board maps that carry the move set (and vertex set) onto itself."""
    if not isinstance(g, BoardGraph):
        return [DIHEDRAL[0]]
    moves = {_sign_canonical(*s) for s in g.steps}
    verts = set(g.vertices)
    out = []
    for sym in DIHEDRAL:
        if {_sign_canonical(*sym.vector(*s)) for s in moves} != moves:
            continue
        if set(sym.permutation(g).values()) != verts:
            continue
        out.append(sym)
    return out


# generic graphs used for solver checks
def path_graph(m: int) -> Graph:
    return Graph({i: {j for j in (i - 1, i + 1) if 0 <= j < m} for i in range(m)})


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise ConstructionError("cycle needs at least 3 vertices")
    return Graph({i: {(i - 1) % m, (i + 1) % m} for i in range(m)})


def complete_graph(m: int) -> Graph:
    return Graph({i: set(range(m)) - {i} for i in range(m)})


# export / import
def to_json(g: BoardGraph) -> dict:
    out = {
        "n": g.n,
        "mode": g.mode,
        "dirs": [list(s) for s in g.steps],
        "edges": [list(e) for e in g.edges()],
    }
    if not g.is_full:
        out["vertices"] = list(g.vertices)
    return out


def from_json(data: dict) -> BoardGraph:
    n, mode, dirs = data["n"], data["mode"], [tuple(d) for d in data["dirs"]]
    if mode == "royal":
        g = build_royal(n, dirs)
    elif mode == "animal":
        g = build_animal(n, dirs)
    else:
        raise ConstructionError(f"unknown mode {mode!r}")
    if "vertices" in data:
        g = g.induced(data["vertices"])
    if [list(e) for e in g.edges()] != [list(e) for e in data["edges"]]:
        raise ConstructionError("edge list does not match the declared direction set")
    return g


def to_dot(g: BoardGraph) -> str:
    lines = [f'graph "{g.describe()}" {{']
    for v in g.vertices:
        x, y = g.coord(v)
        lines.append(f'  {v} [label="{x},{y}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
