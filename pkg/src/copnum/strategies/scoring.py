"""Vectorized scoring of joint cop moves.

After a joint cop move ``c`` the robber at ``r`` has a set of replies that are
not captured on the next cop move (``safe`` replies).  The cops' score of
``c`` is the pair (largest Phi among safe replies, number of safe replies),
compared lexicographically and packed into one integer ``phi * BIG + count``.
A move that lands on the robber scores ``CAPTURE``, below everything else.

Reply sets are stored as bitmasks packed into uint64 words with replies
ordered by Phi descending, so the best safe reply is the lowest set bit.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..board import BoardGraph, Graph

BIG = 10_000
CAPTURE = -1
DOOMED = -2  # robber score of a reply that is captured on the next cop move
CHUNK = 1 << 16


def phi(n: int, v: tuple[int, int]) -> int:
    """Vertex count of the shorter diagonal through square ``v``."""
    x, y = v
    return min(n - abs(x - y), n - abs(x + y - (n + 1)))


def uses_phi(g: Graph) -> bool:
    """Phi is only meaningful on royal boards that move along both diagonals."""
    if not isinstance(g, BoardGraph) or g.mode != "royal":
        return False
    steps = {(d.dx, d.dy) for d in g.dirs}
    return (1, 1) in steps and (1, -1) in steps


class Scorer:
    """Per-graph tables: closed adjacency, neighborhoods, Phi per vertex (zero where Phi does not apply)."""

    def __init__(self, g: Graph):
        self.g = g
        self.vertices = g.vertices
        self.index = {v: i for i, v in enumerate(g.vertices)}
        V = len(g.vertices)
        A = np.eye(V, dtype=bool)
        for v, ns in g.adj.items():
            i = self.index[v]
            for u in ns:
                A[i, self.index[u]] = True
        self.A = A
        self.nbhd = [np.flatnonzero(A[i]) for i in range(V)]
        if uses_phi(g):
            self.phi = np.array([phi(g.n, g.coord(v)) for v in g.vertices], dtype=np.int64)
        else:
            self.phi = np.zeros(V, dtype=np.int64)

    def loc(self, vs) -> list[int]:
        return [self.index[v] for v in vs]

    def guarded(self, cops_loc) -> np.ndarray:
        """Boolean over vertices: some cop can move there next turn."""
        return self.A[list(cops_loc)].any(axis=0)


@lru_cache(maxsize=16)
def scorer(g: Graph) -> Scorer:
    return Scorer(g)


def pack(masks: np.ndarray) -> np.ndarray:
    """Pack bool rows (a, m) into uint64 words (a, ceil(m/64))."""
    a, m = masks.shape
    words = max(1, -(-m // 64))
    padded = np.zeros((a, words * 64), dtype=bool)
    padded[:, :m] = masks
    return np.packbits(padded, axis=1, bitorder="little").view("<u8").reshape(a, words)


def _combine(packed: list[np.ndarray]) -> np.ndarray:
    """OR of one row per cop, over the full product; shape (a_1..a_k, words)."""
    k = len(packed)
    out = None
    for i, p in enumerate(packed):
        shape = [1] * k + [p.shape[1]]
        shape[i] = p.shape[0]
        view = p.reshape(shape)
        out = view if out is None else out | view
    return out


def _lowest_bit(x: np.ndarray) -> np.ndarray:
    """Index of the lowest set bit (64 where ``x`` is zero)."""
    one = np.uint64(1)
    return np.bitwise_count((x & (~x + one)) - one).astype(np.int64)


def reply_values(covered: np.ndarray, weights: np.ndarray, m: int) -> np.ndarray:
    """Packed score for each covered-mask row.

    ``weights`` are the replies' Phi values in bit order (descending).
    """
    words = covered.shape[-1]
    full = np.zeros(words, dtype=np.uint64)
    for w in range(words):
        bits = min(64, m - 64 * w)
        if bits > 0:
            full[w] = np.uint64((1 << bits) - 1) if bits < 64 else np.uint64(2**64 - 1)
    unc = ~covered & full
    count = np.bitwise_count(unc).sum(axis=-1, dtype=np.int64)
    if m == 0:
        return count
    if weights[0] == weights[-1]:
        # all replies weigh the same: the best safe reply only matters by existence
        return np.where(count > 0, int(weights[0]), 0) * BIG + count
    first = np.full(unc.shape[:-1], m, dtype=np.int64)
    for w in reversed(range(words)):
        x = unc[..., w]
        first = np.where(x != 0, w * 64 + _lowest_bit(x), first)
    wpad = np.append(weights, 0)
    best = wpad[np.minimum(first, m)]
    return best * BIG + count


def cop_move_values(sc: Scorer, cops_loc, robber_loc) -> tuple[list[np.ndarray], np.ndarray]:
    """Score every joint cop move; returns (per-cop destination lists, scores)."""
    R = sc.nbhd[robber_loc]
    order = np.argsort(-sc.phi[R], kind="stable")
    R = R[order]
    dests = [sc.nbhd[c] for c in cops_loc]
    packed = [pack(sc.A[np.ix_(d, R)]) for d in dests]
    vals = reply_values(_combine(packed), sc.phi[R], len(R))
    k = len(dests)
    for i, d in enumerate(dests):
        shape = [1] * k
        shape[i] = len(d)
        vals = np.where((d == robber_loc).reshape(shape), CAPTURE, vals)
    return dests, vals


def maximal_rows(masks: np.ndarray) -> np.ndarray:
    """Distinct rows not strictly contained in another row."""
    rows = np.unique(masks, axis=0)
    if len(rows) <= 1:
        return rows
    f = rows.astype(np.float32)
    # outside[i, j] = |row_i minus row_j|
    outside = f @ (1.0 - f).T
    contained = outside < 0.5
    np.fill_diagonal(contained, False)
    return rows[~contained.any(axis=1)]


def response_value(sc: Scorer, cops_loc, at_loc, replies=None, weights=None) -> int:
    """Cops' best (minimum) score against a robber standing on ``at_loc``.

    Assumes no cop can land on ``at_loc``.  ``replies`` restricts the robber's
    follow-up squares (default N[at]); ``weights`` overrides Phi.  Cop
    destinations whose coverage is dominated by another destination are
    dropped, which leaves the minimum unchanged.
    """
    R = sc.nbhd[at_loc] if replies is None else np.asarray(replies)
    w = sc.phi[R] if weights is None else np.asarray(weights)
    order = np.argsort(-w, kind="stable")
    R, w = R[order], w[order]
    packed = [pack(maximal_rows(sc.A[np.ix_(sc.nbhd[c], R)])) for c in cops_loc]
    size = int(np.prod([len(p) for p in packed]))
    if len(packed) < 3 or size <= CHUNK:
        return int(reply_values(_combine(packed), w, len(R)).min())
    # large products: one slice per row of the first cop, stopping once no reply is safe
    head, rest = packed[0], packed[1:]
    best = None
    for row in head:
        val = int(reply_values(_combine([row[None, :]] + rest), w, len(R)).min())
        best = val if best is None else min(best, val)
        if best == 0:
            break
    return best


def response_value_bruteforce(sc: Scorer, cops_loc, at_loc) -> int:
    """Same quantity as :func:`response_value` by plain enumeration (no packing, no pruning)."""
    R = sc.nbhd[at_loc]
    dests = [sc.nbhd[c] for c in cops_loc]
    k = len(dests)
    covered = None
    for i, d in enumerate(dests):
        shape = [1] * k + [len(R)]
        shape[i] = len(d)
        m = sc.A[np.ix_(d, R)].reshape(shape)
        covered = m if covered is None else covered | m
    safe = ~covered
    best = np.where(safe, sc.phi[R], 0).max(axis=-1)
    return int((best * BIG + safe.sum(axis=-1)).min())
