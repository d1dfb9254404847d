"""Vectorized backward induction over dense cop-tuple arrays.

The cop-win region is grown layer by layer.  ``W_t`` holds the cops-to-move
positions ``(c_1, ..., c_k, r)`` won within ``t`` cop moves.  One layer is

    robber step   R[C, r] = r in C  or  every r' in N[r] has W_t[C, r']
    cop step      W_{t+1}[C, r] = some C' with c'_i in N[c_i] has R[C', r]

The robber step is a count over the robber axis (one matrix product with the
closed adjacency).  The cop step is separable: "some neighbor along axis i"
applied once per cop axis.  Both are 0/1 float32 matrix products, which stay
exact because every count is far below 2**24.
"""

from __future__ import annotations

import logging

import numpy as np

logger = logging.getLogger(__name__)

INF = np.iinfo(np.int16).max


def occupancy(V: int, k: int) -> np.ndarray:
    """Boolean array over (c_1..c_k, r): true where some cop sits on the robber."""
    shape = (V,) * (k + 1)
    occ = np.zeros(shape, dtype=bool)
    eye = np.eye(V, dtype=bool)
    for i in range(k):
        bshape = [1] * (k + 1)
        bshape[i] = V
        bshape[k] = V
        occ |= eye.reshape(bshape)
    return occ


def _exists_neighbor(X: np.ndarray, A: np.ndarray, axis: int) -> np.ndarray:
    Y = np.tensordot(A, X, axes=([1], [axis]))
    np.minimum(Y, 1.0, out=Y)
    return np.moveaxis(Y, 0, axis)


def fixed_point(A: np.ndarray, k: int) -> tuple[np.ndarray, int]:
    """Capture depth of every cops-to-move position.

    ``A`` is the closed adjacency (V x V, symmetric, ones on the diagonal).
    Returns ``(T, layers)`` where ``T[c_1..c_k, r]`` is the optimal number of
    cop moves to capture, or ``INF`` when the robber escapes forever.
    """
    V = A.shape[0]
    Af = A.astype(np.float32)
    occ = occupancy(V, k)
    T = np.full(occ.shape, INF, dtype=np.int16)
    T[occ] = 0
    W = occ.copy()
    t = 0
    while True:
        t += 1
        bad = (~W).astype(np.float32).reshape(-1, V)
        R = (bad @ Af).reshape(occ.shape) < 0.5
        del bad
        R |= occ
        E = R.astype(np.float32)
        del R
        for axis in range(k):
            E = _exists_neighbor(E, Af, axis)
        W_new = E > 0.5
        del E
        fresh = W_new & ~W
        if not fresh.any():
            break
        T[fresh] = t
        W = W_new
        logger.debug("layer %d: %d new cop-win positions", t, int(fresh.sum()))
    return T, t - 1


class DenseTable:
    """Capture-depth lookup backed by the dense array."""

    def __init__(self, vertices: tuple[int, ...], T: np.ndarray, k: int):
        self.vertices = vertices
        self.index = {v: i for i, v in enumerate(vertices)}
        self.T = T
        self.k = k

    def depth(self, cops: tuple[int, ...], robber: int) -> int | None:
        idx = tuple(self.index[c] for c in cops) + (self.index[robber],)
        d = int(self.T[idx])
        return None if d == INF else d

    def joint_move_depths(
        self, nbhds: list[list[int]], robber: int, robber_nbhd: list[int]
    ) -> np.ndarray:
        """Depth of each robber-to-move position reached by a joint cop move.

        ``nbhds[i]`` lists the destinations of cop i; the result has one axis
        per cop.  Moves that land on the robber have depth 0.
        """
        loc = [np.array([self.index[v] for v in nb]) for nb in nbhds]
        rloc = np.array([self.index[v] for v in robber_nbhd])
        out = self.T[np.ix_(*loc, rloc)].max(axis=-1).astype(np.int32)
        k = len(nbhds)
        for i, nb in enumerate(nbhds):
            shape = [1] * k
            shape[i] = len(nb)
            hit = (np.array(nb) == robber).reshape(shape)
            out = np.where(hit, 0, out)
        return out
