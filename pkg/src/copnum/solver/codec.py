"""Packing of cop multisets and game states into integers.

Cop positions are nondecreasing tuples over ``V`` local vertex indices.  Their
rank is their position in lexicographic order among all such tuples, so
"smallest packed index" and "lexicographically first" coincide.
"""

from __future__ import annotations

from math import comb

COPS_TO_MOVE = 0
ROBBER_TO_MOVE = 1


def multiset_count(V: int, k: int) -> int:
    """Number of nondecreasing k-tuples over V symbols."""
    return comb(V + k - 1, k)


def _tail(V: int, v: int, m: int) -> int:
    # tuples of length m whose entries are all >= v
    return comb(V - v + m - 1, m) if m else 1


def rank(cops: tuple[int, ...], V: int) -> int:
    k = len(cops)
    r = 0
    prev = 0
    for i, c in enumerate(cops):
        m = k - i - 1
        # sum_{v=prev}^{c-1} C(V-v+m-1, m), telescoped
        r += comb(V - prev + m, m + 1) - comb(V - c + m, m + 1)
        prev = c
    return r


def unrank(r: int, V: int, k: int) -> tuple[int, ...]:
    out = []
    prev = 0
    for i in range(k):
        m = k - i - 1
        v = prev
        while True:
            block = _tail(V, v, m)
            if r < block:
                break
            r -= block
            v += 1
        out.append(v)
        prev = v
    return tuple(out)


def pack_state(cops: tuple[int, ...], robber: int, side: int, V: int) -> int:
    """64-bit state index: (rank(cops) * V + robber) * 2 + side."""
    return (rank(cops, V) * V + robber) * 2 + side


def unpack_state(code: int, V: int, k: int) -> tuple[tuple[int, ...], int, int]:
    code, side = divmod(code, 2)
    r, robber = divmod(code, V)
    return unrank(r, V, k), robber, side
