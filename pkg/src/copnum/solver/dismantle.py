from __future__ import annotations

import heapq

from ..board import Graph


def is_dismantlable(g: Graph) -> tuple[bool, list[int]]:
    """Strip dominated vertices until none is left to strip.

    A vertex v is dominated when N[v] is contained in N[u] for some u != v.
    Returns whether a single vertex remains, plus the removal order.  The
    smallest dominated id is always removed first, so the certificate is
    deterministic.
    """
    closed = {v: set(g.adj[v]) | {v} for v in g.vertices}
    order: list[int] = []
    heap = list(g.vertices)
    heapq.heapify(heap)
    queued = set(heap)
    while heap and len(closed) > 1:
        v = heapq.heappop(heap)
        queued.discard(v)
        if v not in closed:
            continue
        nv = closed[v]
        # a dominator must itself be in N[v]
        if not any(u != v and nv <= closed[u] for u in nv):
            continue
        order.append(v)
        del closed[v]
        for u in nv:
            if u != v:
                closed[u].discard(v)
                if u not in queued:
                    heapq.heappush(heap, u)
                    queued.add(u)
    return len(closed) == 1, order
