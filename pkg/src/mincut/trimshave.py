"""Trim and shave, with degrees always taken in the full graph.

Both thresholds are compared in integers:

* trim removes ``v`` while ``5 * |E(v, S)| < 2 * deg(v)``
* shave keeps ``v`` iff ``2 * |E(v, S)| > deg(v) + 2``
"""

from __future__ import annotations

import heapq
from typing import Iterable

from .graph import SimpleGraph, VertexSet, _check_range


def _trim_qualifies(inside: int, deg: int) -> bool:
    return 5 * inside < 2 * deg


def trim(G: SimpleGraph, S: Iterable[int]) -> VertexSet:
    """Largest ``T`` within ``S`` where every vertex keeps at least 2/5 of its
    degree inside ``T``.

    Peels qualifying vertices smallest-id first with live inside-degree
    counters; the result does not depend on the peeling order.
    """
    members = set(S)
    _check_range(G.n, members)
    deg = G.deg
    adj = G.adj
    inside = {v: sum(1 for u in adj[v] if u in members) for v in members}
    heap = [v for v in members if _trim_qualifies(inside[v], deg[v])]
    heapq.heapify(heap)
    while heap:
        v = heapq.heappop(heap)
        if v not in members:
            continue
        members.discard(v)
        for u in adj[v]:
            if u in members:
                before = _trim_qualifies(inside[u], deg[u])
                inside[u] -= 1
                if not before and _trim_qualifies(inside[u], deg[u]):
                    heapq.heappush(heap, u)
    return VertexSet(members)


def trim_with_order(G: SimpleGraph, S: Iterable[int], choose) -> VertexSet:
    """Trim where ``choose(candidates)`` picks which qualifying vertex to peel.

    Slow reference used to check order independence.
    """
    members = set(S)
    while True:
        candidates = sorted(v for v in members
                            if _trim_qualifies(sum(1 for u in G.adj[v] if u in members), G.deg[v]))
        if not candidates:
            return VertexSet(members)
        members.discard(choose(candidates))


def shave(G: SimpleGraph, S: Iterable[int]) -> VertexSet:
    """Vertices of ``S`` with more than ``deg(v)/2 + 1`` neighbours in ``S``.

    Single pass: inside-degrees are measured against the input ``S``.
    """
    members = frozenset(S)
    _check_range(G.n, members)
    return VertexSet(v for v in members
                     if 2 * sum(1 for u in G.adj[v] if u in members) > G.deg[v] + 2)
