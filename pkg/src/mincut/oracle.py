"""Backends for the bounded connectivity query ``min(lambda(H), k)``.

* ``flow``: s-t max flows from vertex 0 by shortest augmenting paths
  (Dinic phases), each flow abandoned once it reaches the cap.
* ``sw``: Stoer-Wagner minimum-cut phases on a dense weight matrix.
* ``exhaustive``: every side containing vertex 0, for ``n <= 20``.
"""

from __future__ import annotations

import enum
from collections import deque

import numpy as np

from . import _subsets
from ._parallel import pmap, worker_count
from .errors import ExhaustiveTooLarge, GraphTooSmall
from .graph import MultiGraph, SimpleGraph, VertexSet

EXHAUSTIVE_MAX_N = 20


class OracleChoice(enum.Enum):
    FLOW = "flow"
    SW = "sw"
    EXHAUSTIVE = "exhaustive"


def _as_multigraph(H) -> MultiGraph:
    if isinstance(H, SimpleGraph):
        return MultiGraph.from_simple(H)
    return H


def _check_size(H) -> None:
    if H.n < 2:
        raise GraphTooSmall(f"need at least 2 vertices, got {H.n}")


def weight_matrix(H) -> np.ndarray:
    H = _as_multigraph(H)
    W = np.zeros((H.n, H.n), dtype=np.int64)
    for u, v, w in H.edges():
        W[u, v] = W[v, u] = w
    return W


class _Network:
    """Residual arc arrays for an undirected multigraph; arc ``e ^ 1`` is the
    reverse of arc ``e`` and both start with the edge multiplicity."""

    def __init__(self, H: MultiGraph):
        self.n = H.n
        self.head = []
        self.cap0 = []
        self.out = [[] for _ in range(H.n)]
        for u, v, w in H.edges():
            e = len(self.head)
            self.head += [v, u]
            self.cap0 += [w, w]
            self.out[u].append(e)
            self.out[v].append(e + 1)

    def max_flow(self, s: int, t: int, limit: int):
        """Return ``(flow, side)``; ``side`` is the residual reach of ``s``
        when the flow stopped below ``limit``, else ``None``."""
        n, head, out = self.n, self.head, self.out
        cap = self.cap0[:]
        flow = 0
        while True:
            level = [-1] * n
            level[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                nxt = level[v] + 1
                for e in out[v]:
                    if cap[e] > 0:
                        u = head[e]
                        if level[u] < 0:
                            level[u] = nxt
                            queue.append(u)
            if level[t] < 0:
                return flow, VertexSet(v for v in range(n) if level[v] >= 0)
            ptr = [0] * n
            path = []
            v = s
            while True:
                if v == t:
                    push = limit - flow
                    for e in path:
                        if cap[e] < push:
                            push = cap[e]
                    for e in path:
                        cap[e] -= push
                        cap[e ^ 1] += push
                    flow += push
                    if flow >= limit:
                        return flow, None
                    path.clear()
                    v = s
                    continue
                arcs = out[v]
                i = ptr[v]
                want = level[v] + 1
                while i < len(arcs):
                    e = arcs[i]
                    if cap[e] > 0 and level[head[e]] == want:
                        break
                    i += 1
                ptr[v] = i
                if i < len(arcs):
                    path.append(arcs[i])
                    v = head[arcs[i]]
                elif v == s:
                    break
                else:
                    level[v] = -1
                    e = path.pop()
                    v = head[e ^ 1]
                    ptr[v] += 1


def flow_bounded(H, k: int | None = None):
    """``(min(lambda, k), side)`` by max flows from vertex 0 to every other
    vertex. ``side`` is given only when the value is below ``k``."""
    H = _as_multigraph(H)
    _check_size(H)
    cap = _cap(H, k)
    # the lightest vertex is already a cut, so no flow needs to exceed it
    lightest = min(range(H.n), key=lambda v: (H.wdeg[v], v))
    best, best_side = cap, None
    if H.wdeg[lightest] < cap:
        best, best_side = H.wdeg[lightest], VertexSet([lightest])
    net = _Network(H)
    sinks = range(1, H.n)
    if worker_count() > 1 and H.n > 2:
        # fixed cap so every sink's result is independent of scheduling
        limit = best
        results = pmap(lambda t: net.max_flow(0, t, limit), sinks)
        for flow, side in results:
            if flow < best:
                best, best_side = flow, side
    else:
        for t in sinks:
            if best == 0:
                break
            flow, side = net.max_flow(0, t, best)
            if flow < best:
                best, best_side = flow, side
    return best, (best_side if best < cap else None)


def _cap(H: MultiGraph, k):
    if k is None:
        return H.m + 1
    if k < 1:
        raise ValueError("cap k must be >= 1")
    return k


def stoer_wagner(H):
    """Exact ``(lambda, side)`` via minimum-cut phases.

    Ties in the maximum-adjacency order go to the smallest vertex id.
    """
    H = _as_multigraph(H)
    _check_size(H)
    n = H.n
    W = weight_matrix(H)
    groups = [[v] for v in range(n)]
    alive = np.ones(n, dtype=bool)
    best, best_side = None, None
    for remaining in range(n, 1, -1):
        idx = np.flatnonzero(alive)
        start = idx[0]
        key = W[start].astype(np.int64)
        free = alive.copy()
        free[start] = False
        prev = last = start
        for _ in range(remaining - 1):
            masked = np.where(free, key, -1)
            nxt = int(np.argmax(masked))
            prev, last = last, nxt
            phase_cut = int(key[nxt])
            free[nxt] = False
            key += W[nxt]
        if best is None or phase_cut < best:
            best, best_side = phase_cut, VertexSet(groups[last])
        W[prev] += W[last]
        W[:, prev] += W[:, last]
        W[prev, prev] = 0
        W[last] = 0
        W[:, last] = 0
        alive[last] = False
        groups[prev].extend(groups[last])
    return best, best_side


def exhaustive_min_cut(H):
    """Exact ``(lambda, side)`` over all proper sides containing vertex 0."""
    H = _as_multigraph(H)
    _check_size(H)
    if H.n > EXHAUSTIVE_MAX_N:
        raise ExhaustiveTooLarge(f"exhaustive oracle limited to n <= {EXHAUSTIVE_MAX_N}")
    cut = _subsets.cut_table(weight_matrix(H))
    sides = cut[1:-1:2]  # odd masks contain vertex 0; the full set is dropped
    i = int(np.argmin(sides))
    mask = 2 * i + 1
    return int(sides[i]), VertexSet(_subsets.members(mask, range(H.n)))


def bounded_edge_connectivity(H, k: int | None, which=OracleChoice.FLOW):
    """``(min(lambda(H), k), side)``; ``side`` is present iff the value is
    below ``k``. ``k=None`` means uncapped."""
    H = _as_multigraph(H)
    _check_size(H)
    which = OracleChoice(which)
    if which is OracleChoice.FLOW:
        return flow_bounded(H, k)
    cap = _cap(H, k)
    if which is OracleChoice.SW:
        value, side = stoer_wagner(H)
    else:
        value, side = exhaustive_min_cut(H)
    if value < cap:
        return value, side
    return cap, None
