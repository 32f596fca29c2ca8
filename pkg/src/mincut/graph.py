"""Graph containers and the cut/volume primitives used by every stage.

Three views of a graph are used:

* ``SimpleGraph`` -- the input, no loops and no parallel edges.
* ``MultiGraph`` -- the result of contraction, integer edge multiplicities.
* ``LoopedGraph`` -- an induced subgraph whose vertices carry loop weight so
  that volumes measured inside the view equal volumes in the full graph.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import EmptyGraph, OverlappingSets, StrictViolation


class VertexSet(frozenset):
    """Immutable set of vertex ids with a canonical (ascending) order."""

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(sorted(self))

    def __repr__(self):
        return f"VertexSet({list(self.ids)})"


def _check_range(n: int, S: Iterable[int]) -> None:
    for v in S:
        if not 0 <= v < n:
            raise IndexError(f"vertex {v} out of range [0, {n})")


class SimpleGraph:
    """Undirected simple graph with sorted neighbour tuples.

    Build instances with :func:`build_simple_graph`; the constructor trusts
    that ``adj`` is symmetric and only checks simplicity and ordering.
    """

    __slots__ = ("n", "m", "adj", "deg", "dropped", "labels")

    def __init__(self, n: int, adj: Sequence[Sequence[int]], dropped=None, labels=None):
        if n <= 0:
            raise EmptyGraph("graph has no vertices")
        if len(adj) != n:
            raise ValueError("adjacency length does not match n")
        adj = tuple(tuple(nb) for nb in adj)
        total = 0
        for v, nb in enumerate(adj):
            for i, u in enumerate(nb):
                if u == v:
                    raise StrictViolation((v, v), "self-loop")
                if i and nb[i - 1] >= u:
                    raise StrictViolation((v, u), "duplicate or unsorted neighbour")
            total += len(nb)
        if total % 2:
            raise ValueError("adjacency is not symmetric")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", total // 2)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "deg", tuple(len(nb) for nb in adj))
        object.__setattr__(self, "dropped", dict(dropped or {"dups": 0, "loops": 0}))
        if labels is not None and len(labels) != n:
            raise ValueError("label table length does not match n")
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else tuple(range(n)))

    def __setattr__(self, name, value):
        raise AttributeError("SimpleGraph is immutable")

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nb in enumerate(self.adj):
            for v in nb:
                if v > u:
                    yield u, v

    def weighted_neighbors(self, v: int):
        return ((u, 1) for u in self.adj[v])

    def weighted_degree(self, v: int) -> int:
        return self.deg[v]

    def __eq__(self, other):
        return isinstance(other, SimpleGraph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.m})"


def build_simple_graph(edge_list: Iterable[tuple[int, int]], strict: bool = True,
                       n: int | None = None, labels=None) -> SimpleGraph:
    """Build a :class:`SimpleGraph` from vertex-id pairs.

    ``n`` defaults to one more than the largest id seen. In strict mode a
    duplicate edge or self-loop raises :class:`StrictViolation`; otherwise
    they are dropped and counted in ``graph.dropped``.
    """
    seen = set()
    dups = loops = 0
    top = -1
    for u, v in edge_list:
        u, v = int(u), int(v)
        if u < 0 or v < 0:
            raise ValueError(f"negative vertex id in edge ({u}, {v})")
        top = max(top, u, v)
        if u == v:
            if strict:
                raise StrictViolation((u, v), "self-loop")
            loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            if strict:
                raise StrictViolation((u, v), "duplicate edge")
            dups += 1
            continue
        seen.add(key)
    if n is None:
        n = top + 1
    elif top >= n:
        raise ValueError(f"vertex {top} out of range for n={n}")
    if n <= 0:
        raise EmptyGraph("graph has no vertices")
    adj = [[] for _ in range(n)]
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)
    for nb in adj:
        nb.sort()
    return SimpleGraph(n, adj, {"dups": dups, "loops": loops}, labels)


class MultiGraph:
    """Undirected multigraph without loops; ``adj[v]`` is a sorted tuple of
    ``(neighbour, multiplicity)`` pairs. ``origin_map[x]`` is the vertex that
    original vertex ``x`` was merged into."""

    __slots__ = ("n", "adj", "origin_map", "m", "wdeg")

    def __init__(self, n: int, adj: Sequence[Sequence[tuple[int, int]]],
                 origin_map: Sequence[int] | None = None):
        if n <= 0:
            raise EmptyGraph("graph has no vertices")
        adj = tuple(tuple(sorted(nb)) for nb in adj)
        lookup = [dict(nb) for nb in adj]
        for v, nb in enumerate(adj):
            for u, w in nb:
                if u == v:
                    raise ValueError("multigraph may not contain self-loops")
                if w < 1:
                    raise ValueError("multiplicities must be positive")
                if lookup[u].get(v) != w:
                    raise ValueError(f"asymmetric multiplicity on ({v}, {u})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "origin_map",
                           tuple(origin_map) if origin_map is not None else tuple(range(n)))
        wdeg = tuple(sum(w for _, w in nb) for nb in adj)
        object.__setattr__(self, "wdeg", wdeg)
        object.__setattr__(self, "m", sum(wdeg) // 2)

    def __setattr__(self, name, value):
        raise AttributeError("MultiGraph is immutable")

    @classmethod
    def from_simple(cls, G: SimpleGraph) -> "MultiGraph":
        return cls(G.n, [[(u, 1) for u in nb] for nb in G.adj])

    @classmethod
    def from_weighted_edges(cls, n: int, edges: Iterable[tuple[int, int, int]],
                            origin_map=None) -> "MultiGraph":
        """Sum multiplicities of repeated pairs; loops are ignored."""
        acc: list[dict[int, int]] = [{} for _ in range(n)]
        for u, v, w in edges:
            if u == v:
                continue
            acc[u][v] = acc[u].get(v, 0) + w
            acc[v][u] = acc[v].get(u, 0) + w
        return cls(n, [list(d.items()) for d in acc], origin_map)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for u, nb in enumerate(self.adj):
            for v, w in nb:
                if v > u:
                    yield u, v, w

    @property
    def edge_count(self) -> int:
        """Number of distinct adjacent pairs (ignoring multiplicity)."""
        return sum(len(nb) for nb in self.adj) // 2

    def weighted_neighbors(self, v: int):
        return iter(self.adj[v])

    def weighted_degree(self, v: int) -> int:
        return self.wdeg[v]

    def __repr__(self):
        return f"MultiGraph(n={self.n}, m={self.m})"


class LoopedGraph:
    """Induced subgraph ``G[X]`` plus per-vertex loop weight.

    Vertices keep their ids from ``base``. The degree of ``v`` inside the
    view is ``|E(v, X)| + loop_weight[v]``; a loop of weight ``w`` adds
    ``w`` (not ``2w``) to the degree.
    """

    def __init__(self, base: SimpleGraph, vertices: Iterable[int],
                 loop_weight: dict[int, int] | None = None):
        verts = tuple(sorted(set(vertices)))
        _check_range(base.n, verts)
        members = frozenset(verts)
        self.base = base
        self.vertices = verts
        self.members = members
        self.index = {v: i for i, v in enumerate(verts)}
        self.inner = {v: tuple(u for u in base.adj[v] if u in members) for v in verts}
        loops = loop_weight or {}
        if any(w < 0 for w in loops.values()):
            raise ValueError("loop weights must be nonnegative")
        self.loop_weight = {v: int(loops.get(v, 0)) for v in verts}
        self.degree = {v: len(self.inner[v]) + self.loop_weight[v] for v in verts}

    def __len__(self):
        return len(self.vertices)

    def weighted_neighbors(self, v: int):
        return ((u, 1) for u in self.inner[v])

    def weighted_degree(self, v: int) -> int:
        return self.degree[v]

    @property
    def total_volume(self) -> int:
        return sum(self.degree.values())

    def __repr__(self):
        return f"LoopedGraph(|X|={len(self.vertices)}, loops={sum(self.loop_weight.values())})"


def cut_size(G, A: Iterable[int], B: Iterable[int]) -> int:
    """``|E(A, B)|`` counting multiplicities; ``A`` and ``B`` must be disjoint."""
    A = A if isinstance(A, frozenset) else frozenset(A)
    B = B if isinstance(B, frozenset) else frozenset(B)
    if A & B:
        raise OverlappingSets(f"sets share vertices {sorted(A & B)[:5]}")
    if len(A) > len(B):
        A, B = B, A
    total = 0
    for v in A:
        for u, w in G.weighted_neighbors(v):
            if u in B:
                total += w
    return total


def volume(G, S: Iterable[int]) -> int:
    """Sum of degrees over ``S`` (loop weight included for a LoopedGraph)."""
    if isinstance(G, LoopedGraph):
        return sum(G.degree[v] for v in S)
    n = G.n
    total = 0
    for v in S:
        if not 0 <= v < n:
            raise IndexError(f"vertex {v} out of range [0, {n})")
        total += G.weighted_degree(v)
    return total


def inside_degree(G: SimpleGraph, v: int, S) -> int:
    """``|E(v, S)|`` for a set-like ``S``."""
    return sum(1 for u in G.adj[v] if u in S)


def min_degree(G: SimpleGraph) -> int:
    return min(G.deg)


def components(G) -> list[VertexSet]:
    """Connected components ordered by their smallest vertex."""
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u, _ in G.weighted_neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(VertexSet(comp))
    return comps


def is_connected(G) -> bool:
    return len(components(G)) == 1


def view_components(H: LoopedGraph) -> list[VertexSet]:
    """Connected components of the induced part of a looped view."""
    seen = set()
    comps = []
    for s in H.vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in H.inner[v]:
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(VertexSet(comp))
    return comps
