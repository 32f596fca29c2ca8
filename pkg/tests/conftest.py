import itertools

import pytest
from hypothesis import strategies as st

from mincut.graph import MultiGraph, build_simple_graph


def complete(n):
    return build_simple_graph(itertools.combinations(range(n), 2), n=n)


def path(n):
    return build_simple_graph([(i, i + 1) for i in range(n - 1)], n=n)


def star(leaves):
    return build_simple_graph([(0, i) for i in range(1, leaves + 1)])


def two_k5_three_edges():
    edges = list(itertools.combinations(range(5), 2))
    edges += [(u + 5, v + 5) for u, v in itertools.combinations(range(5), 2)]
    edges += [(0, 5), (1, 6), (2, 7)]
    return build_simple_graph(edges)


def two_triangles_bridge():
    return build_simple_graph([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])


# Independent brute force: plain Python over itertools, no shared code with
# the library's subset tables.

def brute_cut(G, side):
    side = set(side)
    total = 0
    for v in side:
        for u, w in G.weighted_neighbors(v):
            if u not in side:
                total += w
    return total


def brute_min_cut(G):
    verts = range(1, G.n)
    best = None
    for r in range(0, G.n - 1):
        for rest in itertools.combinations(verts, r):
            c = brute_cut(G, (0,) + rest)
            if best is None or c < best:
                best = c
    return best


def brute_conductances(G, X):
    """Every ``(S, cut, min vol_G)`` for proper nonempty ``S`` of ``X``."""
    X = sorted(X)
    for r in range(1, len(X)):
        for S in itertools.combinations(X, r):
            S = set(S)
            rest = set(X) - S
            cut = sum(1 for v in S for u in G.adj[v] if u in rest)
            vol_s = sum(G.deg[v] for v in S)
            vol_r = sum(G.deg[v] for v in rest)
            yield S, cut, min(vol_s, vol_r)


@st.composite
def simple_graphs(draw, min_n=2, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_simple_graph([p for p, keep in zip(pairs, mask) if keep], n=n)


@st.composite
def multigraphs(draw, min_n=2, max_n=9, max_mult=4):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mults = draw(st.lists(st.integers(0, max_mult), min_size=len(pairs), max_size=len(pairs)))
    return MultiGraph.from_weighted_edges(n, [(u, v, w) for (u, v), w in zip(pairs, mults) if w])


@pytest.fixture
def k5():
    return complete(5)
