"""Deterministic graph families used by the CLI and the verification corpus."""

from __future__ import annotations

from ._mix import unit
from .graph import SimpleGraph, build_simple_graph


def clique_pair(q: int, t: int) -> SimpleGraph:
    """Two copies of ``K_q`` joined by ``t`` vertex-disjoint edges ``(i, q + i)``."""
    if q < 1:
        raise ValueError("clique size q must be >= 1")
    if not 0 <= t <= q:
        raise ValueError(f"need 0 <= t <= q for vertex-disjoint joining edges (q={q}, t={t})")
    edges = [(i, j) for i in range(q) for j in range(i + 1, q)]
    edges += [(q + i, q + j) for i, j in edges]
    edges += [(i, q + i) for i in range(t)]
    return build_simple_graph(edges, n=2 * q)


def gnp(n: int, p: float, seed: int = 0) -> SimpleGraph:
    """Erdos-Renyi ``G(n, p)``; pair number ``c`` (lexicographic order) is an
    edge iff the counter-based draw for ``(seed, c)`` is below ``p``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    edges = []
    c = 0
    for i in range(n):
        for j in range(i + 1, n):
            if unit(seed, c) < p:
                edges.append((i, j))
            c += 1
    return build_simple_graph(edges, n=n)


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a simple cycle needs n >= 3")
    return build_simple_graph([(i, (i + 1) % n) for i in range(n)], n=n)


def hypercube(d: int) -> SimpleGraph:
    if d < 1:
        raise ValueError("dimension must be >= 1")
    n = 1 << d
    return build_simple_graph([(v, v ^ (1 << b)) for v in range(n) for b in range(d)
                               if v < v ^ (1 << b)], n=n)


FAMILIES = {
    "clique-pair": (clique_pair, (int, int)),
    "gnp": (gnp, (int, float)),
    "cycle": (cycle, (int,)),
    "hypercube": (hypercube, (int,)),
}


def generate(family: str, params, seed: int = 0) -> SimpleGraph:
    """Build a family member from string parameters, as given on the command line."""
    try:
        fn, types = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    if len(params) != len(types):
        raise ValueError(f"{family} takes {len(types)} parameters, got {len(params)}")
    args = [typ(x) for typ, x in zip(types, params)]
    if family == "gnp":
        return fn(*args, seed=seed)
    return fn(*args)
