"""Edge connectivity of a simple graph by expander-decomposition contraction.

The steps:

1. ``phi = 40 / delta``; decompose, trim every part, shave every trimmed part.
2. Contract each shaved set into one vertex.
3. Ask the bounded oracle for ``lambda'`` of the contracted graph and answer
   ``min(lambda', delta)``.

No shaved set straddles a non-trivial minimum cut, so the contracted graph
keeps every such cut while the minimum degree covers the trivial ones.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ._parallel import pmap
from .decomp import DecompositionReport, EXHAUSTIVE_LIMIT, expander_decompose
from .errors import GraphTooSmall, InvariantViolation, OverlappingFamily
from .graph import MultiGraph, SimpleGraph, VertexSet, components, cut_size
from .oracle import OracleChoice, bounded_edge_connectivity
from .trimshave import shave, trim

PHI_NUMERATOR = 40


@dataclass(frozen=True)
class CutResult:
    lam: int
    side: VertexSet | None = None


@dataclass
class PipelineReport:
    n: int
    m: int
    delta: int
    phi: float | None
    decomposition: DecompositionReport | None
    trimmed_vertices: int
    shaved_vertices: int
    contracted_n: int
    contracted_m: int
    lambda_prime: int
    answer: int
    timings_ms: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "delta": self.delta,
            "phi": self.phi,
            "decomposition": self.decomposition.to_json() if self.decomposition else None,
            "trimmed_vertices": self.trimmed_vertices,
            "shaved_vertices": self.shaved_vertices,
            "contracted_n": self.contracted_n,
            "contracted_m": self.contracted_m,
            "lambda_prime": self.lambda_prime,
            "answer": self.answer,
            "timings_ms": {k: round(v, 3) for k, v in self.timings_ms.items()},
        }


def contract(G: SimpleGraph, family) -> MultiGraph:
    """Merge each nonempty set of ``family`` into one vertex.

    Vertices outside every set stay on their own. Contracted vertices are
    numbered by their smallest original vertex, so vertex 0 always maps to 0.
    Edges inside a set disappear; parallel edges become multiplicities.
    """
    owner = [-1] * G.n
    groups = []
    for S in family:
        S = list(S)
        if not S:
            continue
        for v in S:
            if owner[v] != -1:
                raise OverlappingFamily(f"vertex {v} appears in two sets")
            owner[v] = len(groups)
        groups.append(S)
    for v in range(G.n):
        if owner[v] == -1:
            owner[v] = len(groups)
            groups.append([v])
    order = sorted(range(len(groups)), key=lambda g: min(groups[g]))
    relabel = {g: i for i, g in enumerate(order)}
    origin_map = [relabel[owner[v]] for v in range(G.n)]
    edges = ((origin_map[u], origin_map[v], 1) for u, v in G.edges())
    return MultiGraph.from_weighted_edges(len(groups), edges, origin_map)


def verify_cut(G: SimpleGraph, cut: CutResult) -> bool:
    """Recount the edges leaving ``cut.side`` and compare with ``cut.lam``."""
    if cut.side is None:
        raise ValueError("cut has no side to verify")
    side = frozenset(cut.side)
    if not 0 < len(side) < G.n:
        return False
    rest = frozenset(range(G.n)) - side
    return cut_size(G, side, rest) == cut.lam


def _min_degree_vertex(G: SimpleGraph) -> int:
    return min(range(G.n), key=lambda v: (G.deg[v], v))


def edge_connectivity(G: SimpleGraph, oracle=OracleChoice.FLOW,
                      exhaustive_limit: int = EXHAUSTIVE_LIMIT):
    """``(CutResult, PipelineReport)`` for a simple graph with ``n >= 2``."""
    if G.n < 2:
        raise GraphTooSmall(f"need at least 2 vertices, got {G.n}")
    oracle = OracleChoice(oracle)
    clock = time.perf_counter
    timings = {}
    t_start = clock()
    delta = min(G.deg)

    comps = components(G)
    if len(comps) > 1:
        timings["total"] = (clock() - t_start) * 1000
        report = PipelineReport(G.n, G.m, delta, None, None, 0, 0, G.n, G.m, 0, 0, timings)
        return CutResult(0, comps[0]), report

    phi = PHI_NUMERATOR / delta
    t = clock()
    partition, decomp_report = expander_decompose(G, phi, exhaustive_limit=exhaustive_limit)
    timings["decompose"] = (clock() - t) * 1000

    t = clock()
    trimmed = pmap(lambda X: trim(G, X), partition.parts)
    timings["trim"] = (clock() - t) * 1000
    t = clock()
    shaved = pmap(lambda X: shave(G, X), trimmed)
    timings["shave"] = (clock() - t) * 1000

    t = clock()
    H = contract(G, shaved)
    timings["contract"] = (clock() - t) * 1000

    # delta <= 40 means phi >= 1: the partition is trivial and H is G itself
    k = delta if delta <= PHI_NUMERATOR else delta + 1
    t = clock()
    lambda_prime, side = bounded_edge_connectivity(H, k, oracle)
    timings["oracle"] = (clock() - t) * 1000

    answer = min(lambda_prime, delta)
    if lambda_prime < delta:
        chosen = frozenset(side)
        cut = CutResult(answer, VertexSet(v for v in range(G.n) if H.origin_map[v] in chosen))
    else:
        cut = CutResult(answer, VertexSet([_min_degree_vertex(G)]))
    timings["total"] = (clock() - t_start) * 1000

    report = PipelineReport(
        n=G.n,
        m=G.m,
        delta=delta,
        phi=phi,
        decomposition=decomp_report,
        trimmed_vertices=sum(len(X) - len(Y) for X, Y in zip(partition.parts, trimmed)),
        shaved_vertices=sum(len(X) - len(Y) for X, Y in zip(trimmed, shaved)),
        contracted_n=H.n,
        contracted_m=H.m,
        lambda_prime=lambda_prime,
        answer=answer,
        timings_ms=timings,
    )
    if report.answer != min(report.lambda_prime, report.delta) or H.m > G.m:
        raise InvariantViolation("pipeline report is inconsistent")
    if not verify_cut(G, cut):
        raise InvariantViolation(f"recovered side does not cut {cut.lam} edges")
    return cut, report
