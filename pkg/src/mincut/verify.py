"""Verification sweeps: oracle equivalence and the contraction-lemma checks.

The lemma checks take each certified part ``X`` of a decomposition, its trim
``X'`` and shave ``X''``, and every non-trivial minimum cut ``C`` of the
graph (enumerated exhaustively), and test

1. ``min(|X & C|, |X - C|) <= lambda / (phi * delta)``, which is
   ``lambda / 40`` at ``phi = 40 / delta``;
2. ``min(|X' & C|, |X' - C|) <= 2`` whenever ``lambda / (phi * delta) <
   delta / 30``; every vertex of ``X'`` keeps 2/5 of its degree inside
   ``X'``, and for the smaller side ``A`` of ``X'`` the counting bound
   ``5 * lambda >= 2 * vol(A) - 10 * |A|**2`` holds;
3. ``min(|X'' & C|, |X'' - C|) == 0`` whenever the smaller side of ``X'``
   has at most two vertices.

On graphs this small ``phi = 40 / delta`` is at least 1 and yields only
singletons, so the sweep also runs at ``phi`` in ``{0.1, 0.3, 0.5}`` where
parts with several vertices occur. A check is non-vacuous when the part
actually meets both sides of the cut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _subsets
from ._mix import unit
from .decomp import expander_decompose
from .generators import clique_pair, cycle, gnp, hypercube
from .graph import SimpleGraph, is_connected
from .oracle import exhaustive_min_cut, stoer_wagner, weight_matrix
from .pipeline import PHI_NUMERATOR, edge_connectivity, verify_cut
from .trimshave import shave, trim

EXHAUSTIVE_MAX_N = 14
SCALED_PHIS = (0.1, 0.3, 0.5)
MIN_NONVACUOUS = 50

_KINDS = ("gnp-0.1", "gnp-0.3", "gnp-0.6", "gnp-0.3", "gnp-0.6", "cycle", "hypercube", "clique-pair")


def _pick(lo: int, hi: int, r: float) -> int:
    return lo + min(int(r * (hi - lo + 1)), hi - lo)


def corpus(count: int, max_n: int = 60, seed: int = 0) -> list[tuple[str, SimpleGraph]]:
    """``count`` graphs with ``n <= max_n`` cycling through the families."""
    if max_n < 4:
        raise ValueError("max_n must be >= 4")
    out = []
    i = 0
    while len(out) < count:
        kind = _KINDS[i % len(_KINDS)]
        r1, r2 = unit(seed, 3 * i), unit(seed, 3 * i + 1)
        if kind.startswith("gnp"):
            p = float(kind.split("-")[1])
            n = _pick(4, max_n, r1)
            name, G = f"gnp({n},{p},seed={i})", gnp(n, p, seed=seed * 1_000_003 + i)
        elif kind == "cycle":
            n = _pick(3, max_n, r1)
            name, G = f"cycle({n})", cycle(n)
        elif kind == "hypercube":
            d = _pick(1, int(math.log2(max_n)), r1)
            name, G = f"hypercube({d})", hypercube(d)
        else:
            q = _pick(2, max_n // 2, r1)
            t = _pick(1, q, r2)
            name, G = f"clique-pair({q},{t})", clique_pair(q, t)
        i += 1
        if G.n >= 2:
            out.append((name, G))
    return out


@dataclass
class OracleStats:
    total: int = 0
    sw_equal: int = 0
    exhaustive_total: int = 0
    exhaustive_equal: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        return [
            f"{self.sw_equal}/{self.total} oracle-equal",
            f"{self.exhaustive_equal}/{self.exhaustive_total} exhaustive-equal",
        ]


def oracle_equivalence(graphs, exhaustive_max_n: int = EXHAUSTIVE_MAX_N) -> OracleStats:
    """Compare the pipeline answer with Stoer-Wagner on every graph and with
    the exhaustive oracle where ``n <= exhaustive_max_n``."""
    stats = OracleStats()
    for name, G in graphs:
        stats.total += 1
        try:
            cut, report = edge_connectivity(G)
        except Exception as exc:  # reported, not raised: the sweep keeps going
            stats.failures.append((name, f"pipeline raised {exc!r}"))
            continue
        sw = stoer_wagner(G)[0]
        if cut.lam == sw and report.answer == cut.lam and verify_cut(G, cut):
            stats.sw_equal += 1
        else:
            stats.failures.append((name, f"pipeline {cut.lam} vs stoer-wagner {sw}"))
        if G.n <= exhaustive_max_n:
            stats.exhaustive_total += 1
            ex = exhaustive_min_cut(G)[0]
            if ex == cut.lam:
                stats.exhaustive_equal += 1
            else:
                stats.failures.append((name, f"pipeline {cut.lam} vs exhaustive {ex}"))
    return stats


def nontrivial_min_cuts(G: SimpleGraph):
    """``(lambda, [C, ...])``: every non-trivial minimum cut side containing
    vertex 0, by enumeration."""
    n = G.n
    cut = _subsets.cut_table(weight_matrix(G))
    size = _subsets.popcount_table(n)
    masks = np.arange(1, (1 << n) - 1, 2)
    lam = int(cut[masks].min())
    keep = masks[(cut[masks] == lam) & (size[masks] >= 2) & (size[masks] <= n - 2)]
    return lam, [frozenset(_subsets.members(int(m), range(n))) for m in keep]


@dataclass
class LemmaStats:
    instances: int = 0
    with_nontrivial_cut: int = 0
    checks: int = 0
    nonvacuous: dict = field(default_factory=lambda: {1: 0, 2: 0, 3: 0})
    native_phi_nonvacuous: int = 0
    violations: list = field(default_factory=list)

    @property
    def underpowered(self) -> bool:
        return self.nonvacuous[1] < MIN_NONVACUOUS

    @property
    def ok(self) -> bool:
        return not self.violations and not self.underpowered

    def lines(self) -> list[str]:
        nv = self.nonvacuous
        return [
            f"lemma: {self.with_nontrivial_cut}/{self.instances} graphs with a non-trivial min cut, "
            f"{self.checks} (part, cut) checks",
            f"lemma: non-vacuous (1)={nv[1]} (2)={nv[2]} (3)={nv[3]} "
            f"(at phi=40/delta: {self.native_phi_nonvacuous})",
            f"lemma: {len(self.violations)} violations",
        ]


def _smaller(X, C):
    inside = X & C
    outside = X - C
    return inside if len(inside) <= len(outside) else outside


def lemma_checks(graphs, phis=SCALED_PHIS, shave_fn=None, trim_fn=None) -> LemmaStats:
    """Run the three lemma assertions; ``shave_fn``/``trim_fn`` override the
    procedures under test."""
    shave_fn = shave_fn or shave
    trim_fn = trim_fn or trim
    stats = LemmaStats()
    for name, G in graphs:
        if G.n > EXHAUSTIVE_MAX_N or G.n < 4 or not is_connected(G):
            continue
        stats.instances += 1
        lam, cuts = nontrivial_min_cuts(G)
        if not cuts:
            continue
        stats.with_nontrivial_cut += 1
        delta = min(G.deg)
        for phi in (PHI_NUMERATOR / delta,) + tuple(phis):
            native = phi == PHI_NUMERATOR / delta
            partition, _ = expander_decompose(G, phi)
            exact_phi = Fraction(phi)
            bound1 = Fraction(lam) / (exact_phi * delta)
            for X, cert in zip(partition.parts, partition.cert):
                if cert.kind not in ("exhaustive", "singleton"):
                    continue
                X = frozenset(X)
                X1 = frozenset(trim_fn(G, X))
                X2 = frozenset(shave_fn(G, X1))
                for C in cuts:
                    stats.checks += 1
                    where = f"{name} phi={phi:.4g} part={sorted(X)} cut={sorted(C)}"
                    a = _smaller(X, C)
                    if a:
                        stats.nonvacuous[1] += 1
                        stats.native_phi_nonvacuous += native
                    if len(a) > bound1:
                        stats.violations.append(f"(1) {where}: {len(a)} > {float(bound1):.4g}")
                    a1 = _smaller(X1, C)
                    if any(5 * sum(1 for u in G.adj[v] if u in X1) < 2 * G.deg[v] for v in X1):
                        stats.violations.append(f"(2) {where}: trimmed set keeps a low-degree vertex")
                    if a1:
                        stats.nonvacuous[2] += 1
                        vol = sum(G.deg[v] for v in a1)
                        if 5 * lam < 2 * vol - 10 * len(a1) ** 2:
                            stats.violations.append(f"(2) {where}: trim counting bound fails")
                    if bound1 < Fraction(delta, 30) and len(a1) > 2:
                        stats.violations.append(f"(2) {where}: {len(a1)} > 2")
                    if len(a1) <= 2:
                        if a1:
                            stats.nonvacuous[3] += 1
                        if (X2 & C) and (X2 - C):
                            stats.violations.append(f"(3) {where}: shaved set straddles the cut")
    return stats


def run_verify(trials: int = 1000, max_n: int = 60, seed: int = 0, lemma_trials: int = 300):
    """Both sweeps; returns ``(ok, lines)``."""
    graphs = corpus(trials, max_n, seed)
    ostats = oracle_equivalence(graphs)
    small = corpus(lemma_trials, min(max_n, EXHAUSTIVE_MAX_N), seed + 1)
    lstats = lemma_checks(small)
    lines = ostats.lines() + lstats.lines()
    for name, why in ostats.failures[:20]:
        lines.append(f"FAIL {name}: {why}")
    lines.extend(f"FAIL {v}" for v in lstats.violations[:20])
    if lstats.underpowered:
        lines.append(f"FAIL lemma suite under-powered: fewer than {MIN_NONVACUOUS} non-vacuous checks")
    return ostats.ok and lstats.ok, lines
