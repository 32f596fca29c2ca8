import itertools

import pytest
from hypothesis import given, settings

from conftest import brute_cut, brute_min_cut, complete, simple_graphs, two_k5_three_edges
from mincut.decomp import expander_decompose
from mincut.errors import GraphTooSmall, OverlappingFamily
from mincut.generators import clique_pair, cycle, gnp
from mincut.graph import VertexSet, build_simple_graph
from mincut.oracle import OracleChoice, stoer_wagner
from mincut.pipeline import CutResult, contract, edge_connectivity, verify_cut
from mincut.trimshave import shave, trim

REPORT_KEYS = {"n", "m", "delta", "phi", "decomposition", "trimmed_vertices", "shaved_vertices",
               "contracted_n", "contracted_m", "lambda_prime", "answer", "timings_ms"}


def test_contract_examples():
    G = two_k5_three_edges()
    H = contract(G, [range(5), range(5, 10)])
    assert (H.n, H.m) == (2, 3)
    assert list(H.edges()) == [(0, 1, 3)]
    assert H.origin_map == (0,) * 5 + (1,) * 5


def test_contract_singletons_and_gaps():
    G = cycle(6)
    H = contract(G, [{2, 3}, set()])
    assert H.n == 5
    assert H.origin_map == (0, 1, 2, 2, 3, 4)
    assert sorted(H.edges()) == [(0, 1, 1), (0, 4, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1)]


def test_contract_overlap():
    with pytest.raises(OverlappingFamily):
        contract(complete(4), [{0, 1}, {1, 2}])


@settings(max_examples=60, deadline=None)
@given(simple_graphs(min_n=3, max_n=9))
def test_contract_never_lowers_connectivity(G):
    family = [set(range(0, G.n, 2))]
    H = contract(G, family)
    if H.n >= 2:
        assert brute_min_cut(H) >= brute_min_cut(G)
    # every cut of H lifts to a cut of G of the same size
    for r in range(1, H.n):
        for side in itertools.combinations(range(H.n), r):
            lifted = [v for v in range(G.n) if H.origin_map[v] in side]
            assert brute_cut(G, lifted) == brute_cut(H, side)


def test_verify_cut_examples():
    K4 = complete(4)
    assert verify_cut(K4, CutResult(3, VertexSet({0})))
    assert not verify_cut(K4, CutResult(2, VertexSet({0})))
    assert not verify_cut(K4, CutResult(0, VertexSet(range(4))))
    C8 = cycle(8)
    assert not verify_cut(C8, CutResult(2, VertexSet({0, 2, 4, 6})))
    with pytest.raises(ValueError):
        verify_cut(C8, CutResult(2))


def test_small_examples():
    assert edge_connectivity(cycle(8))[0].lam == 2
    assert edge_connectivity(complete(10))[0].lam == 9
    cut, _ = edge_connectivity(two_k5_three_edges())
    assert cut.lam == 3 and brute_cut(two_k5_three_edges(), cut.side) == 3


def test_too_small():
    with pytest.raises(GraphTooSmall):
        edge_connectivity(build_simple_graph([], n=1))


def test_disconnected():
    G = build_simple_graph([(0, 1), (2, 3), (3, 4)])
    cut, report = edge_connectivity(G)
    assert cut.lam == 0 and cut.side == {0, 1}
    data = report.to_json()
    assert data["phi"] is None and data["decomposition"] is None and data["answer"] == 0


@pytest.mark.parametrize("t", [0, 1, 5, 10, 20])
def test_clique_pair_planted_cut(t):
    # q = 100 puts phi = 40/99 below the conductance of K_100
    G = clique_pair(100, t)
    cut, report = edge_connectivity(G)
    assert cut.lam == t
    if t:
        assert cut.side in (set(range(100)), set(range(100, 200)))
        assert report.contracted_n == 2 and report.contracted_m == t
    assert verify_cut(G, cut)


@pytest.mark.parametrize("q,t", [(60, 59), (60, 60), (45, 45)])
def test_clique_pair_trivial_cut_wins(q, t):
    # here phi exceeds the conductance of K_q, so every part is a singleton
    G = clique_pair(q, t)
    cut, report = edge_connectivity(G)
    assert cut.lam == report.answer == min(report.delta, t)
    assert verify_cut(G, cut)


@settings(max_examples=80, deadline=None)
@given(simple_graphs(min_n=2, max_n=10))
def test_matches_brute_force(G):
    cut, report = edge_connectivity(G)
    assert cut.lam == brute_min_cut(G)
    assert verify_cut(G, cut)
    assert set(report.to_json()) == REPORT_KEYS


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("which", list(OracleChoice)[:2])
def test_dense_graphs_match_stoer_wagner(seed, which):
    # min degree above 40, so the decomposition is not trivial
    G = gnp(70, 0.85, seed=seed)
    cut, report = edge_connectivity(G, which)
    assert report.phi < 1
    assert cut.lam == stoer_wagner(G)[0]
    assert report.contracted_n <= G.n and report.contracted_m <= G.m


def test_spectral_only_path_matches():
    G = clique_pair(100, 7)
    cut, report = edge_connectivity(G, exhaustive_limit=0)
    assert cut.lam == 7
    assert report.contracted_n == 2


def test_report_invariants():
    G = gnp(70, 0.8, seed=1)
    _, report = edge_connectivity(G)
    data = report.to_json()
    assert set(data) == REPORT_KEYS
    assert data["answer"] == min(data["lambda_prime"], data["delta"])
    assert data["phi"] == pytest.approx(40 / data["delta"])
    assert set(data["decomposition"]["part_sizes"]) <= {str(k) for k in range(1, G.n + 1)}
    assert sum(int(k) * v for k, v in data["decomposition"]["part_sizes"].items()) == G.n


def test_contract_identity_and_triangle():
    G = two_k5_three_edges()
    H = contract(G, [])
    assert H.n == G.n and sorted(H.edges()) == [(u, v, 1) for u, v in G.edges()]
    H = contract(complete(3), [{0, 1}])
    assert list(H.edges()) == [(0, 1, 2)]


def test_verify_cut_consecutive():
    assert verify_cut(cycle(8), CutResult(2, VertexSet({3, 4, 5})))


@pytest.mark.parametrize("seed", range(10))
def test_produced_contractions_keep_connectivity(seed):
    G = gnp(20 + 2 * seed, 0.35, seed=seed)
    lam = stoer_wagner(G)[0]
    for phi in (0.05, 0.1, 0.3):
        partition, _ = expander_decompose(G, phi)
        H = contract(G, [shave(G, trim(G, X)) for X in partition.parts])
        if H.n >= 2:
            assert stoer_wagner(H)[0] >= lam
