import itertools
import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_conductances, complete, path, simple_graphs, star, two_triangles_bridge
from mincut.decomp import (augment_with_loop_weights, certify_exhaustive, certify_spectral,
                           crossing_edges, expander_decompose, fiedler_sweep, fiedler_vector)
from mincut.errors import ConvergenceFailure, InvalidPhi, TooLarge
from mincut.generators import clique_pair, gnp
from mincut.graph import LoopedGraph, build_simple_graph, components


def strong_guarantee_holds(G, X, phi):
    phi = Fraction(phi)
    return all(cut >= phi * small for _, cut, small in brute_conductances(G, X))


# loop weights

def test_loop_weights_full_set(k5):
    H = augment_with_loop_weights(k5, range(5))
    assert set(H.loop_weight.values()) == {0}


def test_loop_weights_k5_pair(k5):
    H = augment_with_loop_weights(k5, {0, 1})
    assert H.loop_weight == {0: 3, 1: 3}
    assert H.degree[0] == 4


def test_loop_weights_star():
    G = star(5)
    H = augment_with_loop_weights(G, {0, 1})
    assert H.loop_weight == {0: 4, 1: 0}


@given(simple_graphs(max_n=9), st.data())
def test_looped_view_preserves_volumes_and_cuts(G, data):
    X = data.draw(st.sets(st.integers(0, G.n - 1), min_size=1))
    H = augment_with_loop_weights(G, X)
    for v in X:
        assert H.degree[v] == G.deg[v]
    A = data.draw(st.sets(st.sampled_from(sorted(X))))
    B = set(X) - A
    inner = sum(1 for v in A for u in H.inner[v] if u in B)
    assert inner == sum(1 for v in A for u in G.adj[v] if u in B)


# sweep

def test_sweep_single_edge():
    G = build_simple_graph([(0, 1)])
    assert fiedler_sweep(LoopedGraph(G, [0, 1]), 0.9) is None


def test_sweep_two_triangles():
    G = two_triangles_bridge()
    side, cond = fiedler_sweep(LoopedGraph(G, range(6)), 0.5)
    assert side in ({0, 1, 2}, {3, 4, 5})
    assert cond == pytest.approx(1 / 7)


def test_sweep_k4():
    G = complete(4)
    # every proper subset of K_4 has conductance >= 2/3
    assert min(cut / small for _, cut, small in brute_conductances(G, range(4))) == pytest.approx(2 / 3)
    assert fiedler_sweep(LoopedGraph(G, range(4)), 0.1) is None


def test_power_iteration_matches_dense():
    G = path(10)
    H = LoopedGraph(G, range(10))
    _, lam, residual = fiedler_vector(H)
    # normalized Laplacian of P_10 computed directly
    A = np.zeros((10, 10))
    for u, v in G.edges():
        A[u, v] = A[v, u] = 1
    d = A.sum(1)
    L = np.eye(10) - A / np.sqrt(np.outer(d, d))
    assert lam == pytest.approx(np.linalg.eigvalsh(L)[1], abs=1e-6)
    assert residual < 1e-8


def test_power_iteration_cap():
    G = path(40)
    with pytest.raises(ConvergenceFailure):
        fiedler_vector(LoopedGraph(G, range(40)), max_iters=3)


# certificates

def test_certify_exhaustive_examples():
    G = build_simple_graph([(0, 1), (2, 3), (1, 2)])
    assert certify_exhaustive(G, {0}, 0.5)
    lone = build_simple_graph([(0, 1)])
    assert certify_exhaustive(lone, {0, 1}, 0.9)
    assert not certify_exhaustive(G, {0, 2}, 0.01)
    with pytest.raises(TooLarge):
        certify_exhaustive(complete(20), range(20), 0.1)


@settings(max_examples=80, deadline=None)
@given(simple_graphs(max_n=8), st.data(), st.sampled_from([0.05, 0.2, 1 / 3, 0.5]))
def test_certify_exhaustive_matches_brute_force(G, data, phi):
    X = data.draw(st.sets(st.integers(0, G.n - 1), min_size=1))
    assert certify_exhaustive(G, X, phi) == strong_guarantee_holds(G, X, phi)


def test_certify_spectral_complete_graph():
    G = complete(100)
    cert = certify_spectral(LoopedGraph(G, range(100)), 0.404)
    assert cert.kind == "spectral"
    assert cert.lambda2 == pytest.approx(100 / 99, abs=1e-9)


def test_certify_spectral_path():
    cert = certify_spectral(LoopedGraph(path(10), range(10)), 0.4)
    assert cert.kind == "uncertified"
    assert cert.lambda2 / 2 < 0.05


def test_certify_spectral_phi_zero():
    assert certify_spectral(LoopedGraph(path(10), range(10)), 0).kind == "spectral"


@settings(max_examples=40, deadline=None)
@given(simple_graphs(min_n=3, max_n=8))
def test_spectral_certificate_is_sound(G):
    for comp in components(G):
        if len(comp) < 2:
            continue
        H = augment_with_loop_weights(G, comp)
        cert = certify_spectral(H, 1e-9)
        bound = (cert.lambda2 - cert.residual) / 2
        worst = min(cut / small for _, cut, small in brute_conductances(G, comp))
        assert worst >= bound - 1e-12


# decomposition

def test_phi_zero_gives_components():
    G = build_simple_graph([(0, 1), (1, 2), (3, 4)], n=6)
    partition, report = expander_decompose(G, 0)
    assert partition.canonical() == [[0, 1, 2], [3, 4], [5]]
    assert report.crossing_edges == 0


@pytest.mark.parametrize("phi", [1, 1.5, 40 / 3])
def test_large_phi_gives_singletons(phi):
    G = complete(6)
    partition, report = expander_decompose(G, phi)
    assert partition.canonical() == [[v] for v in range(6)]
    assert report.crossing_edges == 2 * G.m


@pytest.mark.parametrize("phi", [-0.1, float("nan"), float("inf")])
def test_invalid_phi(phi):
    with pytest.raises(InvalidPhi):
        expander_decompose(complete(3), phi)


def test_planted_clique_pair():
    G = clique_pair(100, 10)
    partition, report = expander_decompose(G, 40 / 99)
    assert partition.canonical() == [list(range(100)), list(range(100, 200))]
    assert report.crossing_edges == 20
    assert [c.kind for c in partition.cert] == ["spectral", "spectral"]


@pytest.mark.parametrize("phi", [0.1, 0.3, 0.5])
@pytest.mark.parametrize("seed", range(12))
def test_strong_guarantee_small_graphs(phi, seed):
    n = 6 + seed % 9
    G = gnp(n, 0.45, seed=seed)
    partition, report = expander_decompose(G, phi)
    assert sorted(v for p in partition.parts for v in p) == list(range(n))
    for X, cert in zip(partition.parts, partition.cert):
        assert cert.kind in ("exhaustive", "singleton")
        assert strong_guarantee_holds(G, X, phi)
    assert report.crossing_edges == crossing_edges(G, partition)
    recount = sum(1 for u, v in G.edges() if partition.part_of[u] != partition.part_of[v])
    assert report.crossing_edges == 2 * recount


def test_deterministic_serialization():
    G = gnp(40, 0.3, seed=3)
    first = expander_decompose(G, 0.2)
    second = expander_decompose(G, 0.2)
    dump = lambda r: json.dumps([r[0].canonical(), [c.to_json() for c in r[0].cert], r[1].to_json()])
    assert dump(first) == dump(second)


def test_forced_fallback():
    # dense random graph: the Cheeger bound sits below phi although no sweep
    # cut gets under it, so the only safe answer is singletons
    G = gnp(40, 0.5, seed=11)
    partition, report = expander_decompose(G, 0.4, exhaustive_limit=0)
    assert report.fallback_count > 0
    assert all(len(p) == 1 for p in partition.parts)
    assert all(c.kind == "singleton" for c in partition.cert)


def test_large_part_spectral_path_is_sound():
    G = gnp(30, 0.5, seed=5)
    partition, _ = expander_decompose(G, 0.15, exhaustive_limit=0)
    for X, cert in zip(partition.parts, partition.cert):
        assert cert.kind in ("spectral", "singleton")
        if cert.kind == "spectral":
            assert (cert.lambda2 - cert.residual) / 2 >= 0.15
        if len(X) <= 14:
            assert strong_guarantee_holds(G, X, 0.15)


def test_disconnected_components_never_merge():
    G = build_simple_graph(list(itertools.combinations(range(5), 2)) +
                           list(itertools.combinations(range(5, 10), 2)))
    partition, _ = expander_decompose(G, 0.3)
    for X in partition.parts:
        assert X <= set(range(5)) or X <= set(range(5, 10))
