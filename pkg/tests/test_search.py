import itertools
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sparsehg.core import Hypergraph, HypergraphError
from sparsehg.families import f14, linear_three_cycle
from sparsehg.search import (
    count_copies,
    find_configuration,
    find_configuration_unpruned,
    verify_embedding,
)

import oracles


def complete_3graph(n):
    verts = [f"k{i}" for i in range(n)]
    return Hypergraph(3, verts, list(itertools.combinations(verts, 3)))


@settings(max_examples=80, deadline=None)
@given(
    st.integers(min_value=0, max_value=99_999),
    st.integers(min_value=0, max_value=10),
    st.integers(min_value=0, max_value=4),
)
def test_pruned_matches_unpruned(seed, v, e):
    vertices, edges = oracles.random_3graph(seed, max_n=8, max_m=8)
    g = Hypergraph(3, vertices, edges)
    a = find_configuration(g, v, e)
    b = find_configuration_unpruned(g, v, e)
    assert a.found == b.found
    assert a.witness == b.witness


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=0, max_value=99_999),
    st.integers(min_value=0, max_value=10),
    st.integers(min_value=0, max_value=4),
)
def test_search_matches_naive(seed, v, e):
    vertices, edges = oracles.random_3graph(seed, max_n=8, max_m=8)
    g = Hypergraph(3, vertices, edges)
    found, witness = oracles.find_configuration(list(g.edges), v, e)
    result = find_configuration(g, v, e)
    assert result.found == found
    if found:
        span, picked = result.witness
        assert picked == witness
        assert len(span) <= v


def test_zero_edge_target_always_found():
    g = Hypergraph(3, ["a", "b", "c"], [])
    result = find_configuration(g, 0, 0)
    assert result.found and result.witness == ((), ())


def test_more_edges_than_graph_has():
    g = Hypergraph(3, ["a", "b", "c"], [("a", "b", "c")])
    assert not find_configuration(g, 10, 2).found


def test_witness_is_lex_first():
    verts = [f"v{i}" for i in range(6)]
    g = Hypergraph(
        3,
        verts,
        [("v0", "v1", "v2"), ("v0", "v1", "v3"), ("v0", "v2", "v3"), ("v3", "v4", "v5")],
    )
    result = find_configuration(g, 4, 2)
    assert result.found
    span, picked = result.witness
    assert span == ("v0", "v1", "v2", "v3")
    assert picked == (("v0", "v1", "v2"), ("v0", "v1", "v3"))


@pytest.mark.parametrize("workers", [1, 2, 5])
def test_worker_invariance(workers):
    g = f14().graph
    for v, e in [(6, 3), (8, 4), (5, 3)]:
        serial = find_configuration(g, v, e)
        parallel = find_configuration(g, v, e, workers=workers)
        assert serial.found == parallel.found
        assert serial.witness == parallel.witness


def test_guard_rejects_oversized_inputs():
    verts = [f"v{i}" for i in range(25)]
    edges = list(itertools.combinations(verts, 3))[:70]
    g = Hypergraph(3, verts, edges)
    with pytest.raises(HypergraphError):
        find_configuration(g, 6, 3)


def test_guard_allows_either_small_side():
    # many vertices but few edges is fine; many edges but few vertices too
    verts = [f"v{i}" for i in range(30)]
    g = Hypergraph(3, verts, [("v0", "v1", "v2")])
    assert find_configuration(g, 3, 1).found
    k8 = complete_3graph(8)
    assert k8.edge_count == 56
    assert find_configuration(k8, 4, 3).found


def test_cycle_copies_in_complete_hosts():
    cycle = linear_three_cycle().graph
    in_k6 = count_copies(complete_3graph(6), cycle)
    assert in_k6.copies == 120
    assert in_k6.embeddings == 720
    in_k7 = count_copies(complete_3graph(7), cycle)
    assert in_k7.copies == 840


def test_single_edge_counts_closed_form():
    pattern = Hypergraph(3, ["a", "b", "c"], [("a", "b", "c")])
    k7 = complete_3graph(7)
    result = count_copies(k7, pattern)
    assert result.copies == 35  # C(7,3)
    assert result.embeddings == 35 * 6


def test_empty_pattern_counts():
    pattern = Hypergraph(3, ["a", "b"], [])
    host = complete_3graph(4)
    result = count_copies(host, pattern)
    assert result.embeddings == 12  # ordered pairs of 4 vertices
    assert result.copies == 1  # a single empty edge image


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=9_999))
def test_embedding_count_matches_naive(seed):
    host_vertices, host_edges = oracles.random_3graph(seed, max_n=7, max_m=7)
    pat_vertices, pat_edges = oracles.random_3graph(seed + 1, max_n=4, max_m=2)
    host = Hypergraph(3, host_vertices, host_edges)
    pattern = Hypergraph(3, pat_vertices, pat_edges)
    naive = oracles.count_embeddings(host_vertices, host.edges, pat_vertices, pattern.edges)
    assert count_copies(host, pattern).embeddings == naive


def test_induced_counts_filter():
    # one edge on 3 vertices: induced copies exclude triples covered twice
    host = Hypergraph(
        3, ["a", "b", "c", "d"], [("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d")]
    )
    pattern = Hypergraph(3, ["p", "q", "r", "s"], [("p", "q", "r")])
    plain = count_copies(host, pattern)
    induced = count_copies(host, pattern, induced=True)
    assert plain.copies > induced.copies


def test_verify_embedding_accepts_subcopy_maps():
    cfg = f14()
    cycle = linear_three_cycle().graph
    for vmap in cfg.subcopies.values():
        assert verify_embedding(cfg.graph, cycle, vmap)


def test_verify_embedding_rejects_bad_maps():
    cfg = f14()
    cycle = linear_three_cycle().graph
    good = dict(cfg.subcopies["V_1"])
    collapsed = dict(good)
    collapsed["v1"] = collapsed["v2"]
    assert not verify_embedding(cfg.graph, cycle, collapsed)
    wrong = dict(good)
    wrong["v5"], wrong["v6"] = wrong["v6"], wrong["v5"]
    # swapping the two degree-2 vertices breaks at least one edge image
    assert not verify_embedding(cfg.graph, cycle, wrong)


def test_verify_embedding_error_paths():
    cycle = linear_three_cycle().graph
    host = f14().graph
    with pytest.raises(HypergraphError, match="map"):
        verify_embedding(host, cycle, {"v1": "w1"})
    bad_target = {f"v{i}": lbl for i, lbl in enumerate(
        ["w1", "w2", "w3", "w4", "w5missing", "x5"], start=1)}
    with pytest.raises(HypergraphError):
        verify_embedding(host, cycle, bad_target)


def test_uniformity_mismatch_rejected():
    host = Hypergraph(4, ["a", "b", "c", "d"], [("a", "b", "c", "d")])
    pattern = Hypergraph(3, ["a", "b", "c"], [("a", "b", "c")])
    with pytest.raises(HypergraphError, match="uniformity"):
        count_copies(host, pattern)


def test_nodes_explored_reported():
    g = f14().graph
    result = find_configuration(g, 3, 2)  # impossible: two edges span >= 4
    assert not result.found
    assert result.nodes_explored > 0
