"""Max-flow connectivity against the exhaustive bipartition oracle."""

import pytest

from kedge.connectivity import (
    EXHAUSTIVE_LIMIT,
    connectivity_report,
    edge_connectivity,
    edge_connectivity_bruteforce,
    enumerate_min_edge_cuts,
    is_k_connected,
    is_k_edge_connected,
    local_edge_connectivity,
    vertex_connectivity,
    vertex_cut_below,
)
from kedge.generators import (
    complete,
    complete_bipartite,
    cycle_graph,
    petersen_graph,
    two_cliques_bridged,
)
from kedge.graph import Graph, build

from conftest import path_graph, seeded_random_graphs


def test_known_edge_connectivity_values():
    cases = [
        (complete(5), 4),
        (complete_bipartite(3, 4), 3),
        (cycle_graph(6), 2),
        (petersen_graph(), 3),
        (path_graph(5), 1),
        (two_cliques_bridged(5, 2), 2),
        (build(4, []), 0),
        (build(4, [(0, 1), (2, 3)]), 0),
    ]
    for g, want in cases:
        kprime, cut = edge_connectivity(g)
        assert kprime == want
        cut.validate(g)
        assert cut.value == want


def test_cut_sides_partition():
    g = two_cliques_bridged(4, 1)
    kprime, cut = edge_connectivity(g)
    assert kprime == 1
    assert sorted(cut.side_a + cut.side_b) == list(range(g.n))
    assert cut.edges == {(0, 4)}


def test_local_edge_connectivity():
    g = two_cliques_bridged(4, 2)
    assert local_edge_connectivity(g, 0, 7) == 2
    # 0 and 1 each carry a bridge, giving a fourth path through the far clique
    assert local_edge_connectivity(g, 0, 1) == 4
    assert local_edge_connectivity(g, 2, 3) == 3
    with pytest.raises(ValueError):
        local_edge_connectivity(g, 0, 0)


def test_is_k_edge_connected_conventions():
    assert is_k_edge_connected(Graph(1), 1)
    assert not is_k_edge_connected(Graph(1), 2)
    assert not is_k_edge_connected(Graph(0), 1)
    assert is_k_edge_connected(complete(4), 3)
    assert not is_k_edge_connected(complete(4), 4)
    with pytest.raises(ValueError):
        is_k_edge_connected(path_graph(3), 0)


def test_bruteforce_matches_flow_on_small_graphs():
    for g in seeded_random_graphs(60, 2, 9, seed=31):
        want, _ = edge_connectivity(g)
        assert edge_connectivity_bruteforce(g) == want
    with pytest.raises(ValueError):
        edge_connectivity_bruteforce(complete(2), max_vertices=1)


def test_enumerate_min_edge_cuts_c4():
    cuts = enumerate_min_edge_cuts(cycle_graph(4))
    # 4 singleton splits plus the 2 opposite-pair splits
    assert len(cuts) == 6
    assert all(c.value == 2 for c in cuts)
    assert all(0 in c.side_a for c in cuts)
    sides = [c.side_a for c in cuts]
    assert sides == sorted(sides)


def test_enumerate_min_edge_cuts_bridge():
    cuts = enumerate_min_edge_cuts(two_cliques_bridged(3, 1))
    assert len(cuts) == 1
    assert cuts[0].edges == {(0, 3)}


def test_vertex_connectivity_values():
    assert vertex_connectivity(complete(5)) == 4
    assert vertex_connectivity(petersen_graph()) == 3
    assert vertex_connectivity(cycle_graph(7)) == 2
    assert vertex_connectivity(path_graph(4)) == 1
    assert vertex_connectivity(build(3, [(0, 1)])) == 0


def test_vertex_cut_below():
    g = two_cliques_bridged(4, 1)
    cut = vertex_cut_below(g, 2)
    assert cut is not None and len(cut) == 1
    h, _ = g.delete_vertices(cut)
    assert not h.is_connected()
    assert vertex_cut_below(complete(4), 4) is None
    assert vertex_cut_below(build(4, [(0, 1), (2, 3)]), 1) == ()


def test_is_k_connected():
    assert is_k_connected(petersen_graph(), 3)
    assert not is_k_connected(petersen_graph(), 4)
    assert is_k_connected(Graph(1), 1)
    assert not is_k_connected(Graph(1), 2)


def test_vertex_le_edge_le_min_degree():
    """Whitney's inequality chain on random samples."""
    for g in seeded_random_graphs(40, 2, 10, seed=77):
        if not g.is_connected():
            continue
        kappa = vertex_connectivity(g)
        kprime, _ = edge_connectivity(g)
        assert kappa <= kprime <= g.min_degree()


def test_connectivity_report():
    rep = connectivity_report(petersen_graph())
    assert (rep.n, rep.edge_count, rep.min_degree) == (10, 15, 3)
    assert rep.edge_connectivity == 3 and rep.vertex_connectivity == 3
    assert rep.to_dict()["edge_connectivity"] == 3
    single = connectivity_report(Graph(1))
    assert single.edge_connectivity is None and single.vertex_connectivity is None


def test_exhaustive_limit_is_enforced():
    big = complete(EXHAUSTIVE_LIMIT + 1)
    with pytest.raises(ValueError):
        enumerate_min_edge_cuts(big)
