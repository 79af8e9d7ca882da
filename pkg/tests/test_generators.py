import pytest

from kedge.connectivity import edge_connectivity, is_k_edge_connected
from kedge.errors import GenerationError
from kedge.generators import (
    ENUM_GRAPH_LIMIT,
    GenSpec,
    all_connected_graphs,
    all_graphs,
    complete,
    complete_bipartite,
    cycle_graph,
    enumerate_trees,
    gen_hamiltonian_stack,
    gen_with_hypotheses,
    generate,
    named_instance,
    petersen_graph,
    random_graph,
    two_cliques_bridged,
)
from kedge.io import write_edge_list


def test_fixed_instances():
    assert complete(5).edge_count == 10
    assert complete_bipartite(3, 4).edge_count == 12
    assert cycle_graph(6).degrees() == (2,) * 6
    pet = petersen_graph()
    assert pet.n == 10 and pet.degrees() == (3,) * 10
    assert edge_connectivity(pet)[0] == 3
    g = two_cliques_bridged(5, 2)
    assert edge_connectivity(g)[0] == 2 and g.min_degree() == 4
    assert edge_connectivity(two_cliques_bridged(5, 5))[0] == 5  # every vertex bridged
    assert edge_connectivity(two_cliques_bridged(6, 5))[0] == 5  # q-1 binds


def test_named_instance_tags():
    assert named_instance("complete:5") == complete(5)
    assert named_instance("complete_bipartite:3,4") == complete_bipartite(3, 4)
    assert named_instance("cycle:6") == cycle_graph(6)
    assert named_instance("petersen") == petersen_graph()
    assert named_instance("two_cliques_bridged:5,2") == two_cliques_bridged(5, 2)
    assert named_instance("tightness:2,3") == complete(5)
    for bad in ("petersen:3", "complete", "complete:a", "unknown:1"):
        with pytest.raises(ValueError):
            named_instance(bad)


def test_hamiltonian_stack():
    g = gen_hamiltonian_stack(9, 2, 0.0, seed=4)
    assert g.n == 9 and g.edge_count == 18
    assert is_k_edge_connected(g, 4)
    # extra edges only add connectivity
    h = gen_hamiltonian_stack(9, 2, 0.5, seed=4)
    assert h.edge_count >= g.edge_count
    assert is_k_edge_connected(h, 4)


def test_hamiltonian_stack_determinism():
    a = gen_hamiltonian_stack(12, 3, 0.3, seed=9)
    b = gen_hamiltonian_stack(12, 3, 0.3, seed=9)
    c = gen_hamiltonian_stack(12, 3, 0.3, seed=10)
    assert write_edge_list(a) == write_edge_list(b)
    assert write_edge_list(a) != write_edge_list(c)


def test_hamiltonian_stack_preconditions():
    with pytest.raises(ValueError):
        gen_hamiltonian_stack(2, 1, 0.0, 0)
    with pytest.raises(ValueError):
        gen_hamiltonian_stack(8, 0, 0.0, 0)
    with pytest.raises(ValueError):
        gen_hamiltonian_stack(8, 4, 0.0, 0)  # 2t must stay below n
    with pytest.raises(ValueError):
        gen_hamiltonian_stack(8, 2, 1.5, 0)


def test_gen_with_hypotheses():
    g = gen_with_hypotheses(10, 2, 4, seed=7)
    assert g.n == 10
    assert g.min_degree() >= 4
    assert is_k_edge_connected(g, 2)
    # infeasible stack sizes fall back to the complete graph
    assert gen_with_hypotheses(5, 4, 4, seed=1) == complete(5)


def test_gen_with_hypotheses_determinism():
    a = gen_with_hypotheses(12, 3, 5, seed=100)
    b = gen_with_hypotheses(12, 3, 5, seed=100)
    assert write_edge_list(a) == write_edge_list(b)
    assert write_edge_list(a) != write_edge_list(gen_with_hypotheses(12, 3, 5, 101))


def test_gen_with_hypotheses_preconditions():
    with pytest.raises(ValueError):
        gen_with_hypotheses(10, 0, 4, 0)
    with pytest.raises(ValueError):
        gen_with_hypotheses(10, 3, 2, 0)  # delta below k
    with pytest.raises(ValueError):
        gen_with_hypotheses(4, 1, 4, 0)  # n must exceed delta


def test_random_graph():
    a = random_graph(10, 0.5, seed=3)
    assert write_edge_list(a) == write_edge_list(random_graph(10, 0.5, 3))
    assert random_graph(6, 0.0, 1).edge_count == 0
    assert random_graph(6, 1.0, 1) == complete(6)
    with pytest.raises(ValueError):
        random_graph(5, -0.1, 0)


def test_genspec_round_trip_and_dispatch():
    spec = GenSpec(model="with_hypotheses", n=10, k=2, delta_min=4, seed=7)
    assert GenSpec.from_dict(spec.to_dict()) == spec
    assert generate(spec) == gen_with_hypotheses(10, 2, 4, 7)
    stack = GenSpec(
        model="hamiltonian_stack", n=9, k=4, seed=4, params=(("t", 2.0),)
    )
    assert generate(stack) == gen_hamiltonian_stack(9, 2, 0.0, 4)
    gnp = GenSpec(model="gnp", n=10, seed=3, params=(("p", 0.4),))
    assert generate(gnp) == random_graph(10, 0.4, 3)
    assert generate(GenSpec(model="petersen")) == petersen_graph()
    with pytest.raises(ValueError):
        generate(GenSpec(model="no_such_model", n=5))


def test_graph_enumeration():
    assert sum(1 for _ in all_graphs(3)) == 8
    assert sum(1 for _ in all_connected_graphs(3)) == 4
    assert sum(1 for _ in all_connected_graphs(4)) == 38
    with pytest.raises(ValueError):
        next(all_graphs(ENUM_GRAPH_LIMIT + 1))


def test_enumerate_trees_reexport():
    assert [t.order for t in enumerate_trees(4)] == [4, 4]
