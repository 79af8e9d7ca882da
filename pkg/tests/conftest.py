from kedge.graph import Graph
from kedge.rng import SplitMix64, derive_seed


def seeded_random_graphs(count: int, n_lo: int, n_hi: int, seed: int, p: float = 0.5):
    """Deterministic stream of G(n, p) samples for property-style tests."""
    from kedge.generators import random_graph

    rng = SplitMix64(seed)
    out = []
    for i in range(count):
        n = n_lo + rng.randrange(n_hi - n_lo + 1)
        out.append(random_graph(n, p, derive_seed(seed, i)))
    return out


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])
