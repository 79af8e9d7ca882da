"""Seeded generators and named instances for experiment graphs.

Every generator re-verifies its own claims (edge connectivity, minimum
degree) before returning, and is a pure function of its seed, so runs
reproduce exactly.  Enumeration helpers for small labeled graphs live here
too, next to the tree enumeration they mirror.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .connectivity import is_k_edge_connected
from .errors import GenerationError, InternalCheckError
from .graph import Graph, build
from .rng import SplitMix64, derive_seed
from .trees import enumerate_trees

__all__ = [
    "GenSpec",
    "all_connected_graphs",
    "all_graphs",
    "complete",
    "complete_bipartite",
    "cycle_graph",
    "enumerate_trees",
    "gen_hamiltonian_stack",
    "gen_with_hypotheses",
    "generate",
    "named_instance",
    "petersen_graph",
    "random_graph",
    "two_cliques_bridged",
]


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return build(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    return build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build(10, edges)


def two_cliques_bridged(q: int, b: int) -> Graph:
    """Two disjoint complete graphs of order q joined by b parallel bridges.

    Bridge i connects vertex i of the first clique to vertex q+i of the
    second.  For b < q the edge connectivity is min(b, q-1) (the bridge
    cut, or isolating a bridgeless clique vertex); at b = q every vertex
    carries a bridge and the connectivity rises to q.
    """
    if q < 2:
        raise ValueError("cliques need at least two vertices")
    if not 0 <= b <= q:
        raise ValueError("bridge count must be between 0 and q")
    edges = list(itertools.combinations(range(q), 2))
    edges += [(q + i, q + j) for i, j in itertools.combinations(range(q), 2)]
    edges += [(i, q + i) for i in range(b)]
    return build(2 * q, edges)


def named_instance(tag: str) -> Graph:
    """Build a deterministically labeled graph from a textual tag.

    Tags: complete:n, complete_bipartite:a,b, cycle:n, petersen,
    two_cliques_bridged:q,b, tightness:k,m (the complete graph on k+m
    vertices).
    """
    name, _, arg = tag.partition(":")
    try:
        args = [int(x) for x in arg.split(",")] if arg else []
    except ValueError:
        raise ValueError(f"bad parameters in instance tag {tag!r}") from None
    want = {
        "complete": 1,
        "complete_bipartite": 2,
        "cycle": 1,
        "petersen": 0,
        "two_cliques_bridged": 2,
        "tightness": 2,
    }
    if name not in want:
        raise ValueError(f"unknown instance tag {tag!r}")
    if len(args) != want[name]:
        raise ValueError(
            f"instance tag {name!r} takes {want[name]} parameters, got {len(args)}"
        )
    if name == "complete":
        return complete(args[0])
    if name == "complete_bipartite":
        return complete_bipartite(args[0], args[1])
    if name == "cycle":
        return cycle_graph(args[0])
    if name == "petersen":
        return petersen_graph()
    if name == "two_cliques_bridged":
        return two_cliques_bridged(args[0], args[1])
    k, m = args
    if k < 1 or m < 1:
        raise ValueError("tightness parameters must be positive")
    return complete(k + m)


def gen_hamiltonian_stack(
    n: int, t: int, extra_edge_prob: float, seed: int
) -> Graph:
    """Union of t edge-disjoint Hamiltonian cycles plus random extras.

    Every nontrivial cut crosses each cycle at least twice, so the result
    is 2t-edge-connected by construction; that is still re-verified before
    returning.  Extra edges are sampled independently per non-edge.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if t < 1:
        raise ValueError("t must be at least 1")
    if 2 * t >= n:
        raise ValueError(
            f"cannot pack {t} edge-disjoint hamiltonian cycles on {n} vertices"
        )
    if not 0.0 <= extra_edge_prob <= 1.0:
        raise ValueError("extra_edge_prob must be a probability")
    rng = SplitMix64(seed)
    edges: set[tuple[int, int]] = set()
    for placed in range(t):
        success = False
        for _ in range(200):
            order = list(range(n))
            rng.shuffle(order)
            cyc = []
            ok = True
            for i in range(n):
                u, v = order[i], order[(i + 1) % n]
                e = (u, v) if u < v else (v, u)
                if e in edges:
                    ok = False
                    break
                cyc.append(e)
            if ok:
                edges.update(cyc)
                success = True
                break
        if not success:
            raise GenerationError(
                f"could not place cycle {placed + 1} of {t} after 200 tries"
            )
    for e in itertools.combinations(range(n), 2):
        if e not in edges and rng.random() < extra_edge_prob:
            edges.add(e)
    g = build(n, edges)
    if not is_k_edge_connected(g, 2 * t):
        raise InternalCheckError(
            "hamiltonian stack failed its structural connectivity guarantee"
        )
    return g


def _augmented_attempt(n: int, k: int, delta_min: int, seed: int) -> Graph | None:
    t = (k + 1) // 2
    if 2 * t >= n:
        return complete(n)
    try:
        g = gen_hamiltonian_stack(n, t, 0.0, seed)
    except GenerationError:
        return None
    rng = SplitMix64(derive_seed(seed, 1))
    adj = {v: set(g.neighbors(v)) for v in g.vertices()}
    while True:
        v = min(range(n), key=lambda u: (len(adj[u]), u))
        if len(adj[v]) >= delta_min:
            break
        candidates = [w for w in range(n) if w != v and w not in adj[v]]
        if not candidates:
            return None
        w = candidates[rng.randrange(len(candidates))]
        adj[v].add(w)
        adj[w].add(v)
    return build(n, [(u, w) for u in range(n) for w in adj[u] if u < w])


def gen_with_hypotheses(n: int, k: int, delta_min: int, seed: int) -> Graph:
    """Some graph with edge connectivity >= k and minimum degree >= delta_min.

    Builds a Hamiltonian-cycle stack covering the connectivity target, then
    adds random edges at minimum-degree vertices until the degree target
    holds.  The result is verified before returning; a handful of retries
    with derived seeds guards against unlucky cycle packing.  Deterministic
    in (n, k, delta_min, seed); no uniformity over the class is promised.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if delta_min < k:
        raise ValueError("delta_min must be at least k")
    if n <= delta_min:
        raise ValueError(f"n must exceed delta_min={delta_min}")
    for attempt in range(64):
        g = _augmented_attempt(n, k, delta_min, derive_seed(seed, attempt))
        if g is not None and g.min_degree() >= delta_min and is_k_edge_connected(g, k):
            return g
    raise GenerationError(
        f"no graph with connectivity {k} and degree {delta_min} on {n}"
        f" vertices after 64 attempts"
    )


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Plain independent-edge random graph, deterministic in the seed."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be a probability")
    rng = SplitMix64(seed)
    return build(
        n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    )


ENUM_GRAPH_LIMIT = 7


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, in edge-subset order."""
    if not 1 <= n <= ENUM_GRAPH_LIMIT:
        raise ValueError(f"n must be between 1 and {ENUM_GRAPH_LIMIT}")
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield build(n, (pairs[i] for i in range(len(pairs)) if bits >> i & 1))


def all_connected_graphs(n: int) -> Iterator[Graph]:
    for g in all_graphs(n):
        if g.is_connected():
            yield g


@dataclass(frozen=True)
class GenSpec:
    """Generator invocation as plain data, for configs and CLI round-trips.

    `model` is either a generator name ("with_hypotheses",
    "hamiltonian_stack") or a named-instance tag; named instances ignore
    the numeric fields.  `params` holds model-specific extras as sorted
    (key, value) pairs so the spec stays hashable.
    """

    model: str
    n: int = 0
    k: int = 1
    delta_min: int = 0
    seed: int = 0
    params: tuple[tuple[str, float], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(sorted(self.params)))

    def params_dict(self) -> dict:
        return dict(self.params)

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "n": self.n,
            "k": self.k,
            "delta_min": self.delta_min,
            "seed": self.seed,
            "params": self.params_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GenSpec":
        return cls(
            model=data["model"],
            n=int(data.get("n", 0)),
            k=int(data.get("k", 1)),
            delta_min=int(data.get("delta_min", 0)),
            seed=int(data.get("seed", 0)),
            params=tuple(sorted(dict(data.get("params", {})).items())),
        )


def generate(spec: GenSpec) -> Graph:
    """Run the generator a GenSpec describes."""
    if spec.model == "hamiltonian_stack":
        p = spec.params_dict()
        t = int(p.get("t", max(1, (spec.k + 1) // 2)))
        prob = float(p.get("extra_edge_prob", 0.0))
        return gen_hamiltonian_stack(spec.n, t, prob, spec.seed)
    if spec.model == "with_hypotheses":
        return gen_with_hypotheses(spec.n, spec.k, spec.delta_min, spec.seed)
    if spec.model == "gnp":
        p = float(spec.params_dict().get("p", 0.5))
        return random_graph(spec.n, p, spec.seed)
    return named_instance(spec.model)
