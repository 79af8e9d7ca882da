"""Exact edge and vertex connectivity, minimum cuts, and an independent oracle.

Edge connectivity is computed as the minimum over sinks t != 0 of the local
edge connectivity from the fixed root 0, each local value by unit-capacity
max-flow (Dinic).  Correctness is pinned by edge_connectivity_bruteforce,
which scans every bipartition; the two routes are compared exhaustively in
the test suite and must never be merged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, _bits, boundary_edge_count, components, mask_of

EXHAUSTIVE_LIMIT = 16
_INF = float("inf")


class _FlowNet:
    """Arc-paired flow network; arc a's reverse is a^1."""

    __slots__ = ("n", "adj", "to", "cap", "base")

    def __init__(self, n: int):
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.base: list[int] | None = None

    def add(self, u: int, v: int, cap: int, rcap: int = 0) -> None:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(rcap)

    def freeze(self) -> None:
        self.base = self.cap.copy()

    def reset(self) -> None:
        self.cap = self.base.copy()

    def max_flow(self, s: int, t: int, limit: float = _INF) -> int:
        adj, to, cap = self.adj, self.to, self.cap
        flow = 0
        while flow < limit:
            level = [-1] * self.n
            level[s] = 0
            queue = [s]
            for u in queue:
                lu = level[u] + 1
                for a in adj[u]:
                    v = to[a]
                    if cap[a] > 0 and level[v] < 0:
                        level[v] = lu
                        queue.append(v)
            if level[t] < 0:
                break
            it = [0] * self.n
            while flow < limit:
                path: list[int] = []
                u = s
                found = False
                while True:
                    if u == t:
                        found = True
                        break
                    if it[u] < len(adj[u]):
                        a = adj[u][it[u]]
                        if cap[a] > 0 and level[to[a]] == level[u] + 1:
                            path.append(a)
                            u = to[a]
                        else:
                            it[u] += 1
                    elif u == s:
                        break
                    else:
                        a = path.pop()
                        u = to[a ^ 1]
                        it[u] += 1
                if not found:
                    break
                aug = min(cap[a] for a in path)
                if flow + aug > limit:
                    aug = int(limit - flow)
                for a in path:
                    cap[a] -= aug
                    cap[a ^ 1] += aug
                flow += aug
        return flow

    def residual_reachable(self, s: int) -> int:
        """Bitmask of nodes reachable from s along positive residual arcs."""
        adj, to, cap = self.adj, self.to, self.cap
        seen = 1 << s
        queue = [s]
        for u in queue:
            for a in adj[u]:
                v = to[a]
                if cap[a] > 0 and not seen >> v & 1:
                    seen |= 1 << v
                    queue.append(v)
        return seen


def _edge_net(g: Graph) -> _FlowNet:
    net = _FlowNet(g.n)
    for u, v in g.edges():
        net.add(u, v, 1, 1)
    net.freeze()
    return net


def _vertex_net(g: Graph) -> _FlowNet:
    # node 2v is "entry", 2v+1 is "exit"; internal arc carries capacity 1
    net = _FlowNet(2 * g.n)
    big = g.n
    for v in range(g.n):
        net.add(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        net.add(2 * u + 1, 2 * v, big)
        net.add(2 * v + 1, 2 * u, big)
    net.freeze()
    return net


@dataclass(frozen=True)
class EdgeCut:
    """A bipartition (side_a, side_b) and the edges crossing it."""

    edges: frozenset[tuple[int, int]]
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    @property
    def value(self) -> int:
        return len(self.edges)

    def validate(self, g: Graph) -> None:
        a, b = set(self.side_a), set(self.side_b)
        if a & b or a | b != set(range(g.n)) or not a or not b:
            raise ValueError("cut sides must partition the vertex set, both nonempty")
        crossing = {
            (u, v) if u < v else (v, u)
            for u, v in g.edges()
            if (u in a) != (v in a)
        }
        if crossing != set(self.edges):
            raise ValueError("cut edge set does not match the bipartition boundary")
        survivors = [(u, v) for u, v in g.edges() if (u, v) not in self.edges]
        rest = Graph(g.n, survivors)
        for comp in components(rest):
            if a & set(comp) and b & set(comp):
                raise ValueError("removing the cut edges does not separate the sides")


def _cut_from_side(g: Graph, side_mask: int) -> EdgeCut:
    other = g.full_mask() & ~side_mask
    crossing = frozenset(
        (u, v) for u, v in g.edges() if (side_mask >> u & 1) != (side_mask >> v & 1)
    )
    return EdgeCut(crossing, tuple(_bits(side_mask)), tuple(_bits(other)))


def local_edge_connectivity(g: Graph, s: int, t: int, cap: float = _INF) -> int:
    """Maximum number of pairwise edge-disjoint s-t paths."""
    if s == t:
        raise ValueError("endpoints must differ")
    if not (g.has_vertex(s) and g.has_vertex(t)):
        raise ValueError("endpoint out of range")
    net = _edge_net(g)
    return net.max_flow(s, t, cap)


def edge_connectivity(g: Graph) -> tuple[int, EdgeCut]:
    """Edge connectivity and one minimum cut achieving it.

    Disconnected graphs report value 0 with an empty edge set; side_a is the
    component containing vertex 0.  The returned cut is deterministic: root 0,
    first sink achieving the minimum, then the residual-reachable side.
    """
    if g.n < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    if not g.is_connected():
        comp = next(c for c in components(g) if 0 in c)
        rest = tuple(sorted(set(range(g.n)) - set(comp)))
        return 0, EdgeCut(frozenset(), tuple(comp), rest)
    net = _edge_net(g)
    # min degree is an upper bound, so flows are capped at best+1: values at
    # or below the cap come back exact, which is all the scan needs
    best = g.min_degree()
    best_t = None
    for t in range(1, g.n):
        net.reset()
        f = net.max_flow(0, t, best + 1)
        if f < best or (f == best and best_t is None):
            best = f
            best_t = t
    if best_t is None:
        raise AssertionError("no sink achieved the minimum; flow routine is broken")
    net.reset()
    net.max_flow(0, best_t, best)
    side = net.residual_reachable(0) & g.full_mask()
    return best, _cut_from_side(g, side)


def is_k_edge_connected(g: Graph, k: int) -> bool:
    """Decision version with capped flows.

    Convention: the single-vertex graph is 1-edge-connected and nothing more.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if g.n == 0:
        return False
    if g.n == 1:
        return k == 1
    if g.min_degree() < k:
        return False
    if not g.is_connected():
        return False
    if k == 1:
        return True
    net = _edge_net(g)
    for t in range(1, g.n):
        net.reset()
        if net.max_flow(0, t, k) < k:
            return False
    return True


def edge_connectivity_bruteforce(g: Graph, max_vertices: int = 20) -> int:
    """Independent oracle: minimum boundary over all 2^(n-1)-1 bipartitions.

    Deliberately ignorant of flows; used to pin down the max-flow route.
    """
    n = g.n
    if n < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    if n > max_vertices:
        raise ValueError(f"bruteforce oracle capped at n={max_vertices}, got {n}")
    masks = g.adjacency_masks()
    full = (1 << n) - 1
    best = n * n
    for half in range(1 << (n - 1)):
        side = half << 1 | 1  # always contains vertex 0
        if side == full:
            continue
        other = full & ~side
        count = 0
        for v in _bits(side):
            count += (masks[v] & other).bit_count()
            if count >= best:
                break
        if count < best:
            best = count
    # the loop above skips exactly the full set; bipartitions with side not
    # containing 0 are mirrors of ones it does visit
    return best


def enumerate_min_edge_cuts(g: Graph, max_vertices: int = EXHAUSTIVE_LIMIT) -> list[EdgeCut]:
    """All minimum edge cuts, exhaustively.

    Every bipartition with both sides connected and boundary equal to the
    edge connectivity, each listed once with vertex 0 in side_a, ordered by
    side_a as a sorted tuple.
    """
    n = g.n
    if n < 2:
        raise ValueError("cut enumeration needs at least two vertices")
    if n > max_vertices:
        raise ValueError(
            f"cut enumeration is exhaustive and capped at n={max_vertices}, got {n}"
        )
    if not g.is_connected():
        raise ValueError("cut enumeration expects a connected graph")
    masks = g.adjacency_masks()
    full = (1 << n) - 1
    value = edge_connectivity_bruteforce(g, max_vertices)
    sides = []
    for half in range(1 << (n - 1)):
        side = half << 1 | 1
        if side == full:
            continue
        other = full & ~side
        count = 0
        for v in _bits(side):
            count += (masks[v] & other).bit_count()
            if count > value:
                break
        if count != value:
            continue
        if g.connected_within(side) and g.connected_within(other):
            sides.append(side)
    sides.sort(key=lambda m: tuple(_bits(m)))
    return [_cut_from_side(g, side) for side in sides]


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertices whose removal disconnects or trivializes the graph."""
    n = g.n
    if n == 0:
        raise ValueError("vertex connectivity of the empty graph is undefined")
    if n == 1:
        return 0
    if not g.is_connected():
        return 0
    if g.edge_count == n * (n - 1) // 2:
        return n - 1
    net = _vertex_net(g)
    best = min(g.min_degree(), n - 2)
    i = 0
    while i <= best:
        s = i
        non_neighbors = [
            t for t in range(n) if t != s and not g.has_edge(s, t)
        ]
        for t in non_neighbors:
            net.reset()
            f = net.max_flow(2 * s + 1, 2 * t, best + 1)
            if f < best:
                best = f
        i += 1
    return best


def vertex_cut_below(g: Graph, k: int) -> tuple[int, ...] | None:
    """A vertex cut of size < k if one exists, else None.

    For a disconnected graph the empty cut qualifies.  Complete graphs have
    no cut at all, so the answer there is None whenever n >= 2.
    """
    n = g.n
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if n <= 1:
        return None
    if not g.is_connected():
        return ()
    if g.edge_count == n * (n - 1) // 2:
        return None
    if k > n - 1:
        # kappa <= n-2 for any non-complete graph: the non-neighbors of any
        # vertex pair witness it; fall through and let the flow find one
        k = n - 1
    net = _vertex_net(g)
    for s in range(min(k, n)):
        for t in range(n):
            if t == s or g.has_edge(s, t):
                continue
            net.reset()
            f = net.max_flow(2 * s + 1, 2 * t, k)
            if f < k:
                reach = net.residual_reachable(2 * s + 1)
                cut = tuple(
                    v for v in range(n)
                    if reach >> (2 * v) & 1 and not reach >> (2 * v + 1) & 1
                )
                return cut
    return None


def is_k_connected(g: Graph, k: int) -> bool:
    """Vertex-connectivity decision, mirroring the edge convention for K1."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if g.n == 0:
        return False
    if g.n == 1:
        return k == 1
    if k > g.n - 1:
        return False
    if g.edge_count == g.n * (g.n - 1) // 2:
        return True
    cut = vertex_cut_below(g, k)
    return cut is None


@dataclass(frozen=True)
class ConnectivityReport:
    """Summary numbers for one graph; None marks the single-vertex convention."""

    n: int
    edge_count: int
    min_degree: int
    edge_connectivity: int | None
    vertex_connectivity: int | None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edge_count": self.edge_count,
            "min_degree": self.min_degree,
            "edge_connectivity": self.edge_connectivity,
            "vertex_connectivity": self.vertex_connectivity,
        }


def connectivity_report(g: Graph) -> ConnectivityReport:
    if g.n == 0:
        raise ValueError("no report for the empty graph")
    if g.n == 1:
        return ConnectivityReport(1, 0, 0, None, None)
    kprime, _ = edge_connectivity(g)
    kappa = vertex_connectivity(g)
    return ConnectivityReport(g.n, g.edge_count, g.min_degree(), kprime, kappa)
