"""Immutable simple undirected graphs on vertex set 0..n-1."""

from __future__ import annotations

from typing import Iterable, Iterator


def _bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A finite simple undirected graph.

    Vertices are the integers 0..n-1.  Instances are immutable: derived
    graphs (induced subgraphs, deletions) are new objects.  Adjacency is kept
    both as sorted tuples and as per-vertex bitmasks; the masks make the
    exhaustive bipartition scans elsewhere in the package cheap.
    """

    __slots__ = ("_n", "_adj", "_masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} not allowed")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._n = n
        self._masks = tuple(masks)
        self._adj = tuple(tuple(_bits(m)) for m in masks)
        self._edges = tuple((u, v) for u in range(n) for v in self._adj[u] if u < v)

    @property
    def n(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        return self._masks[v]

    def adjacency_masks(self) -> tuple[int, ...]:
        return self._masks

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def min_degree(self) -> int:
        if self._n == 0:
            raise ValueError("min_degree of the empty graph is undefined")
        return min(len(a) for a in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1) if 0 <= v < self._n else False

    def has_vertex(self, v: int) -> bool:
        return 0 <= v < self._n

    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def induced_subgraph(self, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Subgraph induced on `keep`, plus the old->new index map.

        New labels follow the sorted order of `keep`.
        """
        kept = sorted(set(keep))
        for v in kept:
            if not 0 <= v < self._n:
                raise ValueError(f"vertex {v} out of range for n={self._n}")
        index = {old: new for new, old in enumerate(kept)}
        edges = [
            (index[u], index[v])
            for u, v in self._edges
            if u in index and v in index
        ]
        return Graph(len(kept), edges), index

    def delete_vertices(
        self, remove: Iterable[int], allow_empty: bool = False
    ) -> tuple[Graph, dict[int, int]]:
        """Graph minus a vertex set, plus the old->new index map."""
        gone = set(remove)
        for v in gone:
            if not 0 <= v < self._n:
                raise ValueError(f"vertex {v} out of range for n={self._n}")
        if len(gone) == self._n and not allow_empty:
            raise ValueError("deleting every vertex needs allow_empty=True")
        return self.induced_subgraph(v for v in range(self._n) if v not in gone)

    def connected_within(self, mask: int) -> bool:
        """Is the subgraph induced on the mask's vertices connected?

        The empty set counts as disconnected, a singleton as connected.
        """
        if mask == 0:
            return False
        start = mask & -mask
        reached = start
        frontier = start
        masks = self._masks
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= masks[v]
            nxt &= mask & ~reached
            reached |= nxt
            frontier = nxt
        return reached == mask

    def is_connected(self) -> bool:
        if self._n == 0:
            return False
        return self.connected_within(self.full_mask())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self._n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={len(self._edges)})"


def build(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Validating constructor; duplicate edges collapse silently."""
    return Graph(n, edges)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = 0
    out: list[list[int]] = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.neighbor_mask(u)
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def component_masks(g: Graph) -> list[int]:
    """Same partition as components(), but as bitmasks."""
    return [mask_of(c) for c in components(g)]


def normalize_edge(g: Graph, e: tuple[int, int]) -> tuple[int, int]:
    """Return e as a sorted pair after checking it is an edge of g."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of the graph")
    return (u, v) if u < v else (v, u)


def boundary_edge_count(g: Graph, first: Iterable[int], second: Iterable[int]) -> int:
    """Number of edges with one endpoint in each set.

    The sets must be disjoint; counting within overlapping sets is ambiguous,
    so that is an error rather than a guess.
    """
    a = mask_of(first)
    b = mask_of(second)
    if a & b:
        raise ValueError("boundary_edge_count needs disjoint vertex sets")
    full = g.full_mask()
    if (a | b) & ~full:
        raise ValueError("vertex out of range")
    total = 0
    for v in _bits(a):
        total += (g.neighbor_mask(v) & b).bit_count()
    return total
