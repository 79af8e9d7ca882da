"""Tree shapes: parsing, canonical forms, and exhaustive enumeration.

A tree on m vertices is stored as a parent array: vertex 0 is the root and
every vertex i > 0 hangs off parents[i] < i.  The textual grammar accepts
named families (path, star, spider, caterpillar), raw Pruefer sequences, and
edge-list files.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphFormatError
from .graph import Graph
from . import io as graph_io


@dataclass(frozen=True)
class TreeSpec:
    """A tree given by its parent array; parents[0] is -1 by convention."""

    parents: tuple[int, ...]
    name: str | None = None

    def __post_init__(self):
        p = self.parents
        if not p or p[0] != -1:
            raise ValueError("parent array must start with -1 for the root")
        for i in range(1, len(p)):
            if not 0 <= p[i] < i:
                raise ValueError(f"parents[{i}]={p[i]} must lie in [0, {i})")

    @property
    def order(self) -> int:
        return len(self.parents)

    def edges(self) -> list[tuple[int, int]]:
        return [(self.parents[i], i) for i in range(1, self.order)]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges():
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency()]

    def to_graph(self) -> Graph:
        return Graph(self.order, self.edges())

    def canonical_code(self):
        """Isomorphism invariant: minimum rooted encoding over all roots."""
        return canonical_code(self.adjacency())

    def spec_string(self) -> str:
        """A grammar string that parses back to this tree's shape."""
        if self.name:
            return self.name
        if self.order == 1:
            return "path:1"
        seq = prufer_encode(self)
        if not seq:
            return "path:2"
        return "prufer:" + ",".join(str(x) for x in seq)


def _rooted_code(adj: list[list[int]], root: int):
    """Nested-tuple encoding of the tree rooted at `root`.

    Children codes are sorted, so isomorphic rooted trees encode equally.
    Iterative post-order; the trees here are small but recursion limits are
    not worth depending on.
    """
    order: list[tuple[int, int]] = []
    stack = [(root, -1)]
    while stack:
        v, parent = stack.pop()
        order.append((v, parent))
        for w in adj[v]:
            if w != parent:
                stack.append((w, v))
    codes: dict[int, tuple] = {}
    for v, parent in reversed(order):
        kids = sorted(codes[w] for w in adj[v] if w != parent)
        codes[v] = tuple(kids)
    return codes[root]


def canonical_code(adj: list[list[int]]):
    return min(_rooted_code(adj, r) for r in range(len(adj)))


def path_tree(m: int) -> TreeSpec:
    if m < 1:
        raise ValueError(f"path order must be positive, got {m}")
    return TreeSpec((-1,) + tuple(range(m - 1)), name=f"path:{m}")


def star_tree(m: int) -> TreeSpec:
    if m < 1:
        raise ValueError(f"star order must be positive, got {m}")
    return TreeSpec((-1,) + (0,) * (m - 1), name=f"star:{m}")


def spider_tree(legs: list[int]) -> TreeSpec:
    if not legs or any(l < 1 for l in legs):
        raise ValueError("spider legs must be positive lengths")
    parents = [-1]
    for leg in legs:
        attach = 0
        for _ in range(leg):
            parents.append(attach)
            attach = len(parents) - 1
    name = "spider:" + ",".join(str(l) for l in legs)
    return TreeSpec(tuple(parents), name=name)


def caterpillar_tree(leaf_counts: list[int]) -> TreeSpec:
    if not leaf_counts or any(c < 0 for c in leaf_counts):
        raise ValueError("caterpillar needs nonnegative leaf counts, one per spine vertex")
    parents = [-1] + list(range(len(leaf_counts) - 1))
    for spine, count in enumerate(leaf_counts):
        parents.extend([spine] * count)
    name = "caterpillar:" + ",".join(str(c) for c in leaf_counts)
    return TreeSpec(tuple(parents), name=name)


def prufer_decode(seq: list[int]) -> TreeSpec:
    """Tree for a Pruefer sequence over labels 0..m-1, m = len(seq)+2."""
    m = len(seq) + 2
    if any(not 0 <= x < m for x in seq):
        raise ValueError(f"sequence entries must lie in [0, {m}) for order {m}")
    degree = [1] * m
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq

    leaves = [v for v in range(m) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return tree_from_graph(Graph(m, edges))


def prufer_encode(tree: TreeSpec) -> list[int]:
    """Pruefer sequence of the tree under its own labeling."""
    m = tree.order
    if m < 2:
        raise ValueError("encoding needs at least two vertices")
    import heapq

    adj = [set(a) for a in tree.adjacency()]
    degree = [len(a) for a in adj]
    leaves = [v for v in range(m) if degree[v] == 1]
    heapq.heapify(leaves)
    out = []
    for _ in range(m - 2):
        leaf = heapq.heappop(leaves)
        neighbor = next(iter(adj[leaf]))
        out.append(neighbor)
        adj[neighbor].discard(leaf)
        adj[leaf].clear()
        degree[neighbor] -= 1
        if degree[neighbor] == 1:
            heapq.heappush(leaves, neighbor)
    return out


def tree_from_graph(g: Graph, name: str | None = None) -> TreeSpec:
    """Relabel a tree-shaped graph into parent-array form.

    Labels are assiged in breadth-first order from vertex 0, neighbors
    ascending, so the result is deterministic.
    """
    if g.n == 0:
        raise ValueError("a tree has at least one vertex")
    if g.edge_count != g.n - 1 or not g.is_connected():
        raise ValueError(f"not a tree: n={g.n}, m={g.edge_count}")
    relabel = {0: 0}
    parents = [-1] * g.n
    queue = [0]
    for u in queue:
        for w in g.neighbors(u):
            if w not in relabel:
                relabel[w] = len(relabel)
                parents[relabel[w]] = relabel[u]
                queue.append(w)
    return TreeSpec(tuple(parents), name=name)


def parse_tree_spec(text: str) -> TreeSpec:
    """Parse the tree grammar.

    Accepted forms: "path:m", "star:m", "spider:l1,...,lr",
    "caterpillar:s1,...,sp", "prufer:a1,...,a_{m-2}", "file:<path>".
    """
    text = text.strip()
    if ":" not in text:
        raise ValueError(f"tree spec needs a 'kind:args' form, got {text!r}")
    kind, _, args = text.partition(":")
    kind = kind.strip().lower()
    if kind == "file":
        g = graph_io.load_graph(args.strip())
        return tree_from_graph(g, name=None)

    def ints(what: str) -> list[int]:
        try:
            return [int(x) for x in args.split(",")] if args else []
        except ValueError:
            raise ValueError(f"{what} arguments must be integers, got {args!r}") from None

    if kind == "path":
        vals = ints("path")
        if len(vals) != 1:
            raise ValueError(f"path takes one order argument, got {args!r}")
        return path_tree(vals[0])
    if kind == "star":
        vals = ints("star")
        if len(vals) != 1:
            raise ValueError(f"star takes one order argument, got {args!r}")
        return star_tree(vals[0])
    if kind == "spider":
        return spider_tree(ints("spider"))
    if kind == "caterpillar":
        return caterpillar_tree(ints("caterpillar"))
    if kind == "prufer":
        return prufer_decode(ints("prufer"))
    raise ValueError(f"unknown tree kind {kind!r}")


ENUMERATION_LIMIT = 10

# free trees by order, a classical sequence
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106)


def enumerate_trees(m: int) -> list[TreeSpec]:
    """Every isomorphism class of trees on m vertices, 1 <= m <= 10.

    Grown by leaf extension with canonical-form deduplication; the list is
    sorted by canonical code so the order is stable across runs.
    """
    if not 1 <= m <= ENUMERATION_LIMIT:
        raise ValueError(f"tree enumeration supports 1..{ENUMERATION_LIMIT}, got {m}")
    level: dict[tuple, TreeSpec] = {
        path_tree(1).canonical_code(): TreeSpec((-1,))
    }
    for size in range(2, m + 1):
        grown: dict[tuple, TreeSpec] = {}
        for tree in level.values():
            for attach in range(tree.order):
                bigger = TreeSpec(tree.parents + (attach,))
                code = bigger.canonical_code()
                if code not in grown:
                    grown[code] = bigger
        level = grown
    out = sorted(level.values(), key=lambda t: t.canonical_code())
    if len(out) != FREE_TREE_COUNTS[m - 1]:
        raise AssertionError(
            f"enumeration found {len(out)} trees of order {m}, "
            f"expected {FREE_TREE_COUNTS[m - 1]}"
        )
    return out
