"""Fragment calculus for near-critical edge deletions.

Deleting both endpoints of an edge can drop a graph's edge connectivity
below a threshold of interest.  When it does, the sides of the minimum
edge-cuts of the residual graph ("fragments") carry a surprising amount of
structure: fragments coming from two different deleted edges either
intersect in another fragment or force a strict size inequality, and among
all fragments confined to a region there is a well-defined smallest one.
This module builds those objects and checks those facts exhaustively on
small hosts.

Vertex labels inside a Fragment always refer to the ambient graph, not the
reindexed residual graph, so fragments living in different hosts can be
intersected directly with set operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .connectivity import (
    EXHAUSTIVE_LIMIT,
    EdgeCut,
    edge_connectivity_bruteforce,
    enumerate_min_edge_cuts,
    is_k_edge_connected,
)
from .errors import InternalCheckError, TheoremViolation
from .graph import (
    Graph,
    boundary_edge_count,
    build,
    components,
    mask_of,
    normalize_edge,
)


@dataclass(frozen=True)
class Fragment:
    """One side of a minimum edge-cut of `graph` minus `deleted`.

    `side` and `complement` partition the surviving vertices, `cut_edges`
    is exactly the set of host edges between them, and `host_kprime` is the
    edge connectivity of the host (so `len(cut_edges) == host_kprime`).
    All vertices and edges use ambient-graph labels; the reindexed host is
    rebuilt on demand.
    """

    graph: Graph
    deleted: tuple[int, ...]
    side: frozenset[int]
    complement: frozenset[int]
    cut_edges: frozenset[tuple[int, int]]
    host_kprime: int

    def __post_init__(self):
        object.__setattr__(self, "deleted", tuple(sorted(self.deleted)))
        object.__setattr__(self, "side", frozenset(self.side))
        object.__setattr__(self, "complement", frozenset(self.complement))
        object.__setattr__(
            self,
            "cut_edges",
            frozenset(
                (u, v) if u < v else (v, u) for u, v in self.cut_edges
            ),
        )

    @property
    def order(self) -> int:
        return len(self.side)

    def opposite(self) -> Fragment:
        """The complementary fragment to the same cut."""
        return Fragment(
            self.graph,
            self.deleted,
            self.complement,
            self.side,
            self.cut_edges,
            self.host_kprime,
        )

    def host(self) -> Graph:
        return self.graph.delete_vertices(self.deleted)[0]

    def host_and_map(self) -> tuple[Graph, dict[int, int]]:
        return self.graph.delete_vertices(self.deleted)

    def host_cut(self) -> EdgeCut:
        """The defining cut, reindexed into host labels."""
        _, index = self.graph.delete_vertices(self.deleted)
        edges = frozenset(
            (index[u], index[v]) if index[u] < index[v] else (index[v], index[u])
            for u, v in self.cut_edges
        )
        return EdgeCut(
            edges=edges,
            side_a=tuple(sorted(index[v] for v in self.side)),
            side_b=tuple(sorted(index[v] for v in self.complement)),
        )

    def validate(self) -> None:
        """Recheck every structural invariant from scratch.

        Raises ValueError with a specific message on the first failure.
        """
        g = self.graph
        if len(set(self.deleted)) != len(self.deleted):
            raise ValueError("deleted vertices repeat")
        for v in self.deleted:
            if not g.has_vertex(v):
                raise ValueError(f"deleted vertex {v} not in graph")
        if not self.side or not self.complement:
            raise ValueError("side and complement must both be nonempty")
        if self.side & self.complement:
            raise ValueError("side and complement overlap")
        remaining = frozenset(g.vertices()) - set(self.deleted)
        if (self.side | self.complement) != remaining:
            raise ValueError("side and complement must partition the host vertices")
        host, index = g.delete_vertices(self.deleted)
        if host.n > EXHAUSTIVE_LIMIT:
            raise ValueError(
                f"host on {host.n} vertices exceeds the exhaustive limit"
                f" of {EXHAUSTIVE_LIMIT}"
            )
        kprime = edge_connectivity_bruteforce(host)
        if kprime != self.host_kprime:
            raise ValueError(
                f"stored host connectivity {self.host_kprime} is wrong"
                f" (actual {kprime})"
            )
        crossing = set()
        for u in self.side:
            for w in g.neighbors(u):
                if w in self.complement:
                    crossing.add((u, w) if u < w else (w, u))
        if frozenset(crossing) != self.cut_edges:
            raise ValueError("cut_edges is not the side/complement boundary")
        if len(self.cut_edges) != kprime:
            raise ValueError("cut is not a minimum edge-cut of the host")
        if kprime > 0:
            side_mask = mask_of(index[v] for v in self.side)
            comp_mask = mask_of(index[v] for v in self.complement)
            if not host.connected_within(side_mask):
                raise ValueError("side does not induce a connected subgraph")
            if not host.connected_within(comp_mask):
                raise ValueError("complement does not induce a connected subgraph")


@dataclass(frozen=True)
class Semifragment:
    """A union of components left after removing an arbitrary edge set.

    Unlike Fragment, the cut need not be minimum and the host is stored
    directly.  Kept for completeness; nothing downstream depends on it.
    """

    host: Graph
    side: frozenset[int]
    cut_edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "side", frozenset(self.side))
        object.__setattr__(
            self,
            "cut_edges",
            frozenset(
                (u, v) if u < v else (v, u) for u, v in self.cut_edges
            ),
        )

    def validate(self) -> None:
        for u, v in self.cut_edges:
            if not self.host.has_edge(u, v):
                raise ValueError(f"cut edge ({u}, {v}) is not a host edge")
        if not self.side:
            raise ValueError("side must be nonempty")
        stripped = build(
            self.host.n,
            [e for e in self.host.edges() if e not in self.cut_edges],
        )
        union: set[int] = set()
        chosen = 0
        comps = components(stripped)
        for comp in comps:
            if set(comp) & self.side:
                union.update(comp)
                chosen += 1
        if union != self.side:
            raise ValueError("side must be a union of components of host minus cut")
        if chosen == len(comps):
            raise ValueError("side must leave out at least one component")


def _host_fragments(g: Graph, e: tuple[int, int]) -> tuple[int, list[Fragment]]:
    """All fragments of g minus the endpoints of e, plus the host connectivity.

    A disconnected host contributes one fragment per component with an empty
    cut.  A connected host contributes both sides of every minimum edge-cut,
    deduplicated by side and sorted by sorted side.
    """
    host, index = g.delete_vertices(e)
    if host.n > EXHAUSTIVE_LIMIT:
        raise ValueError(
            f"residual graph on {host.n} vertices exceeds the exhaustive"
            f" limit of {EXHAUSTIVE_LIMIT}"
        )
    if host.n < 2:
        raise ValueError("residual graph must keep at least two vertices")
    back = {new: old for old, new in index.items()}
    remaining = frozenset(index)
    out: list[Fragment] = []
    if not host.is_connected():
        for comp in components(host):
            side = frozenset(back[v] for v in comp)
            out.append(Fragment(g, tuple(e), side, remaining - side, frozenset(), 0))
        kprime = 0
    else:
        cuts = enumerate_min_edge_cuts(host)
        kprime = cuts[0].value
        seen: set[frozenset[int]] = set()
        for cut in cuts:
            cut_edges = frozenset(
                (back[u], back[v]) if back[u] < back[v] else (back[v], back[u])
                for u, v in cut.edges
            )
            for half in (cut.side_a, cut.side_b):
                side = frozenset(back[v] for v in half)
                if side in seen:
                    continue
                seen.add(side)
                out.append(
                    Fragment(g, tuple(e), side, remaining - side, cut_edges, kprime)
                )
    out.sort(key=lambda fr: tuple(sorted(fr.side)))
    return kprime, out


def fragments_of(g: Graph, e: tuple[int, int], k: int) -> list[Fragment]:
    """Fragments of g with the endpoints of e deleted, when below threshold k.

    Returns the empty list when the residual edge connectivity is at least
    k.  Otherwise returns every side of every minimum edge-cut of the
    residual graph (both orientations, deduplicated by side, sorted by
    sorted side).  Residual graphs larger than the exhaustive enumeration
    limit are an error.
    """
    e = normalize_edge(g, e)
    if g.n < 4:
        raise ValueError("graph must have at least 4 vertices")
    if k < 1:
        raise ValueError("threshold must be at least 1")
    kprime, frags = _host_fragments(g, e)
    if kprime >= k:
        return []
    return frags


class OverlapVerdict(Enum):
    INTERSECTION_FRAGMENT = "intersection_fragment"
    SMALL_COMPLEMENT = "small_complement"
    HYPOTHESES_UNMET = "hypotheses_unmet"


@dataclass(frozen=True)
class OverlapResult:
    """Outcome of one overlap check.

    For an INTERSECTION_FRAGMENT verdict the boundary counts are filled in:
    `intersection` is side(f) & side(f1), `remainder` below means
    side(f) - side(f1), and `outward` means complement(f) | complement(f1).
    `d_intersection_remainder` and `d_remainder_complement` count ambient
    edges and are equal; `d_intersection_outward` counts edges of the first
    host and equals `host_kprime`.
    """

    verdict: OverlapVerdict
    reason: str | None = None
    intersection: frozenset[int] | None = None
    d_intersection_remainder: int | None = None
    d_remainder_complement: int | None = None
    d_intersection_outward: int | None = None
    host_kprime: int | None = None


def _unmet(reason: str) -> OverlapResult:
    return OverlapResult(OverlapVerdict.HYPOTHESES_UNMET, reason=reason)


def check_fragment_overlap(
    g: Graph,
    e: tuple[int, int],
    e1: tuple[int, int],
    f: Fragment,
    f1: Fragment,
) -> OverlapResult:
    """Check the overlap dichotomy for fragments of two edge deletions.

    `f` must be a fragment of g minus the endpoints of `e`, and `f1` of g
    minus the endpoints of `e1`; anything else is a ValueError.  The
    hypotheses are: the edges share no endpoint, `e` lies inside f1's side,
    `e1` lies inside f's complement, and the two sides intersect.  If any
    fails, the verdict is HYPOTHESES_UNMET with a reason.

    When the hypotheses hold, exactly one of two conclusions must:

    - the complements also intersect, and then side(f) & side(f1) is itself
      a fragment of the first host, with the boundary counts described on
      OverlapResult holding exactly (INTERSECTION_FRAGMENT), or
    - the complements are disjoint, and then f's complement is strictly
      smaller than f1's side (SMALL_COMPLEMENT).

    A failed conclusion raises TheoremViolation.
    """
    e = normalize_edge(g, e)
    e1 = normalize_edge(g, e1)
    f.validate()
    f1.validate()
    if f.graph != g or set(f.deleted) != set(e):
        raise ValueError("f is not a fragment of g minus the endpoints of e")
    if f1.graph != g or set(f1.deleted) != set(e1):
        raise ValueError("f1 is not a fragment of g minus the endpoints of e1")

    if set(e) & set(e1):
        return _unmet("edges share an endpoint")
    if not set(e) <= f1.side:
        return _unmet("first edge does not lie inside the second fragment's side")
    if not set(e1) <= f.complement:
        return _unmet("second edge does not lie inside the first fragment's complement")
    intersection = f.side & f1.side
    if not intersection:
        return _unmet("fragment sides are disjoint")

    payload = {
        "n": g.n,
        "edges": g.edges(),
        "e": e,
        "e1": e1,
        "f_side": tuple(sorted(f.side)),
        "f1_side": tuple(sorted(f1.side)),
    }
    if f.complement & f1.complement:
        _, frags = _host_fragments(g, e)
        if not any(fr.side == intersection for fr in frags):
            raise TheoremViolation(
                "side intersection is not a fragment of the first host", payload
            )
        remainder = f.side - f1.side
        d_a = boundary_edge_count(g, intersection, remainder)
        d_b = boundary_edge_count(g, remainder, f.complement)
        # outward avoids V(e) (e is inside f1.side), so counting in g equals
        # counting in the first host
        outward = f.complement | f1.complement
        d_out = boundary_edge_count(g, intersection, outward)
        if d_a != d_b:
            raise TheoremViolation(
                "boundary counts around the side intersection differ", payload
            )
        if d_out != f.host_kprime:
            raise TheoremViolation(
                "side intersection's host boundary is not a minimum cut", payload
            )
        return OverlapResult(
            OverlapVerdict.INTERSECTION_FRAGMENT,
            intersection=intersection,
            d_intersection_remainder=d_a,
            d_remainder_complement=d_b,
            d_intersection_outward=d_out,
            host_kprime=f.host_kprime,
        )

    if not len(f.complement) < len(f1.side):
        raise TheoremViolation(
            "disjoint complements but f's complement is not smaller than"
            " f1's side",
            payload,
        )
    return OverlapResult(OverlapVerdict.SMALL_COMPLEMENT, intersection=intersection)


@dataclass(frozen=True)
class OverlapScanStats:
    edge_pairs: int
    configurations: int
    intersection_fragment: int
    small_complement: int


def scan_overlap_cases(g: Graph) -> OverlapScanStats:
    """Run the overlap check on every hypothesis-satisfying pair in g.

    Enumerates all ordered pairs of nonadjacent edges and all fragment
    pairs of the two residual graphs, filters to configurations meeting the
    overlap hypotheses, and runs the full check on each.  Any conclusion
    failure surfaces as the checker's TheoremViolation.
    """
    if g.n < 4:
        return OverlapScanStats(0, 0, 0, 0)
    cache = {edge: _host_fragments(g, edge)[1] for edge in g.edges()}
    pairs = 0
    configs = 0
    alpha = 0
    beta = 0
    for e in g.edges():
        for e1 in g.edges():
            if e == e1 or set(e) & set(e1):
                continue
            pairs += 1
            for f in cache[e]:
                if not set(e1) <= f.complement:
                    continue
                for f1 in cache[e1]:
                    if not set(e) <= f1.side:
                        continue
                    if not f.side & f1.side:
                        continue
                    configs += 1
                    res = check_fragment_overlap(g, e, e1, f, f1)
                    if res.verdict is OverlapVerdict.INTERSECTION_FRAGMENT:
                        alpha += 1
                    elif res.verdict is OverlapVerdict.SMALL_COMPLEMENT:
                        beta += 1
                    else:
                        raise InternalCheckError(
                            "pre-filtered configuration reported unmet hypotheses"
                        )
    return OverlapScanStats(pairs, configs, alpha, beta)


@dataclass(frozen=True)
class DescentResult:
    """Smallest fragment confined to a region, with the edge that spawned it."""

    edge: tuple[int, int]
    fragment: Fragment
    region: frozenset[int]


def minimal_fragment_descent(
    g: Graph, k: int, e0: tuple[int, int], f0: Fragment
) -> DescentResult:
    """Find a smallest fragment inside f0's side plus the endpoints of e0.

    The graph must be k-edge-connected with minimum degree at least k+2,
    and deleting e0's endpoints must drop the connectivity below k (f0 is
    one of the resulting fragments).  The search region is side(f0) plus
    both endpoints of e0.  Every edge induced by the region whose endpoint
    deletion is still deficient contributes all fragments whose side stays
    inside the region; the smallest one wins.  Ties break toward the
    lexicographically least sorted side, then the least edge.

    The seed fragment itself belongs to the family, so the result is never
    larger than f0; when f0 is already minimal the descent returns it
    unchanged.
    """
    e0 = normalize_edge(g, e0)
    if k < 1:
        raise ValueError("threshold must be at least 1")
    if not is_k_edge_connected(g, k):
        raise ValueError(f"graph is not {k}-edge-connected")
    if g.min_degree() < k + 2:
        raise ValueError(f"minimum degree must be at least {k + 2}")
    f0.validate()
    if f0.graph != g or set(f0.deleted) != set(e0):
        raise ValueError("f0 is not a fragment of g minus the endpoints of e0")
    if f0.host_kprime >= k:
        raise ValueError(
            "deleting e0's endpoints does not drop the connectivity below"
            f" {k}"
        )

    region = frozenset(f0.side) | set(e0)
    best: tuple | None = None
    for u, v in g.edges():
        if u not in region or v not in region:
            continue
        kprime, frags = _host_fragments(g, (u, v))
        if kprime >= k:
            continue
        for fr in frags:
            if not fr.side <= region:
                continue
            key = (len(fr.side), tuple(sorted(fr.side)), (u, v))
            if best is None or key < best[0]:
                best = (key, (u, v), fr)
    if best is None:
        raise InternalCheckError("seed fragment vanished from its own family")
    return DescentResult(edge=best[1], fragment=best[2], region=region)


@dataclass(frozen=True)
class DescentConclusionReport:
    """Exhaustive audit of the minimal fragment's meeting pattern.

    `split_endpoint_cases` records fragments that contain exactly one
    endpoint of the chosen edge, as (edge, sorted side, meets-minimal)
    triples; the dichotomy does not cover them, so they are reported
    rather than judged.
    """

    edges_checked: int
    fragments_checked: int
    disjoint_confirmed: int
    split_endpoint_cases: tuple[tuple[tuple[int, int], tuple[int, ...], bool], ...]
    min_side_degree: int


def verify_descent_conclusion(
    g: Graph, k: int, result: DescentResult
) -> DescentConclusionReport:
    """Confirm no later fragment avoiding the chosen edge meets the minimal one.

    For every edge inside the minimal fragment's side whose endpoint
    deletion is still deficient, and every fragment of that residual graph:
    if the chosen edge lies in the fragment's complement, the fragment must
    be disjoint from the minimal side (TheoremViolation otherwise); if it
    lies in the fragment's side, the case is out of scope; if the fragment
    splits the chosen edge's endpoints, the case is recorded separately.
    """
    e1 = result.edge
    f1 = result.fragment
    f1.validate()
    edges_checked = 0
    fragments_checked = 0
    disjoint = 0
    splits: list[tuple[tuple[int, int], tuple[int, ...], bool]] = []
    for u, v in g.edges():
        if u not in f1.side or v not in f1.side:
            continue
        kprime, frags = _host_fragments(g, (u, v))
        if kprime >= k:
            continue
        edges_checked += 1
        for fr in frags:
            fragments_checked += 1
            inside = len(set(e1) & fr.side)
            if inside == 2:
                continue
            if inside == 1:
                splits.append(
                    ((u, v), tuple(sorted(fr.side)), bool(fr.side & f1.side))
                )
                continue
            if fr.side & f1.side:
                raise TheoremViolation(
                    "a fragment avoiding the chosen edge still meets the"
                    " minimal fragment",
                    {
                        "n": g.n,
                        "edges": g.edges(),
                        "chosen_edge": e1,
                        "minimal_side": tuple(sorted(f1.side)),
                        "offending_edge": (u, v),
                        "offending_side": tuple(sorted(fr.side)),
                    },
                )
            disjoint += 1
    sub, _ = g.induced_subgraph(f1.side)
    return DescentConclusionReport(
        edges_checked=edges_checked,
        fragments_checked=fragments_checked,
        disjoint_confirmed=disjoint,
        split_endpoint_cases=tuple(splits),
        min_side_degree=sub.min_degree(),
    )


@dataclass(frozen=True)
class DegreeBoundRow:
    vertex: int
    cross_neighbors: int
    inside_neighbors: int
    cross_bound: int
    cross_ok: bool
    inside_bound_applies: bool
    inside_ok: bool


@dataclass(frozen=True)
class FragmentDegreeReport:
    edge: tuple[int, int]
    side_order: int
    rows: tuple[DegreeBoundRow, ...]
    all_hold: bool


def fragment_degree_bounds(
    g: Graph, e1: tuple[int, int], f1: Fragment, k: int
) -> FragmentDegreeReport:
    """Per-vertex neighbor counts across a fragment's cut, with lower bounds.

    Requires minimum degree at least k+2 in the ambient graph.  Each vertex
    of the side has at most two neighbors among the deleted endpoints and
    at most |side|-1 inside, so it must have at least k - |side| + 1
    neighbors in the complement; a vertex with no complement neighbors must
    have at least k inside.  Both checks are reported per vertex.
    """
    e1 = normalize_edge(g, e1)
    f1.validate()
    if f1.graph != g or set(f1.deleted) != set(e1):
        raise ValueError("f1 is not a fragment of g minus the endpoints of e1")
    if g.min_degree() < k + 2:
        raise ValueError(f"minimum degree must be at least {k + 2}")
    order = len(f1.side)
    rows = []
    for z in sorted(f1.side):
        cross = sum(1 for w in g.neighbors(z) if w in f1.complement)
        inside = sum(1 for w in g.neighbors(z) if w in f1.side)
        applies = cross == 0
        rows.append(
            DegreeBoundRow(
                vertex=z,
                cross_neighbors=cross,
                inside_neighbors=inside,
                cross_bound=k - order + 1,
                cross_ok=cross >= k - order + 1,
                inside_bound_applies=applies,
                inside_ok=inside >= k if applies else True,
            )
        )
    return FragmentDegreeReport(
        edge=e1,
        side_order=order,
        rows=tuple(rows),
        all_hold=all(r.cross_ok and r.inside_ok for r in rows),
    )
