"""Tree specs, Pruefer codes, and free-tree enumeration.

The enumeration oracle here is independent of the package's own canonical
form: it builds each tree's adjacency and compares center-rooted encodings
computed locally.
"""

import pytest

from kedge.graph import build
from kedge.trees import (
    ENUMERATION_LIMIT,
    FREE_TREE_COUNTS,
    TreeSpec,
    caterpillar_tree,
    enumerate_trees,
    parse_tree_spec,
    path_tree,
    prufer_decode,
    prufer_encode,
    spider_tree,
    star_tree,
    tree_from_graph,
)


def _local_center_code(tree: TreeSpec):
    """Canonical form via tree centers, written independently of the package.

    Leaves are stripped round by round; the 1 or 2 survivors are the centers.
    The code is the sorted tuple of rooted encodings from each center.
    """
    adj = {v: set(ns) for v, ns in enumerate(tree.adjacency())}
    alive = set(adj)
    while len(alive) > 2:
        leaves = [v for v in alive if len(adj[v] & alive) == 1]
        alive -= set(leaves)
    centers = sorted(alive)

    def encode(v, parent):
        subs = sorted(encode(w, v) for w in adj[v] if w != parent)
        return "(" + "".join(subs) + ")"

    return tuple(sorted(encode(c, None) for c in centers))


def test_tree_spec_basics():
    t = path_tree(4)
    assert t.order == 4
    assert t.edges() == [(0, 1), (1, 2), (2, 3)]
    assert t.degrees() == [1, 2, 2, 1]
    g = t.to_graph()
    assert g.n == 4 and g.edge_count == 3


def test_tree_spec_validation():
    with pytest.raises(ValueError):
        TreeSpec(parents=(0,))  # root must be marked with -1
    with pytest.raises(ValueError):
        TreeSpec(parents=(-1, 2))  # parent must precede child
    with pytest.raises(ValueError):
        TreeSpec(parents=())


def test_star_and_spider_and_caterpillar():
    s = star_tree(5)
    assert sorted(s.degrees()) == [1, 1, 1, 1, 4]
    sp = spider_tree([2, 2, 1])
    assert sp.order == 6
    assert max(sp.degrees()) == 3
    cat = caterpillar_tree([2, 0, 1])
    assert cat.order == 6
    spine_degrees = cat.degrees()[:3]
    assert spine_degrees == [3, 2, 2]


def test_prufer_round_trip_up_to_iso():
    """decode relabels into parent-array form, so round trips preserve the
    shape rather than the literal sequence."""
    for seq in ([], [0], [3, 3], [1, 2, 3], [0, 0, 0, 0]):
        t = prufer_decode(seq)
        assert t.order == len(seq) + 2
        back = prufer_decode(prufer_encode(t))
        assert _local_center_code(back) == _local_center_code(t)


def test_prufer_encode_known():
    # the path 0-1-2-3 has code [1, 2]
    assert prufer_encode(path_tree(4)) == [1, 2]
    # the star with center 0 has code [0, 0, ...]
    assert prufer_encode(star_tree(5)) == [0, 0, 0]


def test_tree_from_graph():
    g = build(4, [(1, 3), (0, 3), (2, 0)])
    t = tree_from_graph(g)
    assert t.order == 4
    assert _local_center_code(t) == _local_center_code(path_tree(4))
    with pytest.raises(ValueError):
        tree_from_graph(build(3, [(0, 1), (1, 2), (0, 2)]))
    with pytest.raises(ValueError):
        tree_from_graph(build(3, [(0, 1)]))


def test_parse_tree_spec_grammar():
    assert parse_tree_spec("path:3").order == 3
    assert parse_tree_spec("star:4").order == 4
    assert parse_tree_spec("spider:2,2").order == 5
    assert parse_tree_spec("caterpillar:1,1").order == 4
    assert parse_tree_spec("prufer:1,2").order == 4
    for bad in ("path:0", "nope:3", "prufer:x", "path:", "spider:"):
        with pytest.raises(ValueError):
            parse_tree_spec(bad)


def test_parse_tree_spec_file(tmp_path):
    p = tmp_path / "t.txt"
    p.write_text("4 3\n0 1\n1 2\n2 3\n")
    t = parse_tree_spec(f"file:{p}")
    assert t.order == 4


def test_spec_string_round_trips():
    for m in range(1, 8):
        for t in enumerate_trees(m):
            back = parse_tree_spec(t.spec_string())
            assert _local_center_code(back) == _local_center_code(t)


def test_enumeration_counts_match_oeis():
    for m, want in enumerate(FREE_TREE_COUNTS, start=1):
        if m > 8:
            break
        assert len(enumerate_trees(m)) == want


def test_enumeration_is_duplicate_free_and_complete():
    """Independent check at order 7: decode all Pruefer sequences, bucket by
    the local center code, and compare against the enumerated family."""
    m = 7
    seen = set()
    for code_int in range(m ** (m - 2)):
        seq, x = [], code_int
        for _ in range(m - 2):
            seq.append(x % m)
            x //= m
        seen.add(_local_center_code(prufer_decode(seq)))
    family = [_local_center_code(t) for t in enumerate_trees(m)]
    assert len(family) == len(set(family)) == len(seen)
    assert set(family) == seen


def test_enumeration_limit():
    with pytest.raises(ValueError):
        enumerate_trees(ENUMERATION_LIMIT + 1)
    with pytest.raises(ValueError):
        enumerate_trees(0)
