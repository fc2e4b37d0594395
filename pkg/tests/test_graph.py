import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import to_nx
from twocore.graph import (
    INF,
    Graph,
    GraphFormatError,
    bfs_distances,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    dump_edge_list,
    induced_subgraph,
    load_edge_list,
    path_graph,
)


@st.composite
def graphs(draw, max_n=25):
    n = draw(st.integers(0, max_n))
    if n == 0:
        return Graph.empty(0)
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3 * n))
    return Graph.from_edges(n, pairs)


def test_load_path():
    g = load_edge_list(b"0 1\n1 2")
    assert (g.n, g.m) == (3, 2)
    assert g == path_graph(3)


def test_load_drops_duplicate_and_loop():
    g = load_edge_list(b"0 1\n0 1\n0 0")
    assert (g.n, g.m) == (2, 1)
    assert g.dropped_duplicates == 1 and g.dropped_loops == 1


def test_load_empty():
    g = load_edge_list(b"")
    assert (g.n, g.m) == (0, 0)


def test_load_header_and_comments():
    g = load_edge_list("# comment\nn 5\n0 1\n\n3 4\n")
    assert g.n == 5 and g.m == 2


@pytest.mark.parametrize("text,line", [("0 1\n1 x\n", 2), ("0 1 2\n", 1), ("n 2\n0 5\n", None)])
def test_load_malformed(text, line):
    with pytest.raises(GraphFormatError) as exc:
        load_edge_list(text)
    if line is not None:
        assert f"line {line}" in str(exc.value)


def test_load_id_overflow():
    with pytest.raises(OverflowError):
        load_edge_list(f"0 {2**31}\n")


@given(graphs())
def test_dump_load_roundtrip(g):
    assert load_edge_list(dump_edge_list(g)) == g


@given(graphs())
def test_simple_graph_invariants(g):
    g.check()
    assert g.degree().sum() == 2 * g.m
    adj = [set(x) for x in g.adjacency_lists()]
    for u in range(g.n):
        for w in adj[u]:
            assert u in adj[w]


def test_graph_is_immutable():
    g = cycle_graph(5)
    with pytest.raises(ValueError):
        g.indices[0] = 3


def test_from_edges_rejects_out_of_range():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_components_cycle():
    cc = connected_components(cycle_graph(6))
    assert cc.count == 1 and cc.sizes == {0: 6}


def test_components_tie_break():
    g = disjoint_union([cycle_graph(3), cycle_graph(3)])
    cc = connected_components(g)
    assert sorted(cc.sizes.values()) == [3, 3]
    assert cc.largest_id == cc.label[0]


def test_components_edgeless():
    cc = connected_components(Graph.empty(5))
    assert cc.count == 5 and all(s == 1 for s in cc.sizes.values())


@given(graphs())
def test_components_match_networkx(g):
    cc = connected_components(g)
    assert sum(cc.sizes.values()) == g.n
    ref = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    ours = sorted(sorted(cc.members(c).tolist()) for c in cc.sizes)
    assert ours == ref
    if g.n:
        big = max(cc.sizes.values())
        assert cc.sizes[cc.largest_id] == big
        assert cc.largest_id == min(c for c, s in cc.sizes.items() if s == big)


def test_bfs_path():
    assert bfs_distances(path_graph(5), [0]).tolist() == [0, 1, 2, 3, 4]


def test_bfs_cycle():
    assert bfs_distances(cycle_graph(6), [0]).tolist() == [0, 1, 2, 3, 2, 1]


def test_bfs_unreachable():
    g = disjoint_union([path_graph(3), path_graph(2)])
    d = bfs_distances(g, [0])
    assert d[:3].tolist() == [0, 1, 2]
    assert (d[3:] == INF).all()


def test_bfs_empty_sources():
    with pytest.raises(ValueError):
        bfs_distances(path_graph(3), [])


@given(graphs(), st.data())
def test_bfs_matches_networkx(g, data):
    if g.n == 0:
        return
    srcs = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=3))
    d = bfs_distances(g, srcs)
    ref = nx.multi_source_dijkstra_path_length(to_nx(g), srcs)
    for v in range(g.n):
        assert d[v] == ref.get(v, INF)


def test_induced_triangle():
    sub, ids = induced_subgraph(complete_graph(4), [0, 2, 3])
    assert sub == cycle_graph(3)
    assert ids.tolist() == [0, 2, 3]


def test_induced_all_and_none():
    g = cycle_graph(7)
    sub, ids = induced_subgraph(g, range(7))
    assert sub == g and ids.tolist() == list(range(7))
    sub, ids = induced_subgraph(g, [])
    assert sub.n == 0 and len(ids) == 0


@given(graphs(), st.data())
def test_induced_edges_are_original_edges(g, data):
    keep = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    sub, ids = induced_subgraph(g, keep)
    orig = {tuple(e) for e in g.edges().tolist()}
    mapped = {tuple(sorted((ids[u], ids[v]))) for u, v in sub.edges().tolist()}
    assert mapped == {e for e in orig if e[0] in keep and e[1] in keep}


def test_disjoint_union():
    g = disjoint_union([cycle_graph(3), cycle_graph(3)])
    assert (g.n, g.m, connected_components(g).count) == (6, 6, 2)
    h = cycle_graph(5)
    assert disjoint_union([h]) == h
    assert disjoint_union([]).n == 0


@settings(max_examples=30)
@given(st.lists(graphs(max_n=8), max_size=4))
def test_disjoint_union_counts(parts):
    g = disjoint_union(parts)
    assert g.n == sum(p.n for p in parts) and g.m == sum(p.m for p in parts)
    assert connected_components(g).count == sum(connected_components(p).count for p in parts)


def test_edges_sorted_ascending():
    g = Graph.from_edges(4, [(3, 2), (1, 0), (0, 3)])
    e = g.edges()
    assert e.tolist() == [[0, 1], [0, 3], [2, 3]]
    assert np.all(e[:, 0] < e[:, 1])
