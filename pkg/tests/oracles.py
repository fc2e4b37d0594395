"""Reference implementations used only by the tests.

Each one takes a different route from the library code it checks: subset
enumeration, networkx, or plain Python loops.
"""

from __future__ import annotations

import itertools
import math

import networkx as nx
import numpy as np

from twocore.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges().tolist())
    return h


def brute_coreness(g: Graph) -> list[int]:
    """max k such that some vertex subset with min internal degree >= k contains v."""
    adj = [set(g.neighbors(u).tolist()) for u in range(g.n)]
    best = [0] * g.n
    for mask in range(1, 1 << g.n):
        verts = [u for u in range(g.n) if mask >> u & 1]
        k = min(sum(1 for w in adj[u] if mask >> w & 1) for u in verts)
        for u in verts:
            best[u] = max(best[u], k)
    return best


def nx_two_core(g: Graph) -> set[int]:
    return set(nx.k_core(to_nx(g), 2).nodes)


def ball_oracle(g: Graph, v: int, K: int) -> tuple[set[int], int, bool, list[int]]:
    """Largest full BFS ball with at most K vertices: (members, radius, truncated, frontier)."""
    dist = nx.single_source_shortest_path_length(to_nx(g), v)
    levels: dict[int, int] = {}
    for d in dist.values():
        levels[d] = levels.get(d, 0) + 1
    R, total = 0, 1
    while R + 1 in levels and total + levels[R + 1] <= K:
        R += 1
        total += levels[R]
    members = {u for u, d in dist.items() if d <= R}
    trunc = (R + 1) in levels
    frontier = sorted(u for u, d in dist.items() if d == R) if trunc else []
    return members, R, trunc, frontier


def gadget_oracle(g: Graph, root: int, members, frontier) -> tuple[int, int]:
    """Replace each frontier ray by a pendant edge to a fresh triangle, peel with networkx."""
    h = to_nx(g).subgraph(members).copy()
    tag = 0
    gadgets = set()
    for f in frontier:
        a, b, c = ("g", tag, 0), ("g", tag, 1), ("g", tag, 2)
        tag += 1
        h.add_edges_from([(f, a), (a, b), (b, c), (c, a)])
        gadgets.add(a)
    core = nx.k_core(h, 2)
    if root not in core:
        return 0, 0
    comp = nx.node_connected_component(core, root)
    return 1, int(bool(comp & gadgets))


def matching_triangle_probability() -> float:
    """P(erased configuration model on degrees [2,2,2] is a triangle), by enumerating matchings."""
    stubs = [0, 0, 1, 1, 2, 2]

    def matchings(items):
        if not items:
            yield []
            return
        a = items[0]
        for i in range(1, len(items)):
            rest = items[1:i] + items[i + 1:]
            for m in matchings(rest):
                yield [(a, items[i])] + m

    total = tri = 0
    for m in matchings(list(range(6))):
        total += 1
        edges = {tuple(sorted((stubs[a], stubs[b]))) for a, b in m if stubs[a] != stubs[b]}
        tri += len(edges) == 3
    assert total == 15
    return tri / total


def poisson_fixed_point(lam: float, iters: int = 20000) -> float:
    """Largest root of z = 1 - exp(-lam z) by monotone iteration from z = 1."""
    z = 1.0
    for _ in range(iters):
        z = 1.0 - math.exp(-lam * z)
    return z


def brute_max_edge_disjoint(g: Graph, A, B) -> int:
    """Smallest edge set whose removal separates A from B (Menger), by enumeration."""
    edges = [tuple(e) for e in g.edges().tolist()]
    A, B = set(A), set(B)
    for k in range(len(edges) + 1):
        for cut in itertools.combinations(range(len(edges)), k):
            cs = set(cut)
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(e for i, e in enumerate(edges) if i not in cs)
            reach = set()
            for a in A:
                reach |= nx.node_connected_component(h, a)
            if not reach & B:
                return k
    raise AssertionError("unreachable")


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    iu = np.array([(i, j) for i in range(n) for j in range(i + 1, n)], dtype=np.int64).reshape(-1, 2)
    keep = rng.random(len(iu)) < p
    return Graph.from_edges(n, iu[keep])
