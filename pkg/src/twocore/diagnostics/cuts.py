"""Search for (eps, delta)-cut witnesses: balanced bipartitions with few crossing edges.

The search is a heuristic, so a returned witness only upper-bounds the best
balanced cut.  It can refute weak expansion at a given size, never certify it.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from ..graph import Graph, connected_components


@dataclass(frozen=True)
class CutWitness:
    side_a: np.ndarray  # sorted vertex ids
    size_a: int
    size_b: int
    crossing: int
    epsilon_level: float
    delta_level: float


def crossing_edges(g: Graph, in_a: np.ndarray) -> int:
    e = g.edges()
    return int(np.count_nonzero(in_a[e[:, 0]] != in_a[e[:, 1]]))


def witness(g: Graph, in_a: np.ndarray) -> CutWitness:
    in_a = np.asarray(in_a, dtype=bool)
    a = int(in_a.sum())
    b = g.n - a
    if a == 0 or b == 0:
        raise ValueError("side A must be nonempty and proper")
    x = crossing_edges(g, in_a)
    return CutWitness(np.flatnonzero(in_a), a, b, x, min(a, b) / g.n, x / g.n)


def _local_search(g: Graph, in_a: np.ndarray, min_side: int, adj: list[set[int]]) -> np.ndarray:
    n = g.n
    deg = g.degree()
    ext = np.zeros(n, dtype=np.int64)
    e = g.edges()
    cut = in_a[e[:, 0]] != in_a[e[:, 1]]
    np.add.at(ext, e[cut, 0], 1)
    np.add.at(ext, e[cut, 1], 1)
    size_a = int(in_a.sum())

    def flip(u):
        nonlocal size_a
        in_a[u] = not in_a[u]
        size_a += 1 if in_a[u] else -1
        ext[u] = deg[u] - ext[u]
        for w in adj[u]:
            ext[w] += 1 if in_a[w] != in_a[u] else -1

    while True:
        gain = 2 * ext - deg  # crossing decrease when moving the vertex
        best, move = 0, None
        can_a = size_a - 1 >= min_side
        can_b = n - size_a - 1 >= min_side
        for u in np.flatnonzero(gain > 0):
            if (in_a[u] and can_a) or (not in_a[u] and can_b):
                if gain[u] > best:
                    best, move = int(gain[u]), (int(u),)
        # swaps keep both sizes fixed; restrict to the best boundary candidates per side
        bnd = np.flatnonzero(ext > 0)
        sa = bnd[in_a[bnd]]
        sb = bnd[~in_a[bnd]]
        sa = sa[np.argsort(-gain[sa], kind="stable")][:24]
        sb = sb[np.argsort(-gain[sb], kind="stable")][:24]
        for u in sa.tolist():
            for w in sb.tolist():
                gsw = gain[u] + gain[w] - (2 if w in adj[u] else 0)
                if gsw > best:
                    best, move = int(gsw), (u, w)
        if move is None:
            return in_a
        for u in move:
            flip(u)


def _grow_bfs(g: Graph, start: int, target: int, rng: np.random.Generator) -> np.ndarray:
    in_a = np.zeros(g.n, dtype=bool)
    seen = np.zeros(g.n, dtype=bool)
    queue = deque([start])
    seen[start] = True
    count = 0
    while count < target:
        if not queue:
            rest = np.flatnonzero(~seen)
            nxt = int(rest[rng.integers(len(rest))])
            seen[nxt] = True
            queue.append(nxt)
        u = queue.popleft()
        in_a[u] = True
        count += 1
        for w in g.neighbors(u).tolist():
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return in_a


def _pack_components(g: Graph, target: int) -> np.ndarray | None:
    cc = connected_components(g)
    if cc.count < 2:
        return None
    in_a = np.zeros(g.n, dtype=bool)
    size = 0
    for cid, s in sorted(cc.sizes.items(), key=lambda kv: (-kv[1], kv[0])):
        if size + s <= target:
            in_a[cc.label == cid] = True
            size += s
    return in_a if 0 < size < g.n else None


def find_balanced_cut(g: Graph, epsilon: float, iters: int = 20, seed: int = 0) -> CutWitness:
    """Best balanced bipartition found from several seeded starts plus local search.

    Both sides keep at least ``ceil(epsilon * n)`` vertices.
    """
    if not 0 < epsilon < 0.5:
        raise ValueError("epsilon must lie in (0, 1/2)")
    n = g.n
    min_side = max(1, math.ceil(epsilon * n))
    if n < 2 * min_side:
        raise ValueError("graph too small for the requested balance")
    rng = np.random.Generator(np.random.PCG64(seed))
    adj = [set(g.neighbors(u).tolist()) for u in range(n)]
    half = n // 2
    starts = []
    packed = _pack_components(g, half)
    if packed is not None and min(packed.sum(), n - packed.sum()) >= min_side:
        starts.append(packed)
    for k in range(iters):
        if k % 2 == 0:
            starts.append(_grow_bfs(g, int(rng.integers(n)), half, rng))
        else:
            in_a = np.zeros(n, dtype=bool)
            in_a[rng.permutation(n)[:half]] = True
            starts.append(in_a)
    best = None
    for s in starts:
        part = _local_search(g, s.copy(), min_side, adj)
        w = witness(g, part)
        if best is None or w.crossing < best.crossing:
            best = w
    return best
