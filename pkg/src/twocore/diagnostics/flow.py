"""Edge-disjoint A-B paths by unit-capacity max-flow with BFS augmentation."""

from __future__ import annotations

import numpy as np
from numba import njit

from ..graph import Graph

_BIG = 1 << 40


@njit(cache=True)
def _max_flow(n_nodes, head, nxt_arc, to, cap, s, t):
    flow = 0
    pred = np.empty(n_nodes, dtype=np.int64)
    queue = np.empty(n_nodes, dtype=np.int64)
    while True:
        pred[:] = -1
        pred[s] = -2
        queue[0] = s
        qh, qt = 0, 1
        while qh < qt and pred[t] == -1:
            u = queue[qh]
            qh += 1
            a = head[u]
            while a != -1:
                w = to[a]
                if cap[a] > 0 and pred[w] == -1:
                    pred[w] = a
                    queue[qt] = w
                    qt += 1
                a = nxt_arc[a]
        if pred[t] == -1:
            return flow
        # every s-t path crosses at least one unit graph edge, so the bottleneck is 1
        w = t
        while w != s:
            a = pred[w]
            cap[a] -= 1
            cap[a ^ 1] += 1
            w = to[a ^ 1]
        flow += 1


def edge_disjoint_paths(g: Graph, A, B) -> int:
    """Maximum number of pairwise edge-disjoint paths from A to B (Menger)."""
    A = sorted({int(a) for a in A})
    B = sorted({int(b) for b in B})
    if not A or not B:
        raise ValueError("A and B must be nonempty")
    if set(A) & set(B):
        raise ValueError("A and B must be disjoint")
    s, t = g.n, g.n + 1
    e = g.edges()
    # arcs 2i, 2i+1 are mutual reverses; an undirected unit edge is two unit arcs
    src = [e[:, 0], e[:, 1]]
    dst = [e[:, 1], e[:, 0]]
    caps = [np.ones(len(e), dtype=np.int64), np.ones(len(e), dtype=np.int64)]
    a_arr, b_arr = np.array(A), np.array(B)
    src += [np.full(len(A), s), a_arr, b_arr, np.full(len(B), t)]
    dst += [a_arr, np.full(len(A), s), np.full(len(B), t), b_arr]
    caps += [np.full(len(A), _BIG), np.zeros(len(A), dtype=np.int64),
             np.full(len(B), _BIG), np.zeros(len(B), dtype=np.int64)]
    pairs_src = np.concatenate([src[0], src[2], src[4]])
    pairs_dst = np.concatenate([dst[0], dst[2], dst[4]])
    pairs_cap = np.concatenate([caps[0], caps[2], caps[4]])
    rev_cap = np.concatenate([caps[1], caps[3], caps[5]])
    k = len(pairs_src)
    to = np.empty(2 * k, dtype=np.int64)
    frm = np.empty(2 * k, dtype=np.int64)
    cap = np.empty(2 * k, dtype=np.int64)
    to[0::2], to[1::2] = pairs_dst, pairs_src
    frm[0::2], frm[1::2] = pairs_src, pairs_dst
    cap[0::2], cap[1::2] = pairs_cap, rev_cap
    n_nodes = g.n + 2
    head = np.full(n_nodes, -1, dtype=np.int64)
    nxt_arc = np.empty(2 * k, dtype=np.int64)
    for a in range(2 * k - 1, -1, -1):
        nxt_arc[a] = head[frm[a]]
        head[frm[a]] = a
    return int(_max_flow(n_nodes, head, nxt_arc, to, cap, s, t))
